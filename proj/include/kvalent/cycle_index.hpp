#pragma once

#include <utility>
#include <vector>

#include "kvalent/series.hpp"

namespace kvalent {

/// One monomial of the cycle index Z(S_m): a partition of m stored as
/// (part_size, multiplicity) pairs in increasing part_size, together with
/// z_lambda = prod part_size^multiplicity * multiplicity!. The monomial's
/// weight in Z(S_m) is 1/z_lambda, and m!/z_lambda permutations of S_m
/// have this cycle type.
struct CycleType {
    std::vector<std::pair<int, int>> parts;
    BigInt weight_denominator;
};

BigInt factorial(int m);

// All partitions of m with their z_lambda weights; m = 0 yields the single
// empty partition with weight_denominator 1.
std::vector<CycleType> cycle_types(int m);

/// Substitutes f into the cycle index of S_m: the result counts unordered
/// m-multisets of objects weighted by f. Computed over a common denominator
/// of m!; the final division must be exact or a std::logic_error is thrown.
/// f must have truncation order N.
Series substitute(int m, const Series& f, int N);

}  // namespace kvalent
