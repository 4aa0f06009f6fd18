#pragma once

#include <map>
#include <vector>

#include "kvalent/series.hpp"

namespace kvalent {

struct CensusRow {
    BigInt centered;
    BigInt bicentered;
    BigInt total;

    bool operator==(const CensusRow&) const = default;
};

/// Per-n counts of k-valent trees, split into centered and bicentered.
/// rows[i] holds the counts for n = i + 1. When built with a breakdown,
/// by_diameter[i] maps each diameter d to the number of (i+1)-node trees
/// of that diameter (zero entries omitted).
struct CensusTable {
    int k = 0;
    int max_n = 0;
    std::vector<CensusRow> rows;
    bool has_breakdown = false;
    std::vector<std::map<int, BigInt>> by_diameter;
};

// T_h: generating function for (k-1)-ary rooted trees of height at most h,
// counted by node count, the empty tree included as the constant term.
// h = -1 gives the constant 1; h = -2 gives the zero series.
Series rooted_bounded_height(int k, int h, int N);

// C_{2h}: centered k-valent trees of diameter exactly 2h.
Series centered_by_diameter(int k, int h, int N);

// B_{2h+1}: bicentered k-valent trees of diameter exactly 2h+1.
Series bicentered_by_diameter(int k, int h, int N);

// Sums over all diameters contributing up to order N.
Series centered(int k, int N);
Series bicentered(int k, int N);

CensusTable census(int k, int max_n, bool with_breakdown = false);

}  // namespace kvalent
