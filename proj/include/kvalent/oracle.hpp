#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kvalent/series.hpp"

namespace kvalent {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An unlabeled free tree in canonical form.
///
/// The encoding is a nested-parenthesis string rooted at the tree's
/// center: a node is "(" + its children's codes sorted lexicographically
/// + ")". A bicentered tree (odd diameter) is encoded as "[" + the two
/// halves' rooted codes in sorted order + "]", the halves taken on either
/// side of the central edge. Two trees are isomorphic iff their encodings
/// are equal.
struct CanonicalTree {
    int n = 0;
    std::string encoding;
    int max_degree = 0;
    int diameter = 0;

    bool operator==(const CanonicalTree&) const = default;
};

enum class CenterKind { Centered, Bicentered };

struct CenterClass {
    CenterKind kind;
    int diameter;
};

struct OracleCensus {
    BigInt centered;
    BigInt bicentered;
    std::map<int, BigInt> per_diameter;
};

// Generation is exhaustive; the hard cap keeps runtime at desk scale.
inline constexpr int kOracleNodeLimit = 18;

// One representative per isomorphism class of n-node free trees with every
// degree <= k, in deterministic (encoding-sorted) order. Pass k >= n-1 for
// unbounded degree. Throws ResourceLimitError above kOracleNodeLimit.
std::vector<CanonicalTree> generate_free_trees(int n, int k);

// Diameter parity decides the class: even diameter has a center node, odd
// diameter a bicentral edge.
CenterClass classify(const CanonicalTree& t);

OracleCensus oracle_census(int n, int k);

// Adjacency lists of the tree described by a canonical encoding.
std::vector<std::vector<int>> decode_tree(const std::string& encoding);

// Canonical encoding, diameter and max degree of an arbitrary free tree
// given by adjacency lists. Exposed for the canonicalization round-trip
// tests and for the labeled-tree cross-check.
CanonicalTree canonicalize(const std::vector<std::vector<int>>& adj);

}  // namespace kvalent
