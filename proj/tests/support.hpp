#pragma once

// Shared helpers and independent oracles for the test suites. Everything
// here deliberately avoids the library's series/cycle-index code paths so
// it can serve as a cross-check.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kvalent/oracle.hpp"
#include "kvalent/series.hpp"

namespace kvalent::testing {

inline Series make_series(const std::vector<long>& coeffs) {
    Series s(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s[i] = coeffs[i];
    return s;
}

inline Series random_series(std::mt19937& rng, int order, long max_coeff,
                            long min_coeff = 0) {
    std::uniform_int_distribution<long> dist(min_coeff, max_coeff);
    Series s(order);
    for (int i = 0; i <= order; ++i) s[static_cast<std::size_t>(i)] = dist(rng);
    return s;
}

// Untruncated schoolbook polynomial product, as a plain coefficient vector.
inline std::vector<long> poly_mul(const std::vector<long>& a,
                                  const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Counts unordered m-multisets with total weight n, where f[w] gives the
// number of distinguishable object flavors of weight w. Explicit
// enumeration over nondecreasing flavor indices; independent of the
// cycle-index machinery.
inline long multiset_count(const std::vector<long>& f, int m, int n) {
    struct Object {
        int weight;
    };
    std::vector<Object> objects;
    for (std::size_t w = 0; w < f.size(); ++w)
        for (long j = 0; j < f[w]; ++j) objects.push_back({static_cast<int>(w)});

    long count = 0;
    auto rec = [&](auto&& self, std::size_t start, int slots, int weight) -> void {
        if (slots == 0) {
            if (weight == n) ++count;
            return;
        }
        for (std::size_t i = start; i < objects.size(); ++i) {
            if (weight + objects[i].weight > n) continue;
            self(self, i, slots - 1, weight + objects[i].weight);
        }
    };
    rec(rec, 0, m, 0);
    return count;
}

// Second, simpler generation path for free trees: every parent array with
// parent[i] < i describes a labeled tree, and every unlabeled tree on n
// nodes appears among them. Counting distinct canonical encodings gives
// the number of isomorphism classes (unbounded degree).
inline long count_free_trees_by_parent_arrays(int n) {
    if (n == 1) return 1;
    std::set<std::string> codes;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
            for (int v = 1; v < n; ++v) {
                adj[static_cast<std::size_t>(v)].push_back(parent[static_cast<std::size_t>(v)]);
                adj[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
            }
            codes.insert(canonicalize(adj).encoding);
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[static_cast<std::size_t>(i)] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return static_cast<long>(codes.size());
}

// Relabels a tree by a random permutation of its nodes.
inline std::vector<std::vector<int>> shuffle_labels(
    const std::vector<std::vector<int>>& adj, std::mt19937& rng) {
    std::vector<int> perm(adj.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> out(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (int w : adj[v])
            out[static_cast<std::size_t>(perm[v])].push_back(perm[static_cast<std::size_t>(w)]);
    return out;
}

}  // namespace kvalent::testing
