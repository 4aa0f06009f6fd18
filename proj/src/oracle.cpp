#include "kvalent/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kvalent {

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) child_codes.push_back(rooted_code(adj, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// Iterative leaf stripping: after t simultaneous rounds either one node
// remains (diameter 2t) or two adjacent nodes remain (diameter 2t+1).
void find_centers(const std::vector<std::vector<int>>& adj,
                  std::vector<int>& centers, int& diameter) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(adj.size());
    std::vector<char> alive(adj.size(), 1);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) frontier.push_back(v);
    }
    int remaining = n;
    int rounds = 0;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            alive[static_cast<std::size_t>(v)] = 0;
            --remaining;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (alive[static_cast<std::size_t>(w)] && --degree[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        }
        frontier = std::move(next);
        ++rounds;
    }
    centers.clear();
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) centers.push_back(v);
    diameter = centers.size() == 1 ? 2 * rounds : 2 * rounds + 1;
}

// Catalog of unlabeled rooted trees with bounded out-degree, one entry per
// isomorphism class; children are recorded as catalog ids in nonincreasing
// order, which makes each multiset unique by construction.
struct RootedShape {
    int size;
    std::vector<int> children;
};

struct Catalog {
    std::vector<RootedShape> shapes;
    std::vector<std::vector<int>> by_size;
};

Catalog build_catalog(int max_size, int branch) {
    Catalog cat;
    cat.by_size.assign(static_cast<std::size_t>(std::max(max_size, 0)) + 1, {});
    if (max_size < 1) return cat;
    cat.shapes.push_back({1, {}});
    cat.by_size[1] = {0};
    std::vector<int> chosen;
    for (int s = 2; s <= max_size; ++s) {
        std::function<void(int, int, int)> pick = [&](int remaining, int max_id, int slots) {
            if (remaining == 0) {
                cat.by_size[static_cast<std::size_t>(s)].push_back(
                    static_cast<int>(cat.shapes.size()));
                cat.shapes.push_back({s, chosen});
                return;
            }
            if (slots == 0) return;
            for (int id = max_id; id >= 0; --id) {
                if (cat.shapes[static_cast<std::size_t>(id)].size > remaining) continue;
                chosen.push_back(id);
                pick(remaining - cat.shapes[static_cast<std::size_t>(id)].size, id, slots - 1);
                chosen.pop_back();
            }
        };
        pick(s - 1, static_cast<int>(cat.shapes.size()) - 1, branch);
    }
    return cat;
}

int attach_shape(const Catalog& cat, int id, std::vector<std::vector<int>>& adj) {
    const int v = static_cast<int>(adj.size());
    adj.emplace_back();
    for (int child : cat.shapes[static_cast<std::size_t>(id)].children) {
        const int w = attach_shape(cat, child, adj);
        adj[static_cast<std::size_t>(v)].push_back(w);
        adj[static_cast<std::size_t>(w)].push_back(v);
    }
    return v;
}

}  // namespace

CanonicalTree canonicalize(const std::vector<std::vector<int>>& adj) {
    CanonicalTree t;
    t.n = static_cast<int>(adj.size());
    for (const auto& nbrs : adj)
        t.max_degree = std::max(t.max_degree, static_cast<int>(nbrs.size()));

    std::vector<int> centers;
    find_centers(adj, centers, t.diameter);
    if (centers.size() == 1) {
        t.encoding = rooted_code(adj, centers[0], -1);
    } else {
        std::string a = rooted_code(adj, centers[0], centers[1]);
        std::string b = rooted_code(adj, centers[1], centers[0]);
        if (b < a) std::swap(a, b);
        t.encoding = "[" + a + b + "]";
    }
    return t;
}

std::vector<std::vector<int>> decode_tree(const std::string& encoding) {
    std::vector<std::vector<int>> adj;
    std::size_t pos = 0;
    std::function<int()> parse = [&]() -> int {
        if (pos >= encoding.size() || encoding[pos] != '(')
            throw std::invalid_argument("malformed tree encoding");
        ++pos;
        const int v = static_cast<int>(adj.size());
        adj.emplace_back();
        while (pos < encoding.size() && encoding[pos] == '(') {
            const int w = parse();
            adj[static_cast<std::size_t>(v)].push_back(w);
            adj[static_cast<std::size_t>(w)].push_back(v);
        }
        if (pos >= encoding.size() || encoding[pos] != ')')
            throw std::invalid_argument("malformed tree encoding");
        ++pos;
        return v;
    };

    if (!encoding.empty() && encoding[0] == '[') {
        ++pos;
        const int a = parse();
        const int b = parse();
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        if (pos + 1 != encoding.size() || encoding[pos] != ']')
            throw std::invalid_argument("malformed tree encoding");
    } else {
        parse();
        if (pos != encoding.size())
            throw std::invalid_argument("malformed tree encoding");
    }
    return adj;
}

std::vector<CanonicalTree> generate_free_trees(int n, int k) {
    if (n < 1) throw std::invalid_argument("node count must be >= 1");
    if (k < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (n > kOracleNodeLimit)
        throw ResourceLimitError("free-tree generation is limited to n <= " +
                                 std::to_string(kOracleNodeLimit));

    if (n == 1) return {canonicalize({{}})};

    // Every free tree rooted anywhere has root degree <= k and out-degree
    // <= k-1 below the root, so enumerating root multisets over the
    // (k-1)-bounded catalog reaches every isomorphism class; duplicates
    // (same tree, different root) are merged by canonical encoding.
    const Catalog cat = build_catalog(n - 1, k - 1);
    std::map<std::string, CanonicalTree> seen;
    std::vector<int> chosen;
    std::function<void(int, int, int)> pick = [&](int remaining, int max_id, int slots) {
        if (remaining == 0) {
            std::vector<std::vector<int>> adj;
            adj.emplace_back();
            for (int id : chosen) {
                const int w = attach_shape(cat, id, adj);
                adj[0].push_back(w);
                adj[static_cast<std::size_t>(w)].push_back(0);
            }
            CanonicalTree t = canonicalize(adj);
            seen.emplace(t.encoding, std::move(t));
            return;
        }
        if (slots == 0) return;
        for (int id = max_id; id >= 0; --id) {
            if (cat.shapes[static_cast<std::size_t>(id)].size > remaining) continue;
            chosen.push_back(id);
            pick(remaining - cat.shapes[static_cast<std::size_t>(id)].size, id, slots - 1);
            chosen.pop_back();
        }
    };
    pick(n - 1, static_cast<int>(cat.shapes.size()) - 1, k);

    std::vector<CanonicalTree> out;
    out.reserve(seen.size());
    for (auto& [code, tree] : seen) out.push_back(std::move(tree));
    return out;
}

CenterClass classify(const CanonicalTree& t) {
    return {t.diameter % 2 == 0 ? CenterKind::Centered : CenterKind::Bicentered,
            t.diameter};
}

OracleCensus oracle_census(int n, int k) {
    OracleCensus result;
    for (const CanonicalTree& t : generate_free_trees(n, k)) {
        const CenterClass c = classify(t);
        if (c.kind == CenterKind::Centered)
            ++result.centered;
        else
            ++result.bicentered;
        ++result.per_diameter[c.diameter];
    }
    return result;
}

}  // namespace kvalent
