#include "kvalent/enumerator.hpp"

#include <stdexcept>

#include "kvalent/cycle_index.hpp"

namespace kvalent {

namespace {

void require_valency(int k) {
    if (k < 2) throw std::invalid_argument("valency bound k must be >= 2");
}

// (1 + z S_k(T_{h-1})) - (1 + z S_k(T_{h-2})) - (T_{h-1} - T_{h-2})(T_{h-1} - 1):
// k-tuples of rooted trees of height <= h-1, minus those of height <= h-2,
// minus those with exactly one subtree of height h-1.
Series centered_formula(const Series& t_hm1, const Series& t_hm2,
                        const Series& sk_hm1, const Series& sk_hm2) {
    const int N = t_hm1.order();
    const Series one = Series::constant(1, N);
    Series result = (one + sk_hm1.shifted_up()) - (one + sk_hm2.shifted_up()) -
                    (t_hm1 - t_hm2) * (t_hm1 - one);
    if (!result.nonnegative())
        throw std::logic_error("centered diameter series has a negative coefficient");
    return result;
}

// S_2 applied to the height-exactly-h series.
Series bicentered_formula(const Series& t_h, const Series& t_hm1) {
    Series result = substitute(2, t_h - t_hm1, t_h.order());
    if (!result.nonnegative())
        throw std::logic_error("bicentered diameter series has a negative coefficient");
    return result;
}

// Memoizes the height-bounded rooted-tree series for one (k, N) run.
class RootedTowers {
public:
    RootedTowers(int k, int N) : k_(k), n_(N) {
        towers_.push_back(Series(N));                // T_{-2} = 0
        towers_.push_back(Series::constant(1, N));   // T_{-1} = 1
    }

    // T_h, h >= -2.
    const Series& at(int h) {
        while (static_cast<int>(towers_.size()) <= h + 2) {
            const Series& prev = towers_.back();
            towers_.push_back(Series::constant(1, n_) +
                              substitute(k_ - 1, prev, n_).shifted_up());
        }
        return towers_[static_cast<std::size_t>(h + 2)];
    }

private:
    int k_;
    int n_;
    std::vector<Series> towers_;
};

}  // namespace

Series rooted_bounded_height(int k, int h, int N) {
    require_valency(k);
    if (h < -2) throw std::invalid_argument("height must be >= -2");
    RootedTowers towers(k, N);
    return towers.at(h);
}

Series centered_by_diameter(int k, int h, int N) {
    require_valency(k);
    if (h < 0) throw std::invalid_argument("half-diameter must be >= 0");
    RootedTowers towers(k, N);
    return centered_formula(towers.at(h - 1), towers.at(h - 2),
                            substitute(k, towers.at(h - 1), N),
                            substitute(k, towers.at(h - 2), N));
}

Series bicentered_by_diameter(int k, int h, int N) {
    require_valency(k);
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    RootedTowers towers(k, N);
    return bicentered_formula(towers.at(h), towers.at(h - 1));
}

Series centered(int k, int N) {
    require_valency(k);
    RootedTowers towers(k, N);
    Series sum(N);
    // C_{2h} has no terms below z^{2h+1}.
    Series sk_hm2 = substitute(k, towers.at(-2), N);
    Series sk_hm1 = substitute(k, towers.at(-1), N);
    for (int h = 0; 2 * h + 1 <= N; ++h) {
        sum += centered_formula(towers.at(h - 1), towers.at(h - 2), sk_hm1, sk_hm2);
        if (2 * (h + 1) + 1 <= N) {
            sk_hm2 = std::move(sk_hm1);
            sk_hm1 = substitute(k, towers.at(h), N);
        }
    }
    return sum;
}

Series bicentered(int k, int N) {
    require_valency(k);
    RootedTowers towers(k, N);
    Series sum(N);
    // B_{2h+1} has no terms below z^{2h+2}.
    for (int h = 0; 2 * h + 2 <= N; ++h)
        sum += bicentered_formula(towers.at(h), towers.at(h - 1));
    return sum;
}

CensusTable census(int k, int max_n, bool with_breakdown) {
    require_valency(k);
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    const int N = max_n;

    CensusTable table;
    table.k = k;
    table.max_n = max_n;
    table.rows.resize(static_cast<std::size_t>(max_n));
    table.has_breakdown = with_breakdown;
    if (with_breakdown) table.by_diameter.resize(static_cast<std::size_t>(max_n));

    RootedTowers towers(k, N);
    Series centered_sum(N);
    Series bicentered_sum(N);

    auto record = [&](const Series& s, int diameter) {
        if (!with_breakdown) return;
        for (int n = 1; n <= max_n; ++n)
            if (s[static_cast<std::size_t>(n)] != 0)
                table.by_diameter[static_cast<std::size_t>(n - 1)][diameter] =
                    s[static_cast<std::size_t>(n)];
    };

    // S_k(T_{h-1}) is reused as next iteration's S_k(T_{h-2}).
    Series sk_hm2 = substitute(k, towers.at(-2), N);
    Series sk_hm1 = substitute(k, towers.at(-1), N);
    for (int h = 0; 2 * h + 1 <= N; ++h) {
        Series c = centered_formula(towers.at(h - 1), towers.at(h - 2), sk_hm1, sk_hm2);
        centered_sum += c;
        record(c, 2 * h);
        if (2 * h + 2 <= N) {
            Series b = bicentered_formula(towers.at(h), towers.at(h - 1));
            bicentered_sum += b;
            record(b, 2 * h + 1);
        }
        if (2 * (h + 1) + 1 <= N) {
            sk_hm2 = std::move(sk_hm1);
            sk_hm1 = substitute(k, towers.at(h), N);
        }
    }

    for (int n = 1; n <= max_n; ++n) {
        CensusRow& row = table.rows[static_cast<std::size_t>(n - 1)];
        row.centered = centered_sum[static_cast<std::size_t>(n)];
        row.bicentered = bicentered_sum[static_cast<std::size_t>(n)];
        row.total = row.centered + row.bicentered;
    }
    return table;
}

}  // namespace kvalent
