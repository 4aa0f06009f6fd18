#include "kvalent/cycle_index.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kvalent {

BigInt factorial(int m) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& current,
                        std::vector<CycleType>& out) {
    if (remaining == 0) {
        CycleType ct;
        // current holds parts in nonincreasing order; fold into
        // (size, multiplicity) pairs with increasing part size.
        std::map<int, int> mult;
        for (int p : current) ++mult[p];
        ct.weight_denominator = 1;
        for (auto [size, count] : mult) {
            ct.parts.emplace_back(size, count);
            BigInt pow;
            mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(size),
                          static_cast<unsigned long>(count));
            ct.weight_denominator *= pow * factorial(count);
        }
        out.push_back(std::move(ct));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        collect_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CycleType> cycle_types(int m) {
    if (m < 0) throw std::invalid_argument("cycle_types: m must be >= 0");
    std::vector<CycleType> out;
    std::vector<int> current;
    collect_partitions(m, m, current, out);
    if (out.empty()) out.push_back(CycleType{{}, 1});  // m == 0
    return out;
}

Series substitute(int m, const Series& f, int N) {
    if (f.order() != N)
        throw std::invalid_argument("substitute: series order does not match N");
    const BigInt m_fact = factorial(m);

    // Powers of each stretched copy of f are built on demand and shared
    // across cycle types; powers[s][c] = stretch(f, s)^c.
    std::map<int, std::vector<Series>> powers;
    auto power_of_stretch = [&](int s, int c) -> const Series& {
        auto& tower = powers[s];
        if (tower.empty()) {
            tower.push_back(Series::constant(1, N));
            tower.push_back(f.stretch(s));
        }
        while (static_cast<int>(tower.size()) <= c)
            tower.push_back(tower.back() * tower[1]);
        return tower[static_cast<std::size_t>(c)];
    };

    // Accumulate m! times the answer, divide once at the end.
    Series acc(N);
    for (const CycleType& ct : cycle_types(m)) {
        BigInt weight = m_fact / ct.weight_denominator;
        if (ct.parts.empty()) {
            acc += Series::constant(weight, N);
            continue;
        }
        Series prod = power_of_stretch(ct.parts[0].first, ct.parts[0].second);
        for (std::size_t i = 1; i < ct.parts.size(); ++i)
            prod = prod * power_of_stretch(ct.parts[i].first, ct.parts[i].second);
        prod.scale(weight);
        acc += prod;
    }

    for (int n = 0; n <= N; ++n) {
        if (!mpz_divisible_p(acc[n].get_mpz_t(), m_fact.get_mpz_t()))
            throw std::logic_error("cycle index substitution: coefficient not divisible by m!");
        mpz_divexact(acc[static_cast<std::size_t>(n)].get_mpz_t(),
                     acc[static_cast<std::size_t>(n)].get_mpz_t(), m_fact.get_mpz_t());
    }
    return acc;
}

}  // namespace kvalent
