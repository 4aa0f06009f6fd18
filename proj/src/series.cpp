#include "kvalent/series.hpp"

#include <stdexcept>
#include <string>

namespace kvalent {

namespace {

void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series truncation order mismatch: " +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

}  // namespace

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(const BigInt& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

const BigInt& Series::coefficient(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside [0, " + std::to_string(order()) + "]");
    return coeffs_[static_cast<std::size_t>(n)];
}

Series& Series::operator+=(const Series& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same_order(a, b);
    const std::size_t len = a.coeffs_.size();
    Series r(a.order());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeffs_[i] == 0) continue;
        const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
        for (std::size_t j = 0; j + i < len; ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
        }
    }
    return r;
}

Series Series::stretch(int d) const {
    if (d < 1) throw std::invalid_argument("stretch factor must be >= 1");
    if (d == 1) return *this;
    Series r(order());
    for (std::size_t n = 0; n * d < coeffs_.size(); ++n)
        r.coeffs_[n * d] = coeffs_[n];
    return r;
}

Series Series::shifted_up() const {
    Series r(order());
    for (std::size_t n = coeffs_.size() - 1; n > 0; --n)
        r.coeffs_[n] = coeffs_[n - 1];
    return r;
}

Series& Series::scale(const BigInt& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

bool Series::is_zero() const {
    for (const auto& v : coeffs_)
        if (v != 0) return false;
    return true;
}

bool Series::nonnegative() const {
    for (const auto& v : coeffs_)
        if (v < 0) return false;
    return true;
}

}  // namespace kvalent
