#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace kvalent {

using BigInt = mpz_class;

/// Dense truncated power series in z with exact integer coefficients.
/// Index n holds the coefficient of z^n; everything above the truncation
/// order is discarded. All binary operations require matching orders.
class Series {
public:
    // Zero series of the given truncation order.
    explicit Series(int order);

    static Series constant(const BigInt& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Checked access; throws std::out_of_range for n outside [0, order].
    const BigInt& coefficient(int n) const;

    // Unchecked access for hot loops.
    const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
    BigInt& operator[](std::size_t n) { return coeffs_[n]; }

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }

    // Cauchy product truncated to the common order.
    friend Series operator*(const Series& a, const Series& b);

    // Substitutes z -> z^d: coefficient n moves to d*n, order unchanged.
    Series stretch(int d) const;

    // Multiplies by z: shifts every coefficient up one degree, the top
    // coefficient falls off.
    Series shifted_up() const;

    Series& scale(const BigInt& c);

    bool is_zero() const;
    bool nonnegative() const;

    bool operator==(const Series&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

}  // namespace kvalent
