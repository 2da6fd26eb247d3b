#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csp/bigint.hpp"

namespace csp {

/// Integer Laurent polynomial in q: a finitely supported map from integer
/// exponents (negative allowed) to BigInt coefficients. Stored dense over
/// its support range and trimmed at both ends, so equal values have equal
/// representations.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;                 // zero
    LaurentPolynomial(const BigInt& constant);     // NOLINT(google-explicit-constructor)
    LaurentPolynomial(long long constant) : LaurentPolynomial(BigInt(constant)) {}

    static LaurentPolynomial monomial(const BigInt& coeff, long long exp);

    bool is_zero() const { return coeffs_.empty(); }
    long long min_exponent() const;  // requires nonzero
    long long max_exponent() const;  // requires nonzero

    /// Coefficient of q^exp (zero outside the support).
    BigInt coeff(long long exp) const;

    /// Nonzero terms as (exponent, coefficient), ascending by exponent.
    std::vector<std::pair<long long, BigInt>> terms() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const BigInt& scalar);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) {
        a *= b;
        return a;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& s) {
        a *= s;
        return a;
    }
    LaurentPolynomial operator-() const;

    /// Multiplication by q^shift.
    LaurentPolynomial shifted(long long shift) const;

    /// Exact division; throws std::logic_error if the divisor is zero or
    /// the division leaves a remainder. The q-analogue identities in this
    /// library guarantee divisibility, so a remainder is a bug.
    LaurentPolynomial divided_exact(const LaurentPolynomial& divisor) const;

    BigInt value_at_one() const;
    bool has_nonnegative_coefficients() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
    }

    /// Canonical text: terms in increasing exponent order,
    /// e.g. "q^-1 + 2 + 3*q + q^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    long long min_exp_ = 0;
    std::vector<BigInt> coeffs_;  // coeffs_[i] multiplies q^(min_exp_+i)

    void trim();
};

}  // namespace csp
