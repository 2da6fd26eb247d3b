#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csp/bigint.hpp"
#include "csp/laurent.hpp"

namespace csp {

/// s-th cyclotomic polynomial, monic of degree phi(s). Computed by
/// exact division of x^s - 1 by the cyclotomic polynomials of the proper
/// divisors of s; results are cached process-wide.
const LaurentPolynomial& cyclotomic(int s);

int euler_phi(int s);

/// An element of Z[zeta] for zeta a primitive s-th root of unity,
/// represented by its residue modulo the s-th cyclotomic polynomial.
/// Arithmetic is exact, so integrality of a value is decidable.
class CyclotomicElement {
public:
    /// Reduces the given coefficients of 1, zeta, zeta^2, ... modulo
    /// the cyclotomic polynomial of the order.
    CyclotomicElement(int order, std::vector<BigInt> coefficients);

    static CyclotomicElement zero(int order) { return CyclotomicElement(order, {}); }
    static CyclotomicElement from_integer(int order, const BigInt& value);
    static CyclotomicElement zeta_power(int order, long long exponent);

    int order() const { return order_; }

    /// Residue coefficients (index = power of zeta), trimmed of trailing
    /// zeros; degree is strictly below phi(order).
    const std::vector<BigInt>& residue() const { return residue_; }

    bool is_zero() const { return residue_.empty(); }

    /// The rational integer this element equals, if it is one. Exact:
    /// the powers of zeta below phi(s) form an integral basis.
    std::optional<BigInt> as_integer() const;

    CyclotomicElement operator+(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-(const CyclotomicElement& rhs) const;
    CyclotomicElement operator*(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-() const;
    CyclotomicElement pow(unsigned long long e) const;

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.order_ == b.order_ && a.residue_ == b.residue_;
    }

    /// Rendering in powers of "z", e.g. "2 - z + z^2"; "0" when zero.
    std::string to_string() const;

private:
    int order_ = 1;
    std::vector<BigInt> residue_;

    void reduce();
};

inline std::optional<BigInt> as_integer(const CyclotomicElement& v) {
    return v.as_integer();
}

/// Evaluates P at xi^d where xi is a primitive n-th root of unity:
/// with s = n/gcd(n,d), folds every exponent of P modulo s onto the
/// canonical primitive s-th root and reduces modulo the s-th cyclotomic
/// polynomial. d = 0 yields the evaluation at 1.
CyclotomicElement eval_at_root(const LaurentPolynomial& P, long long n, long long d);

}  // namespace csp
