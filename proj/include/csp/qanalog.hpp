#pragma once

#include "csp/bigint.hpp"
#include "csp/laurent.hpp"
#include "csp/partition.hpp"

namespace csp {

/// [n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0.
LaurentPolynomial q_integer(long long n);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
LaurentPolynomial q_factorial(long long n);

/// Gaussian binomial [n choose k]_q for 0 <= k <= n, zero otherwise.
/// Computed by exact polynomial division of q-factorials.
LaurentPolynomial q_binomial(long long n, long long k);

BigInt factorial(long long n);
BigInt binomial(long long n, long long k);

/// Number of standard Young tableaux of the given shape: n! divided by
/// the product of all hook lengths (the division is exact).
BigInt syt_count_hook(const Partition& shape);

/// Major index generating function over SYT(shape):
/// q^kappa * [n]_q! / prod over cells of [hook]_q.
LaurentPolynomial maj_gf_hook(const Partition& shape);

}  // namespace csp
