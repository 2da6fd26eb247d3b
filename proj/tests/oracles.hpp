// Test-only oracles, kept independent of the implementation paths they
// check: generating functions by direct enumeration, Gaussian binomials
// by subset sums, and seeded random polynomial generators.

#pragma once

#include <random>
#include <utility>
#include <vector>

#include "csp/laurent.hpp"
#include "csp/qanalog.hpp"
#include "csp/signed_tableau.hpp"
#include "csp/tableau.hpp"

namespace oracle {

inline csp::LaurentPolynomial poly(
    std::initializer_list<std::pair<long long, long long>> terms) {
    csp::LaurentPolynomial p;
    for (const auto& [e, c] : terms) p += csp::LaurentPolynomial::monomial(c, e);
    return p;
}

/// Major index generating function by summing q^maj over the enumeration.
inline csp::LaurentPolynomial brute_maj_gf(const csp::Partition& shape) {
    csp::LaurentPolynomial gf;
    for (const auto& t : csp::enumerate_syt(shape))
        gf += csp::LaurentPolynomial::monomial(1, csp::maj(t));
    return gf;
}

/// Gaussian binomial as the subset-sum generating function:
/// sum over k-subsets S of {1..n} of q^(sum(S) - k(k+1)/2).
inline csp::LaurentPolynomial subset_sum_gaussian(int n, int k) {
    csp::LaurentPolynomial gf;
    for (const auto& subset : csp::k_subsets(n, k)) {
        long long total = 0;
        for (int v : subset) total += v;
        gf += csp::LaurentPolynomial::monomial(1, total - 1LL * k * (k + 1) / 2);
    }
    return gf;
}

/// Small random Laurent polynomial with exponents in [-4, 5] and
/// coefficients in [-6, 6].
inline csp::LaurentPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> num_terms(0, 6);
    std::uniform_int_distribution<long long> exp(-4, 5);
    std::uniform_int_distribution<long long> coeff(-6, 6);
    csp::LaurentPolynomial p;
    int terms = num_terms(rng);
    for (int i = 0; i < terms; ++i)
        p += csp::LaurentPolynomial::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace oracle
