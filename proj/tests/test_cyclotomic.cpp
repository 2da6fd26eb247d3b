#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "csp/cyclotomic.hpp"
#include "csp/qanalog.hpp"
#include "oracles.hpp"

using namespace csp;
using oracle::poly;

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({{0, -1}, {1, 1}}));
    CHECK(cyclotomic(2) == poly({{0, 1}, {1, 1}}));
    CHECK(cyclotomic(4) == poly({{0, 1}, {2, 1}}));
    CHECK(cyclotomic(6) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(cyclotomic(12) == poly({{0, 1}, {2, -1}, {4, 1}}));
}

TEST_CASE("product of cyclotomics over divisors recovers x^s - 1") {
    for (int s = 1; s <= 30; ++s) {
        LaurentPolynomial prod(1);
        for (int d = 1; d <= s; ++d)
            if (s % d == 0) prod *= cyclotomic(d);
        CHECK(prod == poly({{0, -1}}) + LaurentPolynomial::monomial(1, s));
    }
}

TEST_CASE("euler phi from the cyclotomic degree") {
    const int expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int s = 1; s <= 12; ++s) CHECK(euler_phi(s) == expected[s]);
}

TEST_CASE("evaluation of the Gaussian binomial at fourth roots") {
    auto b = q_binomial(4, 2);
    CHECK(eval_at_root(b, 4, 1).is_zero());
    CHECK(eval_at_root(b, 4, 2).as_integer() == BigInt(2));
    CHECK(eval_at_root(b, 4, 0).as_integer() == BigInt(6));  // value at 1
}

TEST_CASE("evaluation at d=0 sums the coefficients") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = oracle::random_poly(rng);
        CHECK(eval_at_root(p, 7, 0).as_integer() == p.value_at_one());
    }
}

TEST_CASE("integer recognition") {
    CHECK(CyclotomicElement::zero(5).as_integer() == BigInt(0));
    CHECK(CyclotomicElement::from_integer(3, 3).as_integer() == BigInt(3));
    CHECK_FALSE(CyclotomicElement::zeta_power(4, 1).as_integer().has_value());
    // zeta^2 = -1 at order 4 is an integer again
    CHECK(CyclotomicElement::zeta_power(4, 2).as_integer() == BigInt(-1));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(777);
    for (long long n : {1, 2, 3, 4, 6, 12}) {
        for (long long d = 0; d < n; ++d) {
            for (int trial = 0; trial < 20; ++trial) {
                auto p = oracle::random_poly(rng);
                auto q = oracle::random_poly(rng);
                CHECK(eval_at_root(p * q, n, d) ==
                      eval_at_root(p, n, d) * eval_at_root(q, n, d));
                CHECK(eval_at_root(p + q, n, d) ==
                      eval_at_root(p, n, d) + eval_at_root(q, n, d));
            }
        }
    }
}

TEST_CASE("evaluation depends only on gcd(n, d)") {
    std::mt19937 rng(13579);
    for (long long n : {2, 4, 6, 9, 12}) {
        for (long long d = 0; d < 2 * n; ++d) {
            auto p = oracle::random_poly(rng);
            CHECK(eval_at_root(p, n, d) == eval_at_root(p, n, std::gcd(n, d)));
        }
    }
}

TEST_CASE("negative exponents fold modulo the order") {
    // q^-1 at a primitive cube root equals q^2
    auto p = LaurentPolynomial::monomial(1, -1);
    CHECK(eval_at_root(p, 3, 1) == CyclotomicElement::zeta_power(3, 2));
}

TEST_CASE("order mismatch in ring operations is rejected") {
    auto a = CyclotomicElement::from_integer(3, 1);
    auto b = CyclotomicElement::from_integer(4, 1);
    CHECK_THROWS_AS(a + b, std::logic_error);
    CHECK_THROWS_AS(a * b, std::logic_error);
}

TEST_CASE("evaluation at a root whose order does not divide n can be nonzero") {
    // the maj generating function of 3,3 at a primitive 4th root is -1,
    // so the vanishing statement genuinely needs d | n
    auto f = maj_gf_hook(Partition::parse("3,3"));
    CHECK(eval_at_root(f, 4, 1).as_integer() == BigInt(-1));
}

TEST_CASE("rendering") {
    CHECK(CyclotomicElement::zero(4).to_string() == "0");
    CHECK(CyclotomicElement::zeta_power(4, 1).to_string() == "z");
    auto v = CyclotomicElement(5, {BigInt(2), BigInt(-1), BigInt(0), BigInt(3)});
    CHECK(v.to_string() == "2 - z + 3*z^3");
}
