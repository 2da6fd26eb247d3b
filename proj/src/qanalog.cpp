#include "csp/qanalog.hpp"

#include <stdexcept>

namespace csp {

LaurentPolynomial q_integer(long long n) {
    if (n < 0) throw std::domain_error("q_integer requires n >= 0");
    LaurentPolynomial p;
    for (long long i = 0; i < n; ++i) p += LaurentPolynomial::monomial(1, i);
    return p;
}

LaurentPolynomial q_factorial(long long n) {
    if (n < 0) throw std::domain_error("q_factorial requires n >= 0");
    LaurentPolynomial p(1);
    for (long long i = 2; i <= n; ++i) p *= q_integer(i);
    return p;
}

LaurentPolynomial q_binomial(long long n, long long k) {
    if (k < 0 || k > n) return {};
    return q_factorial(n).divided_exact(q_factorial(k) * q_factorial(n - k));
}

BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1;
    for (long long i = 0; i < k; ++i) num *= (n - i);
    return num / factorial(k);
}

BigInt syt_count_hook(const Partition& shape) {
    BigInt denom = 1;
    for (Cell c : shape.cells()) denom *= shape.hook_length(c);
    BigInt num = factorial(shape.size());
    if (num % denom != 0)
        throw std::logic_error("hook-length count is not an integer for " +
                               shape.to_string());
    return num / denom;
}

LaurentPolynomial maj_gf_hook(const Partition& shape) {
    LaurentPolynomial denom(1);
    for (Cell c : shape.cells()) denom *= q_integer(shape.hook_length(c));
    return q_factorial(shape.size()).divided_exact(denom).shifted(kappa(shape));
}

}  // namespace csp
