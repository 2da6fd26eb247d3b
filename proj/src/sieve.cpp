#include "csp/sieve.hpp"

#include <algorithm>
#include <numeric>

#include "csp/border_strip.hpp"
#include "csp/qanalog.hpp"

namespace csp {

CyclicAction::CyclicAction(long long order, std::vector<unsigned> perm)
    : order_(order), perm_(std::move(perm)) {
    if (order_ < 1) throw std::domain_error("action order must be positive");
    std::vector<bool> hit(perm_.size(), false);
    for (unsigned image : perm_) {
        if (image >= perm_.size() || hit[image])
            throw std::domain_error("generator map is not a bijection");
        hit[image] = true;
    }
    std::vector<bool> seen(perm_.size(), false);
    for (size_t i = 0; i < perm_.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (size_t j = i; !seen[j]; j = perm_[j]) {
            seen[j] = true;
            ++len;
        }
        if (order_ % len != 0)
            throw std::domain_error("generator^order is not the identity (cycle of length " +
                                    std::to_string(len) + ")");
        cycle_elements_[len] += len;
    }
}

long long CyclicAction::fixed_points(long long d) const {
    if (d < 0) throw std::domain_error("power must be non-negative");
    long long total = 0;
    for (const auto& [len, count] : cycle_elements_)
        if (d % len == 0) total += count;  // d = 0 counts everything
    return total;
}

CyclicAction product_action(const CyclicAction& a, const CyclicAction& b) {
    if (a.order() != b.order())
        throw std::domain_error("product of actions with different orders (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
    const size_t nb = b.size();
    std::vector<unsigned> perm(a.size() * nb);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < nb; ++j)
            perm[i * nb + j] =
                static_cast<unsigned>(a.permutation()[i] * nb + b.permutation()[j]);
    return CyclicAction(a.order(), std::move(perm));
}

CyclicAction subset_cyc_action(int n, int k) {
    auto subsets = k_subsets(n, k);
    return make_cyclic_action(subsets, n,
                              [n](const std::vector<int>& s) { return cyc_subset(s, n); });
}

CspReport verify_csp_triple(const CyclicAction& action, const LaurentPolynomial& P) {
    CspReport report;
    report.n = action.order();
    report.polynomial = P;
    report.verdict = true;
    for (long long d = 0; d < action.order(); ++d) {
        CspRow row;
        row.d = d;
        long long g = std::gcd(action.order(), d);
        row.s = action.order() / g;
        row.fix = action.fixed_points(d);
        if (row.fix != action.fixed_points(g))
            throw std::logic_error("fixed-point count is not gcd-determined");
        row.evaluation = eval_at_root(P, action.order(), d).as_integer();
        row.match = row.evaluation && *row.evaluation == row.fix;
        report.verdict = report.verdict && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

RectangleSieve::RectangleSieve(const Partition& shape)
    : shape_(shape),
      syt_action_([&shape] {
          if (!shape.rectangle())
              throw std::domain_error("shape " + shape.to_string() +
                                      " is not rectangular");
          auto all = enumerate_syt(shape);
          return CyclicAction(shape.size(), promotion_permutation(all));
      }()),
      super_(shape),
      classical_(maj_gf_hook(shape)) {}

CspReport RectangleSieve::theorem_a(int k) const {
    const long long total = shape_.size();
    LaurentPolynomial P = super_.grade(k).shifted(gamma(total, k) - kappa(shape_));
    CspReport report = verify_csp_triple(
        product_action(syt_action_, subset_cyc_action(static_cast<int>(total), k)), P);
    report.theorem = "theorem-a";
    report.shape = shape_.to_string();
    report.k = k;
    return report;
}

CspReport RectangleSieve::trivial_csp(int k) const {
    const long long total = shape_.size();
    LaurentPolynomial P =
        (classical_ * q_binomial(total, k)).shifted(-kappa(shape_));
    CspReport report = verify_csp_triple(
        product_action(syt_action_, subset_cyc_action(static_cast<int>(total), k)), P);
    report.theorem = "trivial-csp";
    report.shape = shape_.to_string();
    report.k = k;
    return report;
}

CspReport verify_theorem_a(const Partition& shape, int k) {
    return RectangleSieve(shape).theorem_a(k);
}

CspReport verify_trivial_csp(const Partition& shape, int k) {
    return RectangleSieve(shape).trivial_csp(k);
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(long long n) {
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // squared prime factor
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

BigInt OrbitProfile::total_elements() const {
    BigInt total = 0;
    for (const auto& [size, count] : orbit_counts) total += BigInt(size) * count;
    return total;
}

std::optional<OrbitProfile> realizable_orbit_profile(const LaurentPolynomial& P,
                                                     long long n) {
    if (n < 1) throw std::domain_error("order must be positive");
    const auto divs = divisors(n);
    std::map<long long, BigInt> fixed;  // e -> P(xi^e), the count fixed by g^e
    for (long long e : divs) {
        auto value = eval_at_root(P, n, e).as_integer();
        if (!value || *value < 0) return std::nullopt;
        fixed[e] = *value;
    }
    OrbitProfile profile;
    profile.n = n;
    BigInt total = 0;
    for (long long e : divs) {
        BigInt period_count = 0;  // elements of exact period e
        for (long long o : divisors(e)) period_count += mobius(e / o) * fixed[o];
        if (period_count < 0 || period_count % e != 0) return std::nullopt;
        profile.orbit_counts.emplace_back(e, period_count / e);
        total += period_count;
    }
    if (total != fixed[n])
        throw std::logic_error("orbit profile does not account for every element");
    return profile;
}

TheoremBVerification verify_theorem_b(const Partition& shape, long long m, long long k) {
    const long long n = shape.size();
    if (m < 1) throw std::domain_error("power m must be positive");
    if (k < 0 || k > n)
        throw std::domain_error("negative-entry count " + std::to_string(k) +
                                " outside 0.." + std::to_string(n));
    TheoremBVerification rec{shape, n, m, k, {}, true, false, std::nullopt, false, false};

    const LaurentPolynomial classical = maj_gf_hook(shape);
    for (long long d : divisors(n)) {
        auto value = eval_at_root(classical, n, d)
                         .pow(static_cast<unsigned long long>(m))
                         .as_integer();
        rec.condition_rows.push_back({d, value});
        if (!value || *value < 0) rec.condition_holds = false;
    }

    LaurentPolynomial grade = SuperGF(shape).grade(static_cast<int>(k)).shifted(gamma(n, k));
    LaurentPolynomial power(1);
    for (long long i = 0; i < m; ++i) power *= grade;
    rec.profile = realizable_orbit_profile(power, n);
    rec.realizable = rec.profile.has_value();

    rec.certificates_match = rec.condition_holds == rec.realizable;
    bool forward = !rec.condition_holds || rec.realizable;
    bool backward_at_zero = k != 0 || !rec.realizable || rec.condition_holds;
    rec.theorem_confirmed = forward && backward_at_zero;
    return rec;
}

TwistSignVerification verify_twist_sign(long long n, long long d, long long k) {
    if (d < 1 || n % d != 0)
        throw std::domain_error(std::to_string(d) + " does not divide " +
                                std::to_string(n));
    const long long s = n / d;
    if (k < 0 || k % s != 0)
        throw std::domain_error("strip order " + std::to_string(s) +
                                " does not divide k=" + std::to_string(k));
    TwistSignVerification rec;
    rec.n = n;
    rec.d = d;
    rec.s = s;
    rec.k = k;
    rec.j = k / s;
    rec.expected_sign = (rec.j + k) % 2 == 0 ? 1 : -1;

    long long exponent = gamma(n, k) % s;
    CyclotomicElement lhs =
        CyclotomicElement::zeta_power(static_cast<int>(s), exponent);
    rec.zeta_match =
        lhs == CyclotomicElement::from_integer(static_cast<int>(s), rec.expected_sign);

    // [t^k] (1 - (-t)^s)^d expanded literally, against C(d, j) * sign
    LaurentPolynomial base =
        LaurentPolynomial(1) - LaurentPolynomial::monomial(s % 2 == 0 ? 1 : -1, s);
    LaurentPolynomial expansion(1);
    for (long long i = 0; i < d; ++i) expansion *= base;
    rec.coefficient = expansion.coeff(k);
    rec.expected_coefficient = binomial(d, rec.j) * rec.expected_sign;
    rec.coefficient_match = rec.coefficient == rec.expected_coefficient;
    rec.ok = rec.zeta_match && rec.coefficient_match;
    return rec;
}

std::vector<CyclotomicElement> content_product_at_root(const Partition& shape, int s) {
    std::vector<CyclotomicElement> grades(shape.size() + 1, CyclotomicElement::zero(s));
    grades[0] = CyclotomicElement::from_integer(s, 1);
    int done = 0;
    for (Cell c : shape.cells()) {
        CyclotomicElement zc = CyclotomicElement::zeta_power(s, content(c));
        ++done;
        for (int g = std::min(done, shape.size()); g >= 1; --g)
            grades[g] = grades[g] + grades[g - 1] * zc;
    }
    return grades;
}

ProductEvalVerification verify_product_eval(const Partition& shape, long long n,
                                            long long d) {
    if (n != shape.size())
        throw std::domain_error("shape " + shape.to_string() +
                                " is not a partition of " + std::to_string(n));
    if (d < 1 || n % d != 0)
        throw std::domain_error(std::to_string(d) + " does not divide " +
                                std::to_string(n));
    const long long s = n / d;
    if (enumerate_bst(shape, static_cast<int>(s)).empty())
        throw std::domain_error("no tiling of " + shape.to_string() +
                                " by strips of size " + std::to_string(s));
    ProductEvalVerification rec{shape, n, d, s, true, true};

    LaurentPolynomial base =
        LaurentPolynomial(1) - LaurentPolynomial::monomial(s % 2 == 0 ? 1 : -1, s);
    LaurentPolynomial expansion(1);
    for (long long i = 0; i < d; ++i) expansion *= base;

    auto grades = content_product_at_root(shape, static_cast<int>(s));
    for (int g = 0; g <= shape.size(); ++g) {
        auto value = grades[g].as_integer();
        if (!value) {
            rec.all_integer = false;
            rec.match = false;
            continue;
        }
        if (*value != expansion.coeff(g)) rec.match = false;
    }
    return rec;
}

}  // namespace csp
