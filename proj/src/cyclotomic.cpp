#include "csp/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csp {

namespace {

std::mutex cyclotomic_mutex;
std::map<int, LaurentPolynomial> cyclotomic_cache;

LaurentPolynomial compute_cyclotomic(int s) {
    // x^s - 1 divided by the cyclotomic polynomials of all proper divisors
    LaurentPolynomial num =
        LaurentPolynomial::monomial(1, s) - LaurentPolynomial(1);
    LaurentPolynomial denom(1);
    for (int d = 1; d < s; ++d)
        if (s % d == 0) denom *= cyclotomic(d);
    return num.divided_exact(denom);
}

}  // namespace

const LaurentPolynomial& cyclotomic(int s) {
    if (s < 1) throw std::domain_error("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(cyclotomic_mutex);
        auto it = cyclotomic_cache.find(s);
        if (it != cyclotomic_cache.end()) return it->second;
    }
    LaurentPolynomial value = s == 1
        ? LaurentPolynomial::monomial(1, 1) - LaurentPolynomial(1)
        : compute_cyclotomic(s);
    std::lock_guard<std::mutex> lock(cyclotomic_mutex);
    return cyclotomic_cache.emplace(s, std::move(value)).first->second;
}

int euler_phi(int s) {
    return static_cast<int>(cyclotomic(s).max_exponent());
}

CyclotomicElement::CyclotomicElement(int order, std::vector<BigInt> coefficients)
    : order_(order), residue_(std::move(coefficients)) {
    if (order_ < 1) throw std::domain_error("cyclotomic order must be positive");
    reduce();
}

void CyclotomicElement::reduce() {
    const LaurentPolynomial& phi = cyclotomic(order_);
    const auto phi_terms = phi.terms();
    const size_t deg = static_cast<size_t>(phi.max_exponent());
    for (size_t i = residue_.size(); i-- > deg;) {
        if (residue_[i] == 0) continue;
        BigInt c = residue_[i];
        residue_[i] = 0;
        // subtract c * x^(i-deg) * phi (phi is monic)
        for (const auto& [e, coef] : phi_terms) {
            if (static_cast<size_t>(e) == deg) continue;
            residue_[i - deg + e] -= c * coef;
        }
    }
    while (!residue_.empty() && residue_.back() == 0) residue_.pop_back();
}

CyclotomicElement CyclotomicElement::from_integer(int order, const BigInt& value) {
    if (value == 0) return zero(order);
    return CyclotomicElement(order, {value});
}

CyclotomicElement CyclotomicElement::zeta_power(int order, long long exponent) {
    long long e = exponent % order;
    if (e < 0) e += order;
    std::vector<BigInt> coeffs(e + 1);
    coeffs[e] = 1;
    return CyclotomicElement(order, std::move(coeffs));
}

std::optional<BigInt> CyclotomicElement::as_integer() const {
    if (residue_.empty()) return BigInt(0);
    if (residue_.size() == 1) return residue_[0];
    return std::nullopt;
}

namespace {

void require_same_order(int a, int b) {
    if (a != b)
        throw std::logic_error("cyclotomic elements of different orders (" +
                               std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& rhs) const {
    require_same_order(order_, rhs.order_);
    std::vector<BigInt> sum(std::max(residue_.size(), rhs.residue_.size()));
    for (size_t i = 0; i < residue_.size(); ++i) sum[i] = residue_[i];
    for (size_t i = 0; i < rhs.residue_.size(); ++i) sum[i] += rhs.residue_[i];
    return CyclotomicElement(order_, std::move(sum));
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& rhs) const {
    return *this + (-rhs);
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement out(*this);
    for (auto& c : out.residue_) c = -c;
    return out;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& rhs) const {
    require_same_order(order_, rhs.order_);
    if (is_zero() || rhs.is_zero()) return zero(order_);
    std::vector<BigInt> prod(residue_.size() + rhs.residue_.size() - 1);
    for (size_t i = 0; i < residue_.size(); ++i) {
        if (residue_[i] == 0) continue;
        for (size_t j = 0; j < rhs.residue_.size(); ++j)
            prod[i + j] += residue_[i] * rhs.residue_[j];
    }
    return CyclotomicElement(order_, std::move(prod));
}

CyclotomicElement CyclotomicElement::pow(unsigned long long e) const {
    CyclotomicElement result = from_integer(order_, 1);
    for (unsigned long long i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string CyclotomicElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < residue_.size(); ++i) {
        const BigInt& c = residue_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'z';
            if (i != 1) os << '^' << i;
        }
    }
    return os.str();
}

CyclotomicElement eval_at_root(const LaurentPolynomial& P, long long n, long long d) {
    if (n < 1) throw std::domain_error("eval_at_root requires n >= 1");
    if (d < 0) throw std::domain_error("eval_at_root requires d >= 0");
    long long g = std::gcd(n, d);  // gcd(n, 0) = n, so d = 0 gives s = 1
    int s = static_cast<int>(n / g);
    std::vector<BigInt> folded(s);
    for (const auto& [e, c] : P.terms()) {
        long long r = e % s;
        if (r < 0) r += s;
        folded[r] += c;
    }
    return CyclotomicElement(s, std::move(folded));
}

}  // namespace csp
