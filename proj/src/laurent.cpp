#include "csp/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csp {

LaurentPolynomial::LaurentPolynomial(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coeff, long long exp) {
    LaurentPolynomial p;
    if (coeff != 0) {
        p.min_exp_ = exp;
        p.coeffs_.push_back(coeff);
    }
    return p;
}

long long LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no exponent range");
    return min_exp_;
}

long long LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no exponent range");
    return min_exp_ + static_cast<long long>(coeffs_.size()) - 1;
}

BigInt LaurentPolynomial::coeff(long long exp) const {
    if (is_zero()) return 0;
    long long idx = exp - min_exp_;
    if (idx < 0 || idx >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[idx];
}

std::vector<std::pair<long long, BigInt>> LaurentPolynomial::terms() const {
    std::vector<std::pair<long long, BigInt>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(min_exp_ + static_cast<long long>(i), coeffs_[i]);
    return out;
}

void LaurentPolynomial::trim() {
    size_t lead = coeffs_.size();
    while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
    coeffs_.resize(lead);
    size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
        min_exp_ += static_cast<long long>(skip);
    }
    if (coeffs_.empty()) min_exp_ = 0;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    long long lo = std::min(min_exp_, rhs.min_exp_);
    long long hi = std::max(max_exponent(), rhs.max_exponent());
    std::vector<BigInt> merged(hi - lo + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        merged[min_exp_ - lo + i] = std::move(coeffs_[i]);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        merged[rhs.min_exp_ - lo + i] += rhs.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(merged);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    return *this += -rhs;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = LaurentPolynomial();
    std::vector<BigInt> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    min_exp_ += rhs.min_exp_;
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) return *this = LaurentPolynomial();
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(long long shift) const {
    LaurentPolynomial out(*this);
    if (!out.is_zero()) out.min_exp_ += shift;
    return out;
}

LaurentPolynomial LaurentPolynomial::divided_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    if (is_zero()) return {};
    LaurentPolynomial rem(*this);
    const BigInt& lead_div = divisor.coeffs_.back();
    LaurentPolynomial quot;
    quot.min_exp_ = min_exp_ - divisor.min_exp_;
    long long quot_len =
        static_cast<long long>(coeffs_.size()) - static_cast<long long>(divisor.coeffs_.size()) + 1;
    if (quot_len <= 0) throw std::logic_error("inexact polynomial division (degree)");
    quot.coeffs_.assign(quot_len, 0);
    for (long long pos = quot_len - 1; pos >= 0; --pos) {
        // coefficient of the highest exponent the quotient term at pos can cancel
        const BigInt top =
            rem.coeff(min_exp_ + pos + static_cast<long long>(divisor.coeffs_.size()) - 1);
        if (top == 0) continue;
        if (top % lead_div != 0) throw std::logic_error("inexact polynomial division");
        BigInt c = top / lead_div;
        quot.coeffs_[pos] = c;
        rem -= divisor.shifted(quot.min_exp_ + pos) * c;
    }
    if (!rem.is_zero()) throw std::logic_error("inexact polynomial division (remainder)");
    quot.trim();
    return quot;
}

BigInt LaurentPolynomial::value_at_one() const {
    BigInt total = 0;
    for (const auto& c : coeffs_) total += c;
    return total;
}

bool LaurentPolynomial::has_nonnegative_coefficients() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, c] : terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (exp == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'q';
            if (exp != 1) os << '^' << exp;
        }
    }
    return os.str();
}

}  // namespace csp
