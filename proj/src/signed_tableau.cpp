#include "csp/signed_tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "csp/qanalog.hpp"

namespace csp {

SignedTableau::SignedTableau(StandardTableau t, std::vector<int> neg)
    : plus(std::move(t)), negatives(std::move(neg)) {
    std::sort(negatives.begin(), negatives.end());
    for (size_t i = 0; i < negatives.size(); ++i) {
        if (negatives[i] < 1 || negatives[i] > plus.size())
            throw std::domain_error("negative entry " + std::to_string(negatives[i]) +
                                    " outside 1.." + std::to_string(plus.size()));
        if (i > 0 && negatives[i] == negatives[i - 1])
            throw std::domain_error("duplicate negative entry " +
                                    std::to_string(negatives[i]));
    }
}

std::string SignedTableau::to_string() const {
    std::vector<bool> neg(plus.size() + 1, false);
    for (int v : negatives) neg[v] = true;
    std::ostringstream os;
    const Partition& shape = plus.shape();
    for (int r = 1; r <= shape.rows(); ++r) {
        if (r > 1) os << '\n';
        for (int c = 1; c <= shape.part(r); ++c) {
            if (c > 1) os << ' ';
            int v = plus.at(r, c);
            if (neg[v]) os << '~';
            os << v;
        }
    }
    return os.str();
}

std::vector<int> cyc_subset(const std::vector<int>& subset, int n) {
    std::vector<int> out;
    out.reserve(subset.size());
    bool wrap = false;
    for (int v : subset) {
        if (v < 1 || v > n)
            throw std::domain_error("subset element " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
        if (v == 1)
            wrap = true;
        else
            out.push_back(v - 1);
    }
    if (wrap) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

SignedTableau signed_promotion(const SignedTableau& t) {
    return SignedTableau(promotion(t.plus), cyc_subset(t.negatives, t.plus.size()));
}

std::vector<int> super_descent_set(const SignedTableau& t) {
    const int n = t.plus.size();
    std::vector<bool> des(n + 1, false);
    for (int i : descent_set(t.plus)) des[i] = true;
    std::vector<bool> neg(n + 2, false);
    for (int v : t.negatives) neg[v] = true;
    std::vector<int> out;
    for (int i = 1; i < n; ++i) {
        if ((des[i] && !neg[i + 1]) || (!des[i] && neg[i])) out.push_back(i);
    }
    return out;
}

long long super_maj(const SignedTableau& t) {
    long long total = 0;
    for (int i : super_descent_set(t)) total += i;
    return total;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    cur.reserve(k);
    // lexicographic recursion without explicit stack
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int needed = k - static_cast<int>(cur.size());
        for (int v = start; v + needed - 1 <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

LaurentPolynomial super_gf_bruteforce(const Partition& shape, int k) {
    const int n = shape.size();
    if (k < 0 || k > n)
        throw std::domain_error("negative-entry count " + std::to_string(k) +
                                " outside 0.." + std::to_string(n));
    LaurentPolynomial gf;
    auto subsets = k_subsets(n, k);
    for (const StandardTableau& t : enumerate_syt(shape)) {
        for (const auto& d : subsets) {
            SignedTableau st(t, d);
            gf += LaurentPolynomial::monomial(1, super_maj(st));
        }
    }
    return gf;
}

namespace {

/// t-graded expansion of prod over cells of (a_cell + t * b_cell); grade k
/// collects the terms with k factors taken from the b side.
std::vector<LaurentPolynomial> graded_cell_product(
    const Partition& shape,
    const std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>>& factors) {
    std::vector<LaurentPolynomial> grades{LaurentPolynomial(1)};
    grades.resize(shape.size() + 1);
    int cells_done = 0;
    for (const auto& [a, b] : factors) {
        ++cells_done;
        for (int g = std::min(cells_done, static_cast<int>(grades.size()) - 1); g >= 0; --g) {
            LaurentPolynomial next = grades[g] * a;
            if (g > 0) next += grades[g - 1] * b;
            grades[g] = std::move(next);
        }
    }
    return grades;
}

}  // namespace

SuperGF::SuperGF(const Partition& shape) : shape_(shape) {
    const LaurentPolynomial classical = maj_gf_hook(shape);

    std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> content_factors;
    std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> rowcol_factors;
    for (Cell c : shape.cells()) {
        content_factors.emplace_back(LaurentPolynomial(1),
                                     LaurentPolynomial::monomial(1, content(c)));
        rowcol_factors.emplace_back(LaurentPolynomial::monomial(1, c.row - 1),
                                    LaurentPolynomial::monomial(1, c.col - 1));
    }

    grades_ = graded_cell_product(shape, content_factors);
    for (auto& g : grades_) g *= classical;

    // independent route: the row/column numerator with explicit division
    LaurentPolynomial hook_denominator(1);
    for (Cell c : shape.cells()) hook_denominator *= q_integer(shape.hook_length(c));
    const LaurentPolynomial nfact = q_factorial(shape.size());
    std::vector<LaurentPolynomial> rowcol = graded_cell_product(shape, rowcol_factors);
    for (int k = 0; k <= shape.size(); ++k) {
        LaurentPolynomial via_rowcol = (rowcol[k] * nfact).divided_exact(hook_denominator);
        if (!(via_rowcol == grades_[k]))
            throw std::logic_error("super generating function routes disagree for " +
                                   shape.to_string() + " at grade " + std::to_string(k));
    }
}

const LaurentPolynomial& SuperGF::grade(int k) const {
    if (k < 0 || k > max_grade())
        throw std::domain_error("grade " + std::to_string(k) + " outside 0.." +
                                std::to_string(max_grade()));
    return grades_[k];
}

}  // namespace csp
