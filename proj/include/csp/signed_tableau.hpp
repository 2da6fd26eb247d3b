#pragma once

#include <string>
#include <vector>

#include "csp/laurent.hpp"
#include "csp/partition.hpp"
#include "csp/tableau.hpp"

namespace csp {

/// A standard Young tableau together with a set of entries marked
/// negative. Negatives are kept sorted for deterministic rendering.
struct SignedTableau {
    StandardTableau plus;
    std::vector<int> negatives;

    SignedTableau(StandardTableau t, std::vector<int> neg);

    /// Rows as in StandardTableau, negative entries marked "~", e.g. "~3".
    std::string to_string() const;
};

/// Cyclic shift on subsets of {1..n}: every element above 1 drops by one
/// and 1 wraps to n. Order divides n; preserves cardinality.
std::vector<int> cyc_subset(const std::vector<int>& subset, int n);

/// Component-wise action: promotion on the tableau, cyc on the negatives.
SignedTableau signed_promotion(const SignedTableau& t);

/// i is a super descent when i is a classical descent whose successor is
/// not negative, or i is negative and not a classical descent.
std::vector<int> super_descent_set(const SignedTableau& t);

/// Sum of the super descents.
long long super_maj(const SignedTableau& t);

/// Generating function of super_maj over all pairs (tableau, k-subset of
/// negatives), by direct enumeration.
LaurentPolynomial super_gf_bruteforce(const Partition& shape, int k);

/// The super major index generating function graded by the number of
/// negative entries. Built from the content product formula
///   grade k = maj_gf_hook(shape) * [t^k] prod over cells (1 + t q^content)
/// and cross-checked grade by grade against the row/column form
///   [n]_q! * prod (q^(row-1) + t q^(col-1)) / prod [hook]_q,
/// whose division must be exact. A discrepancy is a hard failure.
class SuperGF {
public:
    explicit SuperGF(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int max_grade() const { return shape_.size(); }
    const LaurentPolynomial& grade(int k) const;
    const std::vector<LaurentPolynomial>& grades() const { return grades_; }

private:
    Partition shape_;
    std::vector<LaurentPolynomial> grades_;  // index = number of negatives
};

inline SuperGF super_gf_product(const Partition& shape) { return SuperGF(shape); }

/// k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace csp
