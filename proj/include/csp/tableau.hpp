#pragma once

#include <string>
#include <vector>

#include "csp/partition.hpp"

namespace csp {

/// Standard Young tableau: the cells of a shape filled bijectively with
/// 1..n, strictly increasing along rows and down columns. Entries are
/// stored row-major. Immutable after construction.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<int> entries);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<int>& entries() const { return entries_; }

    int at(int row, int col) const;  // 1-based
    Cell cell_of(int value) const;
    int row_of(int value) const { return cell_of(value).row; }

    /// One row per line, entries space-separated.
    std::string to_string() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        if (!(a.shape_ == b.shape_)) return a.shape_ < b.shape_;
        return a.entries_ < b.entries_;
    }

private:
    Partition shape_;
    std::vector<int> entries_;       // row-major
    std::vector<int> row_offsets_;   // start index of each row
    std::vector<Cell> cell_by_value_;
};

/// All standard Young tableaux of the shape, ordered lexicographically by
/// their row-major entry lists. Generated by placing 1..n into the cells
/// whose left and upper neighbours are already filled.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Descents: i such that i+1 sits in a strictly lower row than i.
std::vector<int> descent_set(const StandardTableau& t);

/// Sum of the descents.
long long maj(const StandardTableau& t);

/// Schutzenberger promotion: remove 1, slide the hole outward taking the
/// smaller of the right/below neighbours (the only one present if the
/// other is missing), write n+1 in the vacated corner, subtract 1.
StandardTableau promotion(const StandardTableau& t);

/// Least l >= 1 with promotion^l = identity on the full set SYT(shape).
long long promotion_order(const Partition& shape);

/// Index permutation of promotion with respect to the given enumeration
/// (which must be exactly enumerate_syt order).
std::vector<unsigned> promotion_permutation(const std::vector<StandardTableau>& all);

}  // namespace csp
