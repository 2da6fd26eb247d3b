#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csp {

/// 1-based coordinates of a box in a Young diagram; row 1 is the top row.
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Content of a cell: column minus row.
inline int content(Cell c) { return c.col - c.row; }

/// Integer partition with weakly decreasing positive parts. Hook lengths
/// are precomputed at construction; shapes in scope are tiny.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    /// Parses "6,5,4,2,2,2" or the rectangle shorthand "AxB"
    /// (A rows of length B). Throws std::invalid_argument naming the
    /// offending token.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }          // total number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int row) const { return parts_[row - 1]; }  // 1-based

    bool contains(Cell c) const {
        return c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= part(c.row);
    }

    /// Cells in row-major order (row 1 left to right, then row 2, ...).
    std::vector<Cell> cells() const;

    /// Hook length of a cell: itself, its arm and its leg.
    /// Throws std::domain_error for a cell outside the diagram.
    int hook_length(Cell c) const;

    /// (rows, columns) when all parts are equal, empty otherwise.
    std::optional<std::pair<int, int>> rectangle() const;

    Partition conjugate() const;

    /// Canonical shape string, "6,5,4,2,2,2".
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
    std::vector<int> hooks_;  // row-major cache
};

int hook_length(const Partition& shape, Cell c);

/// kappa: sum over rows of (row-1) * part, equivalently the sum of
/// (row(c)-1) over all cells.
long long kappa(const Partition& shape);

/// gamma(n, k) = (n-1) * C(k, 2). Throws std::domain_error unless
/// 0 <= k <= n.
long long gamma(long long n, long long k);

/// All partitions of n, in lexicographic order of their part sequences.
std::vector<Partition> partitions_of(int n);

}  // namespace csp
