#include "csp/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csp {

StandardTableau::StandardTableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.size();
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("tableau entry count does not match shape size");
    row_offsets_.resize(shape_.rows());
    int off = 0;
    for (int r = 0; r < shape_.rows(); ++r) {
        row_offsets_[r] = off;
        off += shape_.parts()[r];
    }
    cell_by_value_.assign(n + 1, Cell{0, 0});
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = 1; c <= shape_.part(r); ++c) {
            int v = at(r, c);
            if (v < 1 || v > n || cell_by_value_[v].row != 0)
                throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
            cell_by_value_[v] = {r, c};
            if (c > 1 && at(r, c - 1) >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (r > 1 && shape_.part(r - 1) >= c && at(r - 1, c) >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

int StandardTableau::at(int row, int col) const {
    return entries_[row_offsets_[row - 1] + col - 1];
}

Cell StandardTableau::cell_of(int value) const {
    if (value < 1 || value > size())
        throw std::domain_error("tableau has no entry " + std::to_string(value));
    return cell_by_value_[value];
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    for (int r = 1; r <= shape_.rows(); ++r) {
        if (r > 1) os << '\n';
        for (int c = 1; c <= shape_.part(r); ++c) {
            if (c > 1) os << ' ';
            os << at(r, c);
        }
    }
    return os.str();
}

namespace {

void grow_syt(const Partition& shape, std::vector<int>& filled_per_row, int next,
              std::vector<int>& grid, std::vector<StandardTableau>& out) {
    const int n = shape.size();
    if (next > n) {
        out.emplace_back(shape, grid);
        return;
    }
    for (int r = 1; r <= shape.rows(); ++r) {
        int c = filled_per_row[r - 1] + 1;
        if (c > shape.part(r)) continue;
        // column constraint: the cell above must already be filled
        if (r > 1 && filled_per_row[r - 2] < c) continue;
        int idx = 0;
        for (int i = 1; i < r; ++i) idx += shape.part(i);
        idx += c - 1;
        grid[idx] = next;
        ++filled_per_row[r - 1];
        grow_syt(shape, filled_per_row, next + 1, grid, out);
        --filled_per_row[r - 1];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    std::vector<int> filled(shape.rows(), 0);
    std::vector<int> grid(shape.size(), 0);
    grow_syt(shape, filled, 1, grid, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> descent_set(const StandardTableau& t) {
    std::vector<int> des;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) des.push_back(i);
    return des;
}

long long maj(const StandardTableau& t) {
    long long total = 0;
    for (int i : descent_set(t)) total += i;
    return total;
}

StandardTableau promotion(const StandardTableau& t) {
    const Partition& shape = t.shape();
    const int n = t.size();
    // scratch grid indexed by (row, col), 1-based
    std::vector<std::vector<int>> grid(shape.rows() + 1);
    for (int r = 1; r <= shape.rows(); ++r) {
        grid[r].resize(shape.part(r) + 1);
        for (int c = 1; c <= shape.part(r); ++c) grid[r][c] = t.at(r, c);
    }
    Cell hole = t.cell_of(1);
    for (;;) {
        bool has_right = shape.contains({hole.row, hole.col + 1});
        bool has_below = shape.contains({hole.row + 1, hole.col});
        if (!has_right && !has_below) break;  // outer corner reached
        bool take_below;
        if (!has_right) {
            take_below = true;
        } else if (!has_below) {
            take_below = false;
        } else {
            take_below = grid[hole.row + 1][hole.col] < grid[hole.row][hole.col + 1];
        }
        if (take_below) {
            grid[hole.row][hole.col] = grid[hole.row + 1][hole.col];
            hole = {hole.row + 1, hole.col};
        } else {
            grid[hole.row][hole.col] = grid[hole.row][hole.col + 1];
            hole = {hole.row, hole.col + 1};
        }
    }
    grid[hole.row][hole.col] = n + 1;
    std::vector<int> entries;
    entries.reserve(n);
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) entries.push_back(grid[r][c] - 1);
    return StandardTableau(shape, std::move(entries));
}

std::vector<unsigned> promotion_permutation(const std::vector<StandardTableau>& all) {
    std::vector<unsigned> perm(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        StandardTableau image = promotion(all[i]);
        auto it = std::lower_bound(all.begin(), all.end(), image);
        if (it == all.end() || !(*it == image))
            throw std::logic_error("promotion image not found in enumeration");
        perm[i] = static_cast<unsigned>(it - all.begin());
    }
    return perm;
}

long long promotion_order(const Partition& shape) {
    auto all = enumerate_syt(shape);
    auto perm = promotion_permutation(all);
    std::vector<bool> seen(perm.size(), false);
    long long order = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace csp
