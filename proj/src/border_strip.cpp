#include "csp/border_strip.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "csp/qanalog.hpp"

namespace csp {

namespace {

size_t cell_index(const Partition& shape, int row, int col) {
    size_t idx = 0;
    for (int r = 1; r < row; ++r) idx += shape.part(r);
    return idx + col - 1;
}

}  // namespace

BorderStripTableau::BorderStripTableau(Partition shape, std::vector<int> labels,
                                       int strip_size)
    : shape_(std::move(shape)), labels_(std::move(labels)), strip_size_(strip_size) {
    const int n = shape_.size();
    if (strip_size_ < 1 || n % strip_size_ != 0)
        throw std::invalid_argument("strip size must divide the shape size");
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match shape size");
    const int strips = n / strip_size_;

    std::vector<int> class_size(strips + 1, 0);
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = 1; c <= shape_.part(r); ++c) {
            int v = label_at(r, c);
            if (v < 1 || v > strips)
                throw std::invalid_argument("label " + std::to_string(v) +
                                            " outside 1.." + std::to_string(strips));
            ++class_size[v];
            if (c > 1 && label_at(r, c - 1) > v)
                throw std::invalid_argument("labels must weakly increase along rows");
            if (r > 1 && label_at(r - 1, c) > v)
                throw std::invalid_argument("labels must weakly increase down columns");
        }
    }
    for (int v = 1; v <= strips; ++v)
        if (class_size[v] != strip_size_)
            throw std::invalid_argument("label class " + std::to_string(v) +
                                        " has size " + std::to_string(class_size[v]));

    // no 2x2 square within one label class
    for (int r = 1; r < shape_.rows(); ++r) {
        for (int c = 1; c < shape_.part(r); ++c) {
            if (!shape_.contains({r + 1, c + 1})) continue;
            int v = label_at(r, c);
            if (label_at(r, c + 1) == v && label_at(r + 1, c) == v &&
                label_at(r + 1, c + 1) == v)
                throw std::invalid_argument("label class " + std::to_string(v) +
                                            " contains a 2x2 square");
        }
    }

    // connectivity of each label class
    for (int v = 1; v <= strips; ++v) {
        Cell start{0, 0};
        for (int r = 1; r <= shape_.rows() && start.row == 0; ++r)
            for (int c = 1; c <= shape_.part(r); ++c)
                if (label_at(r, c) == v) {
                    start = {r, c};
                    break;
                }
        std::vector<Cell> frontier{start};
        std::vector<std::vector<bool>> seen(shape_.rows() + 2);
        for (int r = 0; r < shape_.rows() + 2; ++r)
            seen[r].assign(shape_.parts()[0] + 2, false);
        seen[start.row][start.col] = true;
        int reached = 0;
        while (!frontier.empty()) {
            Cell cur = frontier.back();
            frontier.pop_back();
            ++reached;
            const Cell nbrs[4] = {{cur.row - 1, cur.col},
                                  {cur.row + 1, cur.col},
                                  {cur.row, cur.col - 1},
                                  {cur.row, cur.col + 1}};
            for (Cell nb : nbrs) {
                if (nb.row < 1 || nb.col < 1 || !shape_.contains(nb)) continue;
                if (seen[nb.row][nb.col] || label_at(nb.row, nb.col) != v) continue;
                seen[nb.row][nb.col] = true;
                frontier.push_back(nb);
            }
        }
        if (reached != strip_size_)
            throw std::invalid_argument("label class " + std::to_string(v) +
                                        " is not connected");
    }

    // every prefix of label classes is a partition shape
    for (int v = 1; v < strips; ++v) {
        int prev = shape_.parts()[0] + 1;
        for (int r = 1; r <= shape_.rows(); ++r) {
            int count = 0;
            for (int c = 1; c <= shape_.part(r); ++c)
                if (label_at(r, c) <= v) ++count;
            if (count > prev)
                throw std::invalid_argument("cells labelled <= " + std::to_string(v) +
                                            " do not form a partition shape");
            prev = count;
        }
    }
}

int BorderStripTableau::label_at(int row, int col) const {
    return labels_[cell_index(shape_, row, col)];
}

int BorderStripTableau::strip_height(int label) const {
    int lo = shape_.rows() + 1, hi = 0;
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            if (label_at(r, c) == label) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
    if (hi == 0) throw std::domain_error("no such strip label");
    return hi - lo;
}

int BorderStripTableau::total_height() const {
    int total = 0;
    for (int v = 1; v <= strip_count(); ++v) total += strip_height(v);
    return total;
}

std::string BorderStripTableau::to_string() const {
    std::ostringstream os;
    for (int r = 1; r <= shape_.rows(); ++r) {
        if (r > 1) os << '\n';
        for (int c = 1; c <= shape_.part(r); ++c) {
            if (c > 1) os << ' ';
            os << label_at(r, c);
        }
    }
    return os.str();
}

namespace {

struct RimHook {
    std::vector<Cell> cells;     // cells of the strip, in the original shape
    std::vector<int> remainder;  // parts left after removal (zeros dropped)
};

/// Removable border strips of the given size: one per cell whose hook
/// length equals the size, consisting of the rim cells of that hook.
std::vector<RimHook> removable_strips(const std::vector<int>& parts, int size) {
    std::vector<RimHook> out;
    if (parts.empty()) return out;
    Partition shape(parts);
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            if (shape.hook_length({r, c}) != size) continue;
            RimHook hook;
            hook.remainder.assign(parts.begin(), parts.end());
            for (int i = r; i <= shape.rows() && shape.part(i) >= c; ++i) {
                int next = i < shape.rows() ? shape.part(i + 1) : 0;
                int from = std::max(c, next);  // rim cells of row i
                for (int j = from; j <= shape.part(i); ++j) hook.cells.push_back({i, j});
                hook.remainder[i - 1] = from - 1;
            }
            while (!hook.remainder.empty() && hook.remainder.back() == 0)
                hook.remainder.pop_back();
            out.push_back(std::move(hook));
        }
    }
    return out;
}

void peel(const Partition& full_shape, const std::vector<int>& parts, int strip_size,
          int label, std::vector<int>& labels,
          std::vector<BorderStripTableau>& out) {
    if (label == 0) {
        out.emplace_back(full_shape, labels, strip_size);
        return;
    }
    for (const RimHook& hook : removable_strips(parts, strip_size)) {
        for (Cell c : hook.cells) labels[cell_index(full_shape, c.row, c.col)] = label;
        peel(full_shape, hook.remainder, strip_size, label - 1, labels, out);
        for (Cell c : hook.cells) labels[cell_index(full_shape, c.row, c.col)] = 0;
    }
}

}  // namespace

std::vector<BorderStripTableau> enumerate_bst(const Partition& shape, int strip_size) {
    std::vector<BorderStripTableau> out;
    if (strip_size < 1 || shape.size() % strip_size != 0) return out;
    std::vector<int> labels(shape.size(), 0);
    peel(shape, shape.parts(), strip_size, shape.size() / strip_size, labels, out);
    return out;
}

int mn_sign(const Partition& shape, int strip_size) {
    auto tilings = enumerate_bst(shape, strip_size);
    if (tilings.empty())
        throw std::domain_error("sign undefined: no tiling of " + shape.to_string() +
                                " by strips of size " + std::to_string(strip_size));
    int sign = tilings.front().total_height() % 2 == 0 ? 1 : -1;
    for (const auto& t : tilings) {
        int s = t.total_height() % 2 == 0 ? 1 : -1;
        if (s != sign)
            throw std::logic_error("strip height parity differs between tilings of " +
                                   shape.to_string());
    }
    return sign;
}

std::vector<long long> content_residues(const Partition& shape, int s) {
    if (s < 1) throw std::domain_error("modulus must be positive");
    std::vector<long long> counts(s, 0);
    for (Cell c : shape.cells()) {
        int r = content(c) % s;
        if (r < 0) r += s;
        ++counts[r];
    }
    return counts;
}

ContentLemmaVerification verify_content_lemma(const Partition& shape, int s) {
    ContentLemmaVerification rec{shape, shape.size(), s, false, false, false, false};
    auto tilings = enumerate_bst(shape, s);
    rec.applicable = !tilings.empty();
    if (!rec.applicable) {
        rec.match = true;
        return rec;
    }
    rec.uniform = true;
    const long long expected = shape.size() / s;
    for (long long count : content_residues(shape, s))
        if (count != expected) rec.uniform = false;

    rec.strips_distinct = true;
    for (const auto& tiling : tilings) {
        for (int label = 1; label <= tiling.strip_count(); ++label) {
            std::vector<bool> seen(s, false);
            for (int r = 1; r <= shape.rows(); ++r) {
                for (int c = 1; c <= shape.part(r); ++c) {
                    if (tiling.label_at(r, c) != label) continue;
                    int res = content({r, c}) % s;
                    if (res < 0) res += s;
                    if (seen[res]) rec.strips_distinct = false;
                    seen[res] = true;
                }
            }
        }
    }
    rec.match = rec.uniform && rec.strips_distinct;
    return rec;
}

MnVerification verify_mn(const Partition& shape, long long n, long long d) {
    if (n != shape.size())
        throw std::domain_error("shape " + shape.to_string() + " is not a partition of " +
                                std::to_string(n));
    if (d < 1 || n % d != 0)
        throw std::domain_error(std::to_string(d) + " does not divide " +
                                std::to_string(n));
    MnVerification rec{shape,
                       n,
                       d,
                       eval_at_root(maj_gf_hook(shape), n, n / d),
                       std::nullopt,
                       0,
                       0,
                       false};
    rec.eval_integer = rec.evaluation.as_integer();
    auto tilings = enumerate_bst(shape, static_cast<int>(d));
    rec.bst_count = static_cast<long long>(tilings.size());
    if (!tilings.empty()) rec.sign = mn_sign(shape, static_cast<int>(d));
    if (rec.eval_integer) {
        BigInt expected = rec.bst_count == 0 ? BigInt(0) : BigInt(rec.sign) * rec.bst_count;
        rec.match = *rec.eval_integer == expected;
    }
    return rec;
}

}  // namespace csp
