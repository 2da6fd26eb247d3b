#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csp/bigint.hpp"
#include "csp/cyclotomic.hpp"
#include "csp/partition.hpp"

namespace csp {

/// A tiling of a shape by border strips of equal size, recorded as a
/// label per cell (row-major). Construction validates the definition:
/// rows and columns weakly increase, every label class is a connected
/// skew shape of the strip size containing no 2x2 square, and every
/// prefix of label classes is a partition shape.
class BorderStripTableau {
public:
    BorderStripTableau(Partition shape, std::vector<int> labels, int strip_size);

    const Partition& shape() const { return shape_; }
    int strip_size() const { return strip_size_; }
    int strip_count() const { return shape_.size() / strip_size_; }
    const std::vector<int>& labels() const { return labels_; }
    int label_at(int row, int col) const;  // 1-based

    /// Height of one strip: rows it spans minus one.
    int strip_height(int label) const;
    /// Sum of all strip heights.
    int total_height() const;

    /// Grid of labels, one row per line.
    std::string to_string() const;

    friend bool operator==(const BorderStripTableau& a, const BorderStripTableau& b) {
        return a.shape_ == b.shape_ && a.labels_ == b.labels_ &&
               a.strip_size_ == b.strip_size_;
    }

private:
    Partition shape_;
    std::vector<int> labels_;
    int strip_size_;
};

/// All border strip tableaux of the shape with every strip of the given
/// size, in a deterministic order; empty when the size does not divide n
/// or no tiling exists. Found by peeling the highest label first: the
/// removable strips are the rim hooks whose hook cell has hook length
/// equal to the strip size, tried in row order of their starting cell.
std::vector<BorderStripTableau> enumerate_bst(const Partition& shape, int strip_size);

/// Murnaghan-Nakayama sign: parity of the total strip height, which is
/// the same for every tiling (verified across the enumeration).
/// Throws std::domain_error when no tiling exists.
int mn_sign(const Partition& shape, int strip_size);

/// Multiset of cell contents modulo s, counts indexed by residue 0..s-1.
std::vector<long long> content_residues(const Partition& shape, int s);

struct MnVerification {
    Partition shape;
    long long n = 0;
    long long d = 0;                       // evaluation at a primitive d-th root
    CyclotomicElement evaluation;          // exact value of the maj gf
    std::optional<BigInt> eval_integer;
    int sign = 0;                          // 0 when no tiling exists
    long long bst_count = 0;
    bool match = false;
};

/// Compares the exact evaluation of the major index generating function
/// at a primitive d-th root of unity (realized as xi^(n/d)) with
/// sign * |BST(shape, d)|, or with 0 when no tiling exists.
MnVerification verify_mn(const Partition& shape, long long n, long long d);

struct ContentLemmaVerification {
    Partition shape;
    long long n = 0;
    long long s = 1;
    bool applicable = false;      // some tiling by strips of size s exists
    bool uniform = false;         // every residue class appears n/s times
    bool strips_distinct = false; // each strip covers every residue once
    bool match = false;           // applicable implies uniform and distinct
};

/// Checks the content distribution of a shape tiled by strips of size s:
/// the residues of the cell contents modulo s are uniform with
/// multiplicity n/s, and within every single strip of every tiling the
/// residues are pairwise distinct. Vacuously true when no tiling exists.
ContentLemmaVerification verify_content_lemma(const Partition& shape, int s);

}  // namespace csp
