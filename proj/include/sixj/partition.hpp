#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sixj/errors.hpp"

namespace sixj {

// A cell of a Young diagram, 1-indexed, English convention (row 1 on top).
struct Box {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }

    friend auto operator<=>(const Box&, const Box&) = default;
};

// content(a) - content(b).
inline int axial_distance(Box a, Box b) { return a.content() - b.content(); }

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored, so structural equality is mathematical equality.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    // Text format: comma-separated parts ("3,1"). "" and "0" both denote the
    // empty partition. Throws std::invalid_argument on anything else.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    // 1-indexed part; 0 past the end.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    Partition conjugate() const;

    // "3,1"; the empty partition renders as "".
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    // Orders by size, then lexicographically on parts. This is the vertex
    // order of the fusion graph.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Componentwise comparison, missing parts read as 0.
bool contains(const Partition& inner, const Partition& outer);

// Cells whose addition keeps the diagram a partition, ordered by increasing
// row (equivalently, strictly decreasing content).
std::vector<Box> addable_boxes(const Partition& p);

// The partition with one more box; b must be addable.
Partition with_box_added(const Partition& p, Box b);

// One partition per addable box, in addable_boxes order. Each result covers p
// in Young's lattice.
std::vector<Partition> pieri_expand(const Partition& p);

// The two boxes of a two-cell skew mu\lambda, ordered by decreasing content,
// together with their axial distance k = content(high) - content(low).
// Throws DomainError: NotContained, WrongDegree (cell count != 2),
// MultiplicityOne (cells share a row or column; then k would be +-1 and only
// one intermediate partition exists).
struct TwoCellSkew {
    Box high;
    Box low;
    int k = 0;
};
TwoCellSkew analyze_two_cell_skew(const Partition& lambda, const Partition& mu);

// (nu, nu') with lambda ⊂ nu, nu' ⊂ mu, where nu adds the box of larger
// content. Same errors as analyze_two_cell_skew.
std::pair<Partition, Partition> intermediate_partitions(const Partition& lambda,
                                                        const Partition& mu);

// All partitions of n, lexicographically ordered on parts.
std::vector<Partition> partitions_of(int n);

// The cells of outer not in inner, row-major. Construction validates
// containment (DomainError: NotContained).
class SkewShape {
public:
    SkewShape(Partition inner, Partition outer);

    const Partition& inner() const { return inner_; }
    const Partition& outer() const { return outer_; }
    const std::vector<Box>& cells() const { return cells_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }

    // Index into cells() of a box, if present.
    std::optional<int> cell_index(Box b) const;
    bool has_cell(Box b) const { return cell_index(b).has_value(); }

    // "2,1 \ 1" (inner "" when empty); used in diagnostics.
    std::string str() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.inner_ == b.inner_ && a.outer_ == b.outer_;
    }

private:
    Partition inner_;
    Partition outer_;
    std::vector<Box> cells_;
};

} // namespace sixj
