#pragma once

#include <optional>
#include <vector>

#include "sixj/partition.hpp"

namespace sixj {

// Bijective filling of a skew shape by 1..n, strictly increasing along rows
// and down columns. Entries are stored in the row-major order of
// shape().cells(). Equivalently a saturated chain in Young's lattice from
// inner to outer: the cell holding t is the box added at step t.
class StandardSkewTableau {
public:
    // Throws std::invalid_argument unless entries are a standard filling.
    StandardSkewTableau(SkewShape shape, std::vector<int> entries);

    const SkewShape& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    int cell_count() const { return shape_.cell_count(); }

    // Throws std::invalid_argument when the cell/value is not present.
    int entry_at(Box cell) const;
    Box cell_of(int value) const;

    // inner = k_0 ⊂ k_1 ⊂ ... ⊂ k_n = outer, where k_t adds cell_of(t).
    std::vector<Partition> chain() const;

    friend bool operator==(const StandardSkewTableau& a, const StandardSkewTableau& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

private:
    SkewShape shape_;
    std::vector<int> entries_;
    std::vector<int> cell_by_value_; // value-1 -> index into shape_.cells()
};

// Every standard tableau of the shape, ordered lexicographically by partition
// chain with the children of each vertex taken in pieri_expand order (larger
// added content first). For a two-cell shape with cells in distinct rows and
// columns this lists the chain through nu before the chain through nu'.
std::vector<StandardSkewTableau> enumerate_standard(const SkewShape& shape);

// The tableau with entries i and i+1 swapped when that is still standard;
// nullopt when i and i+1 share a row or column. Throws
// DomainError(IndexOutOfRange) unless 1 <= i <= n-1.
std::optional<StandardSkewTableau> apply_reflection(const StandardSkewTableau& t, int i);

long long count_standard(const SkewShape& shape);

// n! / prod(hook lengths) for a straight shape; independent of the
// enumeration. Throws std::invalid_argument beyond 20 cells.
long long hook_length_count(const Partition& p);

} // namespace sixj
