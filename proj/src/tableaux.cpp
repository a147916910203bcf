#include "sixj/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sixj {

StandardSkewTableau::StandardSkewTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.cell_count();
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("tableau entry count does not match shape");
    cell_by_value_.assign(n, -1);
    for (int idx = 0; idx < n; ++idx) {
        int v = entries_[idx];
        if (v < 1 || v > n || cell_by_value_[v - 1] != -1)
            throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
        cell_by_value_[v - 1] = idx;
    }
    const auto& cells = shape_.cells();
    for (int idx = 0; idx < n; ++idx) {
        Box right{cells[idx].row, cells[idx].col + 1};
        Box below{cells[idx].row + 1, cells[idx].col};
        if (auto j = shape_.cell_index(right); j && entries_[*j] <= entries_[idx])
            throw std::invalid_argument("tableau rows must strictly increase");
        if (auto j = shape_.cell_index(below); j && entries_[*j] <= entries_[idx])
            throw std::invalid_argument("tableau columns must strictly increase");
    }
}

int StandardSkewTableau::entry_at(Box cell) const {
    auto idx = shape_.cell_index(cell);
    if (!idx) throw std::invalid_argument("cell is not in the tableau shape");
    return entries_[*idx];
}

Box StandardSkewTableau::cell_of(int value) const {
    if (value < 1 || value > cell_count())
        throw std::invalid_argument("tableau value out of range");
    return shape_.cells()[cell_by_value_[value - 1]];
}

std::vector<Partition> StandardSkewTableau::chain() const {
    std::vector<Partition> out;
    out.reserve(cell_count() + 1);
    Partition cur = shape_.inner();
    out.push_back(cur);
    for (int t = 1; t <= cell_count(); ++t) {
        cur = with_box_added(cur, cell_of(t));
        out.push_back(cur);
    }
    return out;
}

namespace {

// An addable box of cur that is a cell of the shape always keeps the grown
// diagram inside outer, so chains are pruned by cell membership alone.
void enumerate_rec(const SkewShape& shape, const Partition& cur, int next_value,
                   std::vector<int>& value_by_cell,
                   std::vector<StandardSkewTableau>& out) {
    if (next_value > shape.cell_count()) {
        out.emplace_back(shape, value_by_cell);
        return;
    }
    for (Box b : addable_boxes(cur)) {
        auto idx = shape.cell_index(b);
        if (!idx) continue;
        value_by_cell[*idx] = next_value;
        enumerate_rec(shape, with_box_added(cur, b), next_value + 1, value_by_cell, out);
        value_by_cell[*idx] = 0;
    }
}

void count_rec(const SkewShape& shape, const Partition& cur, int placed, long long& count) {
    if (placed == shape.cell_count()) {
        count += 1;
        return;
    }
    for (Box b : addable_boxes(cur)) {
        if (!shape.has_cell(b)) continue;
        count_rec(shape, with_box_added(cur, b), placed + 1, count);
    }
}

} // namespace

std::vector<StandardSkewTableau> enumerate_standard(const SkewShape& shape) {
    std::vector<StandardSkewTableau> out;
    std::vector<int> value_by_cell(shape.cell_count(), 0);
    enumerate_rec(shape, shape.inner(), 1, value_by_cell, out);
    return out;
}

std::optional<StandardSkewTableau> apply_reflection(const StandardSkewTableau& t, int i) {
    if (i < 1 || i >= t.cell_count())
        throw DomainError(ErrorCode::IndexOutOfRange,
                          "reflection index " + std::to_string(i) + " not in 1.." +
                              std::to_string(t.cell_count() - 1));
    Box a = t.cell_of(i);
    Box b = t.cell_of(i + 1);
    if (a.row == b.row || a.col == b.col) return std::nullopt;
    std::vector<int> entries = t.entries();
    std::swap(entries[*t.shape().cell_index(a)], entries[*t.shape().cell_index(b)]);
    return StandardSkewTableau(t.shape(), std::move(entries));
}

long long count_standard(const SkewShape& shape) {
    long long count = 0;
    count_rec(shape, shape.inner(), 0, count);
    return count;
}

long long hook_length_count(const Partition& p) {
    const int n = p.size();
    if (n > 20) throw std::invalid_argument("hook_length_count limited to 20 cells");
    Partition conj = p.conjugate();
    long long hooks = 1;
    long long factorial = 1;
    int counter = 0;
    for (int r = 1; r <= p.length(); ++r) {
        for (int c = 1; c <= p.part(r); ++c) {
            hooks *= (p.part(r) - c) + (conj.part(c) - r) + 1;
            factorial *= ++counter;
        }
    }
    return n == 0 ? 1 : factorial / hooks;
}

} // namespace sixj
