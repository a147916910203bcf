#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "sixj/partition.hpp"
#include "sixj/rational_matrix.hpp"
#include "sixj/tableaux.hpp"

namespace sixj::testing {

// Asserts that fn() raises a DomainError with exactly the given code.
template <typename F>
void expect_domain_error(F&& fn, ErrorCode code) {
    try {
        fn();
        FAIL_CHECK("expected DomainError " << error_code_name(code) << ", nothing was thrown");
    } catch (const DomainError& e) {
        CHECK(e.code() == code);
    }
}

inline Partition P(const std::string& text) { return Partition::parse(text); }

inline RationalMatrix mat(const std::vector<std::vector<std::string>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()),
                     rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = Rational::parse(rows[r][c]);
    return m;
}

// Independent enumeration oracle: tries every permutation of 1..n over the
// row-major cells and keeps the fillings that increase along rows and down
// columns. Usable up to ~8 cells.
inline long long brute_force_standard_count(const SkewShape& shape) {
    const int n = shape.cell_count();
    std::vector<int> entries(n);
    for (int i = 0; i < n; ++i) entries[i] = i + 1;
    long long count = 0;
    const auto& cells = shape.cells();
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Box right{cells[i].row, cells[i].col + 1};
            Box below{cells[i].row + 1, cells[i].col};
            if (auto j = shape.cell_index(right); j && entries[*j] <= entries[i]) ok = false;
            if (auto j = shape.cell_index(below); j && entries[*j] <= entries[i]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(entries.begin(), entries.end()));
    return count;
}

// Calls fn(lambda, mu) for every pair lambda ⊆ mu with |mu| <= bound and
// |mu\lambda| = cells.
template <typename F>
void for_each_skew_pair(int bound, int cells, F&& fn) {
    for (int m = cells; m <= bound; ++m)
        for (const Partition& mu : partitions_of(m))
            for (const Partition& lambda : partitions_of(m - cells))
                if (contains(lambda, mu)) fn(lambda, mu);
}

} // namespace sixj::testing
