#pragma once

#include <initializer_list>
#include <vector>

#include "sixj/rational.hpp"

namespace sixj {

// Dense exact-rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Rational trace() const;
    bool is_identity() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

// Exact inverse of a 2x2 matrix; throws std::domain_error when singular.
RationalMatrix inverse_2x2(const RationalMatrix& m);

} // namespace sixj
