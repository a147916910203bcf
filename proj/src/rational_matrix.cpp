#include "sixj/rational_matrix.hpp"

#include <stdexcept>

namespace sixj {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& row : rows) {
        if (cols_ == 0) cols_ = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational RationalMatrix::trace() const {
    Rational t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
    RationalMatrix out(m.rows_, m.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = s * m.data_[i];
    return out;
}

RationalMatrix inverse_2x2(const RationalMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("inverse_2x2 expects a 2x2 matrix");
    Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (det.is_zero()) throw std::domain_error("singular 2x2 matrix");
    RationalMatrix inv(2, 2);
    inv.at(0, 0) = m.at(1, 1) / det;
    inv.at(0, 1) = -m.at(0, 1) / det;
    inv.at(1, 0) = -m.at(1, 0) / det;
    inv.at(1, 1) = m.at(0, 0) / det;
    return inv;
}

} // namespace sixj
