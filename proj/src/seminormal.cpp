#include "sixj/seminormal.hpp"

#include <map>

namespace sixj {

namespace {

std::map<std::vector<int>, int> index_by_entries(const std::vector<StandardSkewTableau>& basis) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i].entries()] = static_cast<int>(i);
    return index;
}

RationalMatrix generator_on_basis(int i, const std::vector<StandardSkewTableau>& basis,
                                  const std::map<std::vector<int>, int>& index) {
    const int dim = static_cast<int>(basis.size());
    RationalMatrix m(dim, dim);
    for (int a = 0; a < dim; ++a) {
        const StandardSkewTableau& t = basis[a];
        Box ci = t.cell_of(i);
        Box cj = t.cell_of(i + 1);
        if (ci.row == cj.row) {
            m.at(a, a) = Rational(1);
            continue;
        }
        if (ci.col == cj.col) {
            m.at(a, a) = Rational(-1);
            continue;
        }
        auto swapped = apply_reflection(t, i);
        int b = index.at(swapped->entries());
        if (b < a) continue; // block already filled from its first member
        Rational d(axial_distance(cj, ci)); // negative: a's chain sorts first
        m.at(a, a) = Rational(1) / d;
        m.at(b, a) = Rational(1) - Rational(1) / (d * d);
        m.at(a, b) = Rational(1);
        m.at(b, b) = Rational(-1) / d;
    }
    return m;
}

} // namespace

RationalMatrix seminormal_generator(const SkewShape& shape, int i) {
    const int n = shape.cell_count();
    if (n < 2)
        throw DomainError(ErrorCode::TooFewCells,
                          "shape " + shape.str() + " has " + std::to_string(n) +
                              " cells, need at least 2");
    if (i < 1 || i > n - 1)
        throw DomainError(ErrorCode::IndexOutOfRange,
                          "generator index " + std::to_string(i) + " not in 1.." +
                              std::to_string(n - 1));
    auto basis = enumerate_standard(shape);
    return generator_on_basis(i, basis, index_by_entries(basis));
}

std::vector<RationalMatrix> seminormal_representation(const SkewShape& shape) {
    const int n = shape.cell_count();
    if (n < 2)
        throw DomainError(ErrorCode::TooFewCells,
                          "shape " + shape.str() + " has " + std::to_string(n) +
                              " cells, need at least 2");
    auto basis = enumerate_standard(shape);
    auto index = index_by_entries(basis);
    std::vector<RationalMatrix> out;
    out.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) out.push_back(generator_on_basis(i, basis, index));
    return out;
}

std::vector<std::string> verify_coxeter(const std::vector<RationalMatrix>& matrices) {
    for (const auto& m : matrices)
        if (!m.is_square() || m.rows() != matrices.front().rows())
            throw DomainError(ErrorCode::DimensionMismatch,
                              "coxeter check needs square matrices of equal size");
    std::vector<std::string> violations;
    const int count = static_cast<int>(matrices.size());
    for (int i = 0; i < count; ++i) {
        if (!(matrices[i] * matrices[i]).is_identity())
            violations.push_back("g_" + std::to_string(i + 1) + "^2 != I");
    }
    for (int i = 0; i + 1 < count; ++i) {
        const auto& a = matrices[i];
        const auto& b = matrices[i + 1];
        if (a * b * a != b * a * b)
            violations.push_back("braid relation failed for g_" + std::to_string(i + 1) +
                                 ", g_" + std::to_string(i + 2));
    }
    for (int i = 0; i < count; ++i)
        for (int j = i + 2; j < count; ++j) {
            if (matrices[i] * matrices[j] != matrices[j] * matrices[i])
                violations.push_back("g_" + std::to_string(i + 1) + " and g_" +
                                     std::to_string(j + 1) + " do not commute");
        }
    return violations;
}

} // namespace sixj
