#pragma once

#include <string>
#include <vector>

#include "sixj/rational_matrix.hpp"
#include "sixj/tableaux.hpp"

namespace sixj {

// Matrix of the simple reflection g_i on the enumerate_standard basis of the
// shape, acting on column vectors: column t is the image of basis tableau t.
//
// Cellwise rule for a basis tableau T with d = content(cell of i+1) -
// content(cell of i): entries i, i+1 in one row give the diagonal entry +1,
// in one column -1. Otherwise {T, g_i T} spans a 2x2 block; with T the member
// whose chain enumerates first (so d(T) <= -2), the block is
//
//     g v_T       = (1/d) v_T + (1 - 1/d^2) v_{g_i T}
//     g v_{g_i T} =       v_T -       (1/d) v_{g_i T}
//
// For a two-cell shape this is the classical  [[-1/k, 1], [1 - 1/k^2, 1/k]]
// on the (nu-chain, nu'-chain) basis, with k the axial distance.
//
// Throws DomainError: TooFewCells (n < 2), IndexOutOfRange (i not in 1..n-1).
RationalMatrix seminormal_generator(const SkewShape& shape, int i);

// Matrices for g_1..g_{n-1}, all on the same enumerate_standard basis.
// Throws DomainError(TooFewCells) when the shape has fewer than 2 cells.
std::vector<RationalMatrix> seminormal_representation(const SkewShape& shape);

// Checks every defining relation of the symmetric group on the given
// generator matrices: m_i^2 = I, m_i m_{i+1} m_i = m_{i+1} m_i m_{i+1}, and
// m_i m_j = m_j m_i for |i-j| >= 2. Returns one line per violated relation,
// empty on success. Throws DomainError(DimensionMismatch) unless all matrices
// are square and of equal size.
std::vector<std::string> verify_coxeter(const std::vector<RationalMatrix>& matrices);

} // namespace sixj
