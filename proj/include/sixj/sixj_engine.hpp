#pragma once

#include <vector>

#include "sixj/partition.hpp"
#include "sixj/rational_matrix.hpp"

namespace sixj {

// The 2x2 change of basis between the two tree bases of the multiplicity
// space of (lambda ⊗ box ⊗ box, mu), on the ordered basis (nu, nu').
// j_inverse is normalized so its bottom row is (1, 1); j is its exact
// inverse, so j * j_inverse = I.
struct SixJMatrix {
    Partition lambda;
    Partition mu;
    Partition nu;       // adds the box of larger content
    Partition nu_prime; // adds the box of smaller content
    int k = 0;          // axial distance, always >= 2
    RationalMatrix j_inverse{2, 2};
    RationalMatrix j{2, 2};

    friend bool operator==(const SixJMatrix&, const SixJMatrix&) = default;
};

// Closed form on the (nu, nu') basis:
//
//     j_inverse = [ k/(k+1)  -k/(k-1) ]
//                 [    1         1    ]
//
// Throws DomainError: NotContained, WrongDegree (|mu\lambda| != 2),
// MultiplicityOne (the two cells share a row or column; the multiplicity
// space is then 1-dimensional and there is no 2x2 change of basis).
SixJMatrix six_j_inverse(const Partition& lambda, const Partition& mu);

// (1/2)(I + m(g_1)) on the (nu, nu') basis: the rank-1 idempotent projecting
// onto the symmetric two-box component. Same errors as six_j_inverse.
RationalMatrix projector_matrix(const Partition& lambda, const Partition& mu);

// Independent derivation: builds m(g_1) from the seminormal machinery, solves
// the 2x2 eigenproblem exactly, normalizes each eigenvector to second
// coordinate 1, and places the +1 eigenvector in column 1. Agrees with
// six_j_inverse entry-for-entry. Same errors, plus
// DomainError(DegenerateEigenproblem), which cannot occur for k >= 2 and is
// raised only if the eigenproblem fails to produce normalized eigenvectors.
SixJMatrix six_j_via_eigenvectors(const Partition& lambda, const Partition& mu);

// Every six_j_inverse for pairs lambda ⊆ mu with |mu| <= max_size, each
// cross-checked against six_j_via_eigenvectors (mismatch throws
// std::logic_error). Pairs whose two cells share a row or column are counted
// and skipped. Entries are ordered by (mu, lambda) in (size, lex) order.
struct ScanResult {
    std::vector<SixJMatrix> entries;
    long long two_cell_pairs = 0;   // pairs with |mu\lambda| = 2
    long long multiplicity_one = 0; // skipped degenerate pairs
};
ScanResult scan_all(int max_size); // throws std::invalid_argument when max_size < 2

} // namespace sixj
