#include "sixj/sixj_engine.hpp"

#include <array>
#include <stdexcept>

#include "sixj/seminormal.hpp"

namespace sixj {

namespace {

SixJMatrix make_sixj(const Partition& lambda, const Partition& mu, const TwoCellSkew& skew,
                     RationalMatrix j_inverse) {
    SixJMatrix out;
    out.lambda = lambda;
    out.mu = mu;
    out.nu = with_box_added(lambda, skew.high);
    out.nu_prime = with_box_added(lambda, skew.low);
    out.k = skew.k;
    out.j = inverse_2x2(j_inverse);
    out.j_inverse = std::move(j_inverse);
    return out;
}

// Eigenvector of a 2x2 matrix for eigenvalue t, scaled so the second
// coordinate is 1.
std::array<Rational, 2> eigenvector_normalized(const RationalMatrix& m, const Rational& t) {
    RationalMatrix shifted = m + (-t * RationalMatrix::identity(2));
    // A nullspace vector of a nonzero row (p, q) is (q, -p).
    std::array<Rational, 2> v;
    if (!shifted.at(0, 0).is_zero() || !shifted.at(0, 1).is_zero()) {
        v = {shifted.at(0, 1), -shifted.at(0, 0)};
    } else if (!shifted.at(1, 0).is_zero() || !shifted.at(1, 1).is_zero()) {
        v = {shifted.at(1, 1), -shifted.at(1, 0)};
    } else {
        throw DomainError(ErrorCode::DegenerateEigenproblem,
                          "matrix is a multiple of the identity");
    }
    if (v[1].is_zero())
        throw DomainError(ErrorCode::DegenerateEigenproblem,
                          "eigenvector cannot be normalized to second coordinate 1");
    v[0] /= v[1];
    v[1] = Rational(1);
    // Confirm against both rows; a failure means t is not an eigenvalue.
    for (int r = 0; r < 2; ++r) {
        if (m.at(r, 0) * v[0] + m.at(r, 1) * v[1] != t * v[r])
            throw DomainError(ErrorCode::DegenerateEigenproblem,
                              "requested eigenvalue is not realized");
    }
    return v;
}

} // namespace

SixJMatrix six_j_inverse(const Partition& lambda, const Partition& mu) {
    TwoCellSkew skew = analyze_two_cell_skew(lambda, mu);
    Rational k(skew.k);
    RationalMatrix j_inv(2, 2);
    j_inv.at(0, 0) = k / (k + Rational(1));
    j_inv.at(0, 1) = -k / (k - Rational(1));
    j_inv.at(1, 0) = Rational(1);
    j_inv.at(1, 1) = Rational(1);
    return make_sixj(lambda, mu, skew, std::move(j_inv));
}

RationalMatrix projector_matrix(const Partition& lambda, const Partition& mu) {
    analyze_two_cell_skew(lambda, mu); // validates and classifies the pair
    RationalMatrix g1 = seminormal_generator(SkewShape(lambda, mu), 1);
    return Rational(1, 2) * (RationalMatrix::identity(2) + g1);
}

SixJMatrix six_j_via_eigenvectors(const Partition& lambda, const Partition& mu) {
    TwoCellSkew skew = analyze_two_cell_skew(lambda, mu);
    RationalMatrix g1 = seminormal_generator(SkewShape(lambda, mu), 1);
    auto plus = eigenvector_normalized(g1, Rational(1));
    auto minus = eigenvector_normalized(g1, Rational(-1));
    RationalMatrix j_inv(2, 2);
    j_inv.at(0, 0) = plus[0];
    j_inv.at(1, 0) = plus[1];
    j_inv.at(0, 1) = minus[0];
    j_inv.at(1, 1) = minus[1];
    return make_sixj(lambda, mu, skew, std::move(j_inv));
}

ScanResult scan_all(int max_size) {
    if (max_size < 2) throw std::invalid_argument("max_size must be >= 2");
    ScanResult result;
    for (int m = 2; m <= max_size; ++m) {
        for (const Partition& mu : partitions_of(m)) {
            for (const Partition& lambda : partitions_of(m - 2)) {
                if (!contains(lambda, mu)) continue;
                result.two_cell_pairs += 1;
                try {
                    SixJMatrix direct = six_j_inverse(lambda, mu);
                    SixJMatrix derived = six_j_via_eigenvectors(lambda, mu);
                    if (direct != derived)
                        throw std::logic_error("6j derivations disagree for " +
                                               SkewShape(lambda, mu).str());
                    result.entries.push_back(std::move(direct));
                } catch (const DomainError& e) {
                    if (e.code() != ErrorCode::MultiplicityOne) throw;
                    result.multiplicity_one += 1;
                }
            }
        }
    }
    return result;
}

} // namespace sixj
