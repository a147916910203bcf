#include "sixj/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "sixj/fusion_graph.hpp"
#include "sixj/seminormal.hpp"
#include "sixj/sixj_engine.hpp"

namespace sixj {

namespace {

constexpr int kMaxFailureDetails = 8;

void record_failure(SuiteResult& suite, const std::string& detail) {
    suite.failed += 1;
    if (static_cast<int>(suite.failures.size()) < kMaxFailureDetails)
        suite.failures.push_back(detail);
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

bool is_multiplicity_one_pair(const Partition& lambda, const Partition& mu) {
    try {
        analyze_two_cell_skew(lambda, mu);
        return false;
    } catch (const DomainError& e) {
        if (e.code() == ErrorCode::MultiplicityOne) return true;
        throw;
    }
}

SuiteResult suite_sixj_cross_oracle(int bound) {
    SuiteResult suite;
    suite.name = "sixj_cross_oracle";
    suite.bound = bound;
    long long scanned = -1;
    try {
        scanned = static_cast<long long>(scan_all(bound).entries.size());
    } catch (const std::logic_error& e) {
        record_failure(suite, e.what());
    }
    for_each_skew_pair(bound, 2, [&](const Partition& lambda, const Partition& mu) {
        if (is_multiplicity_one_pair(lambda, mu)) return;
        suite.checked += 1;
        SixJMatrix direct = six_j_inverse(lambda, mu);
        SixJMatrix derived = six_j_via_eigenvectors(lambda, mu);
        std::string shape = SkewShape(lambda, mu).str();
        if (direct != derived) record_failure(suite, "derivations disagree for " + shape);
        if (!(direct.j * direct.j_inverse).is_identity())
            record_failure(suite, "j * j_inverse != I for " + shape);
        Rational k(direct.k);
        Rational det = direct.j_inverse.at(0, 0) * direct.j_inverse.at(1, 1) -
                       direct.j_inverse.at(0, 1) * direct.j_inverse.at(1, 0);
        if (det != Rational(2) * k * k / (k * k - Rational(1)))
            record_failure(suite, "det(j_inverse) != 2k^2/(k^2-1) for " + shape);
        if (direct.j_inverse.at(1, 0) != Rational(1) || direct.j_inverse.at(1, 1) != Rational(1))
            record_failure(suite, "bottom row of j_inverse is not (1, 1) for " + shape);
    });
    if (scanned >= 0 && scanned != suite.checked)
        record_failure(suite, "scan_all returned " + std::to_string(scanned) +
                                  " entries, expected " + std::to_string(suite.checked));
    return suite;
}

SuiteResult suite_eigenvector_columns(int bound) {
    SuiteResult suite;
    suite.name = "eigenvector_columns";
    suite.bound = bound;
    for_each_skew_pair(bound, 2, [&](const Partition& lambda, const Partition& mu) {
        if (is_multiplicity_one_pair(lambda, mu)) return;
        suite.checked += 1;
        std::string shape = SkewShape(lambda, mu).str();
        SixJMatrix sj = six_j_inverse(lambda, mu);
        RationalMatrix g1 = seminormal_generator(SkewShape(lambda, mu), 1);
        RationalMatrix p = projector_matrix(lambda, mu);
        for (int col = 0; col < 2; ++col) {
            Rational sign(col == 0 ? 1 : -1);
            for (int row = 0; row < 2; ++row) {
                Rational image = g1.at(row, 0) * sj.j_inverse.at(0, col) +
                                 g1.at(row, 1) * sj.j_inverse.at(1, col);
                if (image != sign * sj.j_inverse.at(row, col)) {
                    record_failure(suite, "column " + std::to_string(col + 1) +
                                              " is not a " + (col == 0 ? "+1" : "-1") +
                                              " eigenvector of m(g_1) for " + shape);
                    break;
                }
            }
        }
        if (p * p != p) record_failure(suite, "projector not idempotent for " + shape);
        if (p.trace() != Rational(1)) record_failure(suite, "projector trace != 1 for " + shape);
        for (int row = 0; row < 2; ++row) {
            Rational col1 = p.at(row, 0) * sj.j_inverse.at(0, 0) +
                            p.at(row, 1) * sj.j_inverse.at(1, 0);
            Rational col2 = p.at(row, 0) * sj.j_inverse.at(0, 1) +
                            p.at(row, 1) * sj.j_inverse.at(1, 1);
            if (col1 != sj.j_inverse.at(row, 0) || !col2.is_zero()) {
                record_failure(suite, "projector does not fix column 1 / kill column 2 for " +
                                          shape);
                break;
            }
        }
    });
    return suite;
}

SuiteResult suite_coxeter_relations(int bound) {
    SuiteResult suite;
    suite.name = "coxeter_relations";
    suite.bound = bound;
    for (int m = 0; m <= bound; ++m) {
        for (const Partition& mu : partitions_of(m)) {
            for (int inner_size = 0; inner_size <= m - 2; ++inner_size) {
                for (const Partition& lambda : partitions_of(inner_size)) {
                    if (!contains(lambda, mu)) continue;
                    suite.checked += 1;
                    auto violations = verify_coxeter(
                        seminormal_representation(SkewShape(lambda, mu)));
                    if (!violations.empty())
                        record_failure(suite, SkewShape(lambda, mu).str() + ": " +
                                                  violations.front());
                }
            }
        }
    }
    return suite;
}

SuiteResult suite_path_tableau_counts(int bound) {
    SuiteResult suite;
    suite.name = "path_tableau_counts";
    suite.bound = bound;
    FusionGraph graph = FusionGraph::build(bound);
    Partition empty;
    long long factorial = 1;
    for (int n = 1; n <= bound; ++n) {
        factorial *= n;
        long long sum_of_squares = 0;
        for (const Partition& mu : partitions_of(n)) {
            suite.checked += 1;
            long long paths =
                static_cast<long long>(enumerate_paths(graph, empty, mu).size());
            long long tableaux = count_standard(SkewShape(empty, mu));
            long long hooks = hook_length_count(mu);
            if (paths != tableaux || tableaux != hooks)
                record_failure(suite, "path/tableau/hook counts disagree for '" + mu.str() +
                                          "': " + std::to_string(paths) + "/" +
                                          std::to_string(tableaux) + "/" +
                                          std::to_string(hooks));
            sum_of_squares += paths * paths;
        }
        suite.checked += 1;
        if (sum_of_squares != factorial)
            record_failure(suite, "sum of squared path counts at size " + std::to_string(n) +
                                      " is " + std::to_string(sum_of_squares) + ", expected " +
                                      std::to_string(factorial));
    }
    return suite;
}

SuiteResult suite_multiplicity_one_contract(int bound) {
    SuiteResult suite;
    suite.name = "multiplicity_one_contract";
    suite.bound = bound;
    for_each_skew_pair(bound, 2, [&](const Partition& lambda, const Partition& mu) {
        if (!is_multiplicity_one_pair(lambda, mu)) return;
        suite.checked += 1;
        std::string shape = SkewShape(lambda, mu).str();
        try {
            six_j_inverse(lambda, mu);
            record_failure(suite, "six_j_inverse produced a matrix for degenerate " + shape);
        } catch (const DomainError& e) {
            if (e.code() != ErrorCode::MultiplicityOne)
                record_failure(suite, "six_j_inverse raised wrong error for " + shape);
        }
        try {
            intermediate_partitions(lambda, mu);
            record_failure(suite, "intermediate_partitions produced a pair for degenerate " +
                                      shape);
        } catch (const DomainError& e) {
            if (e.code() != ErrorCode::MultiplicityOne)
                record_failure(suite, "intermediate_partitions raised wrong error for " + shape);
        }
    });
    return suite;
}

SuiteResult suite_conjugate_symmetry(int bound) {
    SuiteResult suite;
    suite.name = "conjugate_symmetry";
    suite.bound = bound;
    for_each_skew_pair(bound, 2, [&](const Partition& lambda, const Partition& mu) {
        if (is_multiplicity_one_pair(lambda, mu)) return;
        suite.checked += 1;
        std::string shape = SkewShape(lambda, mu).str();
        SixJMatrix sj = six_j_inverse(lambda, mu);
        SixJMatrix conj = six_j_inverse(lambda.conjugate(), mu.conjugate());
        if (conj.k != sj.k) record_failure(suite, "conjugate pair changes k for " + shape);
        if (conj.nu != sj.nu_prime.conjugate() || conj.nu_prime != sj.nu.conjugate())
            record_failure(suite, "conjugation does not swap nu and nu' for " + shape);
        if (conj.j_inverse != sj.j_inverse)
            record_failure(suite, "conjugate pair changes j_inverse for " + shape);
    });
    return suite;
}

} // namespace

VerifyReport run_verification(int max_size) {
    if (max_size < 2) throw std::invalid_argument("max_size must be >= 2");
    VerifyReport report;
    report.max_size = max_size;
    report.suites.push_back(suite_sixj_cross_oracle(max_size));
    report.suites.push_back(suite_eigenvector_columns(max_size));
    report.suites.push_back(suite_coxeter_relations(std::min(max_size, 7)));
    report.suites.push_back(suite_path_tableau_counts(std::min(max_size, 8)));
    report.suites.push_back(suite_multiplicity_one_contract(std::min(max_size, 10)));
    report.suites.push_back(suite_conjugate_symmetry(std::min(max_size, 10)));
    return report;
}

} // namespace sixj
