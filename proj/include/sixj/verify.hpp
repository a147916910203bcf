#pragma once

#include <string>
#include <vector>

namespace sixj {

struct SuiteResult {
    std::string name;
    int bound = 0;        // size bound the suite effectively ran at
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures; // at most a handful of detail lines
};

struct VerifyReport {
    int max_size = 0;
    std::vector<SuiteResult> suites;

    bool pass() const {
        for (const auto& s : suites)
            if (s.failed > 0) return false;
        return true;
    }
};

// Runs every invariant suite. The 6j suites run at max_size; suites with
// heavier asymptotics are capped (coxeter_relations at 7, path_tableau_counts
// at 8, multiplicity_one_contract and conjugate_symmetry at 10) and report
// the bound they ran at. Throws std::invalid_argument when max_size < 2.
VerifyReport run_verification(int max_size);

} // namespace sixj
