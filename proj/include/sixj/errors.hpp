#pragma once

#include <stdexcept>
#include <string>

namespace sixj {

enum class ErrorCode {
    NotContained,
    WrongDegree,
    MultiplicityOne,
    IndexOutOfRange,
    TooFewCells,
    DimensionMismatch,
    VertexMissing,
    DegenerateEigenproblem,
};

// Stable machine-readable name, e.g. "multiplicity_one". Used verbatim by the
// CLI JSON output.
constexpr const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotContained: return "not_contained";
        case ErrorCode::WrongDegree: return "wrong_degree";
        case ErrorCode::MultiplicityOne: return "multiplicity_one";
        case ErrorCode::IndexOutOfRange: return "index_out_of_range";
        case ErrorCode::TooFewCells: return "too_few_cells";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::VertexMissing: return "vertex_missing";
        case ErrorCode::DegenerateEigenproblem: return "degenerate_eigenproblem";
    }
    return "unknown";
}

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace sixj
