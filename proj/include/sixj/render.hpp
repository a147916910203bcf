#pragma once

#include <string>

#include "sixj/fusion_graph.hpp"
#include "sixj/rational_matrix.hpp"
#include "sixj/sixj_engine.hpp"
#include "sixj/tableaux.hpp"
#include "sixj/verify.hpp"

namespace sixj {

// Plain-text renderers for the CLI. Output is deterministic: fixed layouts,
// no timestamps, entries right-aligned per column.

// "'3,1'"; the empty partition renders as "''".
std::string quoted(const Partition& p);

// One "[ ... ]" line per row.
std::string render_matrix(const RationalMatrix& m);

// Row grid with "." for inner cells.
std::string render_tableau(const StandardSkewTableau& t);

std::string render_sixj(const SixJMatrix& sj);

std::string render_path(const FusionPath& path);

std::string render_report(const VerifyReport& report);

} // namespace sixj
