#pragma once

#include <json.hpp>

#include "sixj/fusion_graph.hpp"
#include "sixj/rational_matrix.hpp"
#include "sixj/sixj_engine.hpp"
#include "sixj/tableaux.hpp"
#include "sixj/verify.hpp"

namespace sixj {

// All JSON output goes through ordered documents so field order (and thus
// every emitted byte) is deterministic.
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p); // array of parts, [] for empty

// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
Json matrix_to_json(const RationalMatrix& m);

// {"inner": [...], "outer": [...], "entries": [[row, col, value], ...]}
Json tableau_to_json(const StandardSkewTableau& t);

// {"max_degree": d, "vertices": [[parts], ...], "edges": [[from, to], ...]}
Json graph_to_json(const FusionGraph& g);

// {"lambda": ..., "mu": ..., "nu": ..., "nu_prime": ..., "k": k,
//  "j_inverse": [[...]], "j": [[...]]}
Json sixj_to_json(const SixJMatrix& sj);

Json report_to_json(const VerifyReport& report);

// Canonical rendering: two-space indent plus a trailing newline. Parsing the
// result and re-rendering it reproduces the same bytes.
std::string render_json(const Json& doc);

} // namespace sixj
