#include "sixj/json_io.hpp"

namespace sixj {

Json partition_to_json(const Partition& p) {
    return Json(p.parts());
}

namespace {

Json matrix_entries(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json matrix_to_json(const RationalMatrix& m) {
    Json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = matrix_entries(m);
    return doc;
}

Json tableau_to_json(const StandardSkewTableau& t) {
    Json doc;
    doc["inner"] = partition_to_json(t.shape().inner());
    doc["outer"] = partition_to_json(t.shape().outer());
    Json entries = Json::array();
    const auto& cells = t.shape().cells();
    for (size_t i = 0; i < cells.size(); ++i)
        entries.push_back(Json::array({cells[i].row, cells[i].col, t.entries()[i]}));
    doc["entries"] = std::move(entries);
    return doc;
}

Json graph_to_json(const FusionGraph& g) {
    Json doc;
    doc["max_degree"] = g.max_degree();
    Json vertices = Json::array();
    for (const Partition& p : g.vertices()) vertices.push_back(partition_to_json(p));
    doc["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (auto [from, to] : g.edges()) edges.push_back(Json::array({from, to}));
    doc["edges"] = std::move(edges);
    return doc;
}

Json sixj_to_json(const SixJMatrix& sj) {
    Json doc;
    doc["lambda"] = partition_to_json(sj.lambda);
    doc["mu"] = partition_to_json(sj.mu);
    doc["nu"] = partition_to_json(sj.nu);
    doc["nu_prime"] = partition_to_json(sj.nu_prime);
    doc["k"] = sj.k;
    doc["j_inverse"] = matrix_entries(sj.j_inverse);
    doc["j"] = matrix_entries(sj.j);
    return doc;
}

Json report_to_json(const VerifyReport& report) {
    Json doc;
    doc["max_size"] = report.max_size;
    Json suites = Json::array();
    for (const SuiteResult& s : report.suites) {
        Json suite;
        suite["name"] = s.name;
        suite["bound"] = s.bound;
        suite["checked"] = s.checked;
        suite["failed"] = s.failed;
        if (!s.failures.empty()) suite["failures"] = s.failures;
        suites.push_back(std::move(suite));
    }
    doc["suites"] = std::move(suites);
    doc["pass"] = report.pass();
    return doc;
}

std::string render_json(const Json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace sixj
