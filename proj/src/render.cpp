#include "sixj/render.hpp"

#include <algorithm>
#include <vector>

namespace sixj {

namespace {

std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

} // namespace

std::string quoted(const Partition& p) {
    return "'" + p.str() + "'";
}

std::string render_matrix(const RationalMatrix& m) {
    std::vector<size_t> widths(m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            widths[c] = std::max(widths[c], m.at(r, c).str().size());
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += "[ ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += "  ";
            out += pad_left(m.at(r, c).str(), widths[c]);
        }
        out += " ]\n";
    }
    return out;
}

std::string render_tableau(const StandardSkewTableau& t) {
    const Partition& inner = t.shape().inner();
    const Partition& outer = t.shape().outer();
    size_t width = 1;
    for (int v : t.entries()) width = std::max(width, std::to_string(v).size());
    std::string out;
    for (int r = 1; r <= outer.length(); ++r) {
        std::string line;
        for (int c = 1; c <= outer.part(r); ++c) {
            if (c > 1) line += ' ';
            if (c <= inner.part(r))
                line += pad_left(".", width);
            else
                line += pad_left(std::to_string(t.entry_at(Box{r, c})), width);
        }
        out += line + "\n";
    }
    return out;
}

std::string render_sixj(const SixJMatrix& sj) {
    std::string out;
    out += "lambda    " + quoted(sj.lambda) + "\n";
    out += "mu        " + quoted(sj.mu) + "\n";
    out += "nu        " + quoted(sj.nu) + "\n";
    out += "nu_prime  " + quoted(sj.nu_prime) + "\n";
    out += "k         " + std::to_string(sj.k) + "\n";
    out += "j_inverse\n" + render_matrix(sj.j_inverse);
    out += "j\n" + render_matrix(sj.j);
    return out;
}

std::string render_path(const FusionPath& path) {
    std::string out;
    for (size_t i = 0; i < path.chain.size(); ++i) {
        if (i) out += " -> ";
        out += quoted(path.chain[i]);
    }
    return out;
}

std::string render_report(const VerifyReport& report) {
    size_t name_width = 5; // "suite"
    for (const SuiteResult& s : report.suites) name_width = std::max(name_width, s.name.size());
    std::string out = "verification up to size " + std::to_string(report.max_size) + "\n\n";
    out += pad_right("suite", name_width) + "  bound  checked  failed\n";
    for (const SuiteResult& s : report.suites) {
        out += pad_right(s.name, name_width) + "  " + pad_left(std::to_string(s.bound), 5) +
               "  " + pad_left(std::to_string(s.checked), 7) + "  " +
               pad_left(std::to_string(s.failed), 6) + "\n";
        for (const std::string& f : s.failures) out += "    " + f + "\n";
    }
    out += "\noverall ";
    out += report.pass() ? "PASS" : "FAIL";
    out += "\n";
    return out;
}

} // namespace sixj
