// sixjcalc: exact 6j symbols for one-box fusion steps on Young's lattice,
// plus the supporting combinatorics (fusion graph, standard skew tableaux,
// seminormal matrices) and a self-verification driver.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain error,
// 3 verification failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sixj/fusion_graph.hpp"
#include "sixj/json_io.hpp"
#include "sixj/render.hpp"
#include "sixj/seminormal.hpp"
#include "sixj/sixj_engine.hpp"
#include "sixj/verify.hpp"

namespace {

using namespace sixj;

constexpr int kSizeCap = 16; // bounds --max-size/--max-degree and enumerated shapes

bool g_json = false;

void emit(const std::string& text_form, const Json& json_form) {
    if (g_json)
        std::cout << render_json(json_form);
    else
        std::cout << text_form;
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

int fail_domain(const DomainError& e) {
    if (g_json) {
        Json doc;
        doc["error"] = e.code_name();
        doc["message"] = e.what();
        std::cout << render_json(doc);
    } else {
        std::cerr << "error " << e.code_name() << ": " << e.what() << "\n";
    }
    return 2;
}

Partition parse_partition_arg(const std::string& text, const char* flag) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(flag) + " '" + text + "': " + e.what());
    }
}

void enforce_size_cap(const Partition& p, const char* flag) {
    if (p.size() > kSizeCap)
        throw std::invalid_argument(std::string(flag) + " is limited to partitions of size " +
                                    std::to_string(kSizeCap));
}

void enforce_count_cap(const SkewShape& shape, long long cap, const char* what) {
    long long count = count_standard(shape);
    if (count > cap)
        throw std::invalid_argument(shape.str() + " has " + std::to_string(count) + " " + what +
                                    ", above the limit of " + std::to_string(cap));
}

int cmd_sixj(const std::string& lambda_text, const std::string& mu_text) {
    Partition lambda = parse_partition_arg(lambda_text, "--lambda");
    Partition mu = parse_partition_arg(mu_text, "--mu");
    SixJMatrix sj = six_j_inverse(lambda, mu);
    emit(render_sixj(sj), sixj_to_json(sj));
    return 0;
}

int cmd_seminormal(const std::string& inner_text, const std::string& outer_text, int generator) {
    Partition inner = parse_partition_arg(inner_text, "--inner");
    Partition outer = parse_partition_arg(outer_text, "--outer");
    enforce_size_cap(outer, "--outer");
    SkewShape shape(inner, outer);
    enforce_count_cap(shape, 2048, "basis tableaux");
    RationalMatrix m = seminormal_generator(shape, generator);
    std::string text = "m(g_" + std::to_string(generator) + ") on " + shape.str() +
                       "  basis size " + std::to_string(m.rows()) + "\n" + render_matrix(m);
    emit(text, matrix_to_json(m));
    return 0;
}

int cmd_fusion(int max_degree) {
    FusionGraph graph = FusionGraph::build(max_degree);
    std::string text = "fusion graph up to degree " + std::to_string(max_degree) + "\n";
    text += "vertices " + std::to_string(graph.vertices().size()) + "\n";
    for (size_t i = 0; i < graph.vertices().size(); ++i)
        text += "  " + std::to_string(i) + ": " + quoted(graph.vertices()[i]) + "\n";
    text += "edges " + std::to_string(graph.edges().size()) + "\n";
    for (auto [from, to] : graph.edges())
        text += "  " + quoted(graph.vertices()[from]) + " -> " + quoted(graph.vertices()[to]) +
                "\n";
    emit(text, graph_to_json(graph));
    return 0;
}

int cmd_paths(const std::string& from_text, const std::string& to_text) {
    Partition from = parse_partition_arg(from_text, "--from");
    Partition to = parse_partition_arg(to_text, "--to");
    enforce_size_cap(to, "--to");
    enforce_size_cap(from, "--from");
    if (contains(from, to)) enforce_count_cap(SkewShape(from, to), 10000, "paths");
    FusionGraph graph = FusionGraph::build(std::max(from.size(), to.size()));
    auto paths = enumerate_paths(graph, from, to);
    std::string text = "paths from " + quoted(from) + " to " + quoted(to) + "  count " +
                       std::to_string(paths.size()) + "\n";
    for (size_t i = 0; i < paths.size(); ++i)
        text += "  " + std::to_string(i + 1) + ": " + render_path(paths[i]) + "\n";
    Json doc;
    doc["from"] = partition_to_json(from);
    doc["to"] = partition_to_json(to);
    doc["count"] = paths.size();
    Json arr = Json::array();
    for (const auto& p : paths) {
        Json chain = Json::array();
        for (const auto& v : p.chain) chain.push_back(partition_to_json(v));
        arr.push_back(std::move(chain));
    }
    doc["paths"] = std::move(arr);
    emit(text, doc);
    return 0;
}

int cmd_tableaux(const std::string& inner_text, const std::string& outer_text) {
    Partition inner = parse_partition_arg(inner_text, "--inner");
    Partition outer = parse_partition_arg(outer_text, "--outer");
    enforce_size_cap(outer, "--outer");
    SkewShape shape(inner, outer);
    enforce_count_cap(shape, 10000, "standard tableaux");
    auto tableaux = enumerate_standard(shape);
    std::string text = "standard tableaux of " + shape.str() + "  count " +
                       std::to_string(tableaux.size()) + "\n";
    for (size_t i = 0; i < tableaux.size(); ++i) {
        text += "  " + std::to_string(i + 1) + ":\n";
        std::string grid = render_tableau(tableaux[i]);
        size_t pos = 0;
        while (pos < grid.size()) {
            size_t end = grid.find('\n', pos);
            text += "    " + grid.substr(pos, end - pos) + "\n";
            pos = end + 1;
        }
    }
    Json doc;
    doc["inner"] = partition_to_json(inner);
    doc["outer"] = partition_to_json(outer);
    doc["count"] = tableaux.size();
    Json arr = Json::array();
    for (const auto& t : tableaux) arr.push_back(tableau_to_json(t));
    doc["tableaux"] = std::move(arr);
    emit(text, doc);
    return 0;
}

int cmd_verify(int max_size) {
    VerifyReport report = run_verification(max_size);
    emit(render_report(report), report_to_json(report));
    return report.pass() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 6j symbols for one-box fusion on Young's lattice"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string lambda_text, mu_text, inner_text, outer_text, from_text, to_text;
    int generator = 1;
    int max_degree = 0;
    int max_size = 2;

    auto* sixj_cmd = app.add_subcommand("sixj", "6j matrix for a two-box skew mu \\ lambda");
    sixj_cmd->fallthrough();
    sixj_cmd->add_option("--lambda", lambda_text, "inner partition, e.g. \"2,1\"; \"\" for empty")
        ->required();
    sixj_cmd->add_option("--mu", mu_text, "outer partition")->required();

    auto* semi_cmd =
        app.add_subcommand("seminormal", "seminormal matrix of one simple reflection");
    semi_cmd->fallthrough();
    semi_cmd->add_option("--inner", inner_text, "inner partition")->required();
    semi_cmd->add_option("--outer", outer_text, "outer partition")->required();
    semi_cmd->add_option("--gen", generator, "generator index i for g_i")->required();

    auto* fusion_cmd = app.add_subcommand("fusion", "fusion graph up to a degree");
    fusion_cmd->fallthrough();
    fusion_cmd->add_option("--max-degree", max_degree, "largest partition size")
        ->required()
        ->check(CLI::Range(0, kSizeCap));

    auto* paths_cmd = app.add_subcommand("paths", "monotone chains between two partitions");
    paths_cmd->fallthrough();
    paths_cmd->add_option("--from", from_text, "start partition")->required();
    paths_cmd->add_option("--to", to_text, "end partition")->required();

    auto* tab_cmd = app.add_subcommand("tableaux", "standard skew tableaux of outer \\ inner");
    tab_cmd->fallthrough();
    tab_cmd->add_option("--inner", inner_text, "inner partition")->required();
    tab_cmd->add_option("--outer", outer_text, "outer partition")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--max-size", max_size, "partition size bound, 2.." +
                                                       std::to_string(kSizeCap))
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    g_json = (format == "json");

    try {
        if (sixj_cmd->parsed()) return cmd_sixj(lambda_text, mu_text);
        if (semi_cmd->parsed()) return cmd_seminormal(inner_text, outer_text, generator);
        if (fusion_cmd->parsed()) return cmd_fusion(max_degree);
        if (paths_cmd->parsed()) return cmd_paths(from_text, to_text);
        if (tab_cmd->parsed()) return cmd_tableaux(inner_text, outer_text);
        if (verify_cmd->parsed()) {
            if (max_size < 2 || max_size > kSizeCap)
                return fail_usage("max_size must be in 2.." + std::to_string(kSizeCap));
            return cmd_verify(max_size);
        }
    } catch (const DomainError& e) {
        return fail_domain(e);
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return fail_usage("no subcommand given");
}
