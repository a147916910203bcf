#include <doctest.h>

#include <json.hpp>

#include "subprocess.hpp"

using sixj::testing::read_golden;
using sixj::testing::run_cli;
using Json = nlohmann::ordered_json;

TEST_CASE("sixj text output matches the golden file") {
    auto r = run_cli("sixj --lambda 1 --mu 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_golden("sixj_1_21.txt"));
}

TEST_CASE("sixj json output") {
    auto r = run_cli("sixj --lambda 1 --mu 2,1 --format json");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["k"] == 2);
    CHECK(doc["nu"] == Json::array({2}));
    CHECK(doc["nu_prime"] == Json::array({1, 1}));
    CHECK(doc["j_inverse"] == Json::parse(R"([["2/3","-2"],["1","1"]])"));
}

TEST_CASE("json output round-trips to identical bytes") {
    for (const char* args :
         {"sixj --lambda 1 --mu 2,1 --format json", "fusion --max-degree 3 --format json",
          "paths --from \"\" --to 2,1 --format json",
          "tableaux --inner 1 --outer 2,1 --format json",
          "seminormal --inner 1 --outer 2,1 --gen 1 --format json",
          "verify --max-size 3 --format json"}) {
        auto r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        CHECK(r.output == Json::parse(r.output).dump(2) + "\n");
    }
}

TEST_CASE("domain errors exit 2 with a machine-readable code") {
    auto one_row = run_cli("sixj --lambda 1 --mu 3 --format json");
    CHECK(one_row.exit_code == 2);
    CHECK(Json::parse(one_row.output)["error"] == "multiplicity_one");

    auto one_col = run_cli("sixj --lambda \"\" --mu 1,1 --format json");
    CHECK(one_col.exit_code == 2);
    CHECK(Json::parse(one_col.output)["error"] == "multiplicity_one");

    auto one_box = run_cli("sixj --lambda \"\" --mu 1 --format json");
    CHECK(one_box.exit_code == 2);
    CHECK(Json::parse(one_box.output)["error"] == "wrong_degree");

    auto not_contained = run_cli("sixj --lambda 2,2 --mu 3,1 --format json");
    CHECK(not_contained.exit_code == 2);
    CHECK(Json::parse(not_contained.output)["error"] == "not_contained");

    auto bad_gen = run_cli("seminormal --inner \"\" --outer 2,1 --gen 3 --format json");
    CHECK(bad_gen.exit_code == 2);
    CHECK(Json::parse(bad_gen.output)["error"] == "index_out_of_range");

    auto too_few = run_cli("seminormal --inner \"\" --outer 1 --gen 1 --format json");
    CHECK(too_few.exit_code == 2);
    CHECK(Json::parse(too_few.output)["error"] == "too_few_cells");

    // text mode: diagnostics go to stderr, nothing on stdout
    auto text_err = run_cli("sixj --lambda 1 --mu 3");
    CHECK(text_err.exit_code == 2);
    CHECK(text_err.output.empty());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("sixj --lambda 1,x --mu 2,1").exit_code == 1);
    CHECK(run_cli("sixj --lambda 1,2 --mu 3,1").exit_code == 1);
    CHECK(run_cli("sixj --lambda 1").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("verify --max-size 1").exit_code == 1);
    CHECK(run_cli("verify --max-size 17").exit_code == 1);
    CHECK(run_cli("fusion --max-degree 17").exit_code == 1);
    CHECK(run_cli("fusion --max-degree -1").exit_code == 1);
    CHECK(run_cli("sixj --lambda 1 --mu 2,1 --format yaml").exit_code == 1);
}

TEST_CASE("seminormal command output") {
    auto r = run_cli("seminormal --inner 1 --outer 2,1 --gen 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "m(g_1) on '2,1' \\ '1'  basis size 2\n"
          "[ -1/2    1 ]\n"
          "[  3/4  1/2 ]\n");

    auto trivial = run_cli("seminormal --inner \"\" --outer 2 --gen 1");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output ==
          "m(g_1) on '2' \\ ''  basis size 1\n"
          "[ 1 ]\n");

    auto json = run_cli("seminormal --inner 1 --outer 2,1 --gen 1 --format json");
    REQUIRE(json.exit_code == 0);
    CHECK(Json::parse(json.output) ==
          Json::parse(R"({"rows":2,"cols":2,"entries":[["-1/2","1"],["3/4","1/2"]]})"));
}

TEST_CASE("fusion command output") {
    auto r = run_cli("fusion --max-degree 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "fusion graph up to degree 0\n"
          "vertices 1\n"
          "  0: ''\n"
          "edges 0\n");

    auto json = run_cli("fusion --max-degree 2 --format json");
    REQUIRE(json.exit_code == 0);
    Json doc = Json::parse(json.output);
    CHECK(doc["vertices"].size() == 4);
    CHECK(doc["edges"].size() == 3);
}

TEST_CASE("paths command lists chains in enumeration order") {
    auto r = run_cli("paths --from \"\" --to 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "paths from '' to '2,1'  count 2\n"
          "  1: '' -> '1' -> '2' -> '2,1'\n"
          "  2: '' -> '1' -> '1,1' -> '2,1'\n");
}

TEST_CASE("tableaux command") {
    auto r = run_cli("tableaux --inner 1 --outer 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "standard tableaux of '2,1' \\ '1'  count 2\n"
          "  1:\n"
          "    . 1\n"
          "    2\n"
          "  2:\n"
          "    . 2\n"
          "    1\n");

    auto json = run_cli("tableaux --inner 1 --outer 2,1 --format json");
    REQUIRE(json.exit_code == 0);
    Json doc = Json::parse(json.output);
    CHECK(doc["count"] == 2);
    CHECK(doc["tableaux"][0]["entries"] == Json::parse("[[1,2,1],[2,1,2]]"));
}

TEST_CASE("verify command") {
    auto ok = run_cli("verify --max-size 2 --format json");
    CHECK(ok.exit_code == 0);
    Json doc = Json::parse(ok.output);
    CHECK(doc["pass"] == true);
    // no valid two-cell pair exists at size 2, so the 6j suites are vacuous
    CHECK(doc["suites"][0]["name"] == "sixj_cross_oracle");
    CHECK(doc["suites"][0]["checked"] == 0);
    CHECK(doc["suites"][2]["name"] == "coxeter_relations");
    CHECK(doc["suites"][2]["checked"] == 2);

    auto text = run_cli("verify --max-size 4");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("overall PASS") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const char* args : {"verify --max-size 5 --format json", "sixj --lambda 1 --mu 2,1",
                             "fusion --max-degree 4 --format json"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
