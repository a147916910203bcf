#include <doctest.h>

#include "sixj/fusion_graph.hpp"
#include "sixj/json_io.hpp"
#include "sixj/render.hpp"
#include "sixj/sixj_engine.hpp"
#include "test_helpers.hpp"

using namespace sixj;
using sixj::testing::mat;
using sixj::testing::P;

TEST_CASE("partition json") {
    CHECK(partition_to_json(P("3,1")).dump() == "[3,1]");
    CHECK(partition_to_json(P("")).dump() == "[]");
}

TEST_CASE("matrix json layout") {
    Json doc = matrix_to_json(mat({{"-1/2", "1"}, {"3/4", "1/2"}}));
    CHECK(doc.dump() == R"({"rows":2,"cols":2,"entries":[["-1/2","1"],["3/4","1/2"]]})");
}

TEST_CASE("tableau json lists 1-indexed cells row-major") {
    auto ts = enumerate_standard(SkewShape(P("1"), P("2,1")));
    Json doc = tableau_to_json(ts[0]);
    CHECK(doc.dump() == R"({"inner":[1],"outer":[2,1],"entries":[[1,2,1],[2,1,2]]})");
}

TEST_CASE("graph json") {
    Json doc = graph_to_json(FusionGraph::build(2));
    CHECK(doc.dump() ==
          R"({"max_degree":2,"vertices":[[],[1],[1,1],[2]],"edges":[[0,1],[1,3],[1,2]]})");
}

TEST_CASE("sixj json record") {
    Json doc = sixj_to_json(six_j_inverse(P("1"), P("2,1")));
    CHECK(doc.dump() ==
          R"({"lambda":[1],"mu":[2,1],"nu":[2],"nu_prime":[1,1],"k":2,)"
          R"("j_inverse":[["2/3","-2"],["1","1"]],"j":[["3/8","3/4"],["-3/8","1/4"]]})");
}

TEST_CASE("rendered json re-parses to identical bytes") {
    for (const Json& doc : {sixj_to_json(six_j_inverse(P("1"), P("2,1"))),
                            graph_to_json(FusionGraph::build(3)),
                            matrix_to_json(mat({{"0", "1"}, {"1", "0"}}))}) {
        std::string once = render_json(doc);
        std::string twice = render_json(Json::parse(once));
        CHECK(once == twice);
    }
}

TEST_CASE("matrix text rendering aligns columns") {
    CHECK(render_matrix(mat({{"2/3", "-2"}, {"1", "1"}})) == "[ 2/3  -2 ]\n[   1   1 ]\n");
    CHECK(render_matrix(mat({{"1"}})) == "[ 1 ]\n");
}

TEST_CASE("tableau text rendering marks inner cells with dots") {
    auto ts = enumerate_standard(SkewShape(P("1"), P("2,1")));
    CHECK(render_tableau(ts[0]) == ". 1\n2\n");
    auto straight = enumerate_standard(SkewShape(P(""), P("2,2")));
    CHECK(render_tableau(straight[0]) == "1 2\n3 4\n");
}

TEST_CASE("quoted partitions") {
    CHECK(quoted(P("2,1")) == "'2,1'");
    CHECK(quoted(P("")) == "''");
}

TEST_CASE("sixj text rendering") {
    std::string text = render_sixj(six_j_inverse(P("1"), P("2,1")));
    CHECK(text ==
          "lambda    '1'\n"
          "mu        '2,1'\n"
          "nu        '2'\n"
          "nu_prime  '1,1'\n"
          "k         2\n"
          "j_inverse\n"
          "[ 2/3  -2 ]\n"
          "[   1   1 ]\n"
          "j\n"
          "[  3/8  3/4 ]\n"
          "[ -3/8  1/4 ]\n");
}

TEST_CASE("path rendering") {
    FusionPath p{{P(""), P("1"), P("2,1")}};
    CHECK(render_path(p) == "'' -> '1' -> '2,1'");
}
