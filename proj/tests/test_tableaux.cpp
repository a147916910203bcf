#include <doctest.h>

#include <set>

#include "sixj/tableaux.hpp"
#include "test_helpers.hpp"

using namespace sixj;
using sixj::testing::P;

TEST_CASE("tableau construction validates standardness") {
    SkewShape hook(P(""), P("2,1"));
    CHECK_NOTHROW(StandardSkewTableau(hook, {1, 2, 3}));
    CHECK_NOTHROW(StandardSkewTableau(hook, {1, 3, 2}));
    CHECK_THROWS_AS(StandardSkewTableau(hook, {2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(StandardSkewTableau(hook, {1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StandardSkewTableau(hook, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StandardSkewTableau(hook, {1, 2, 4}), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_standard(SkewShape(P(""), P("2,1"))).size() == 2);
    CHECK(enumerate_standard(SkewShape(P("1"), P("2,1"))).size() == 2);
    for (int k = 1; k <= 6; ++k)
        CHECK(enumerate_standard(SkewShape(P(""), Partition({k}))).size() == 1);
    // empty shape has exactly the empty filling
    CHECK(enumerate_standard(SkewShape(P("2,1"), P("2,1"))).size() == 1);
}

TEST_CASE("enumeration order follows partition chains, nu-chain first") {
    auto ts = enumerate_standard(SkewShape(P("1"), P("2,1")));
    REQUIRE(ts.size() == 2);
    // first tableau passes through nu = (2): entry 1 in the top row
    CHECK(ts[0].entry_at(Box{1, 2}) == 1);
    CHECK(ts[0].entry_at(Box{2, 1}) == 2);
    CHECK(ts[1].entry_at(Box{1, 2}) == 2);
    CHECK(ts[1].entry_at(Box{2, 1}) == 1);
    CHECK(ts[0].chain() == std::vector<Partition>{P("1"), P("2"), P("2,1")});
    CHECK(ts[1].chain() == std::vector<Partition>{P("1"), P("1,1"), P("2,1")});

    auto hook = enumerate_standard(SkewShape(P(""), P("2,1")));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0].chain() == std::vector<Partition>{P(""), P("1"), P("2"), P("2,1")});
    CHECK(hook[1].chain() == std::vector<Partition>{P(""), P("1"), P("1,1"), P("2,1")});
}

TEST_CASE("enumeration has no duplicates and every element is standard") {
    for (int cells = 0; cells <= 8; ++cells)
        sixj::testing::for_each_skew_pair(
            8, cells, [](const Partition& lambda, const Partition& mu) {
                SkewShape shape(lambda, mu);
                auto ts = enumerate_standard(shape);
                std::set<std::vector<int>> seen;
                for (const auto& t : ts) {
                    CHECK(t.shape() == shape);
                    CHECK(seen.insert(t.entries()).second); // ctor validated standardness
                }
            });
}

TEST_CASE("enumeration count matches brute force on small shapes") {
    for (int cells = 0; cells <= 6; ++cells)
        sixj::testing::for_each_skew_pair(
            6, cells, [](const Partition& lambda, const Partition& mu) {
                SkewShape shape(lambda, mu);
                long long brute = sixj::testing::brute_force_standard_count(shape);
                CHECK(count_standard(shape) == brute);
                CHECK(enumerate_standard(shape).size() == size_t(brute));
            });
    for (const Partition& mu : partitions_of(7)) {
        SkewShape shape(P(""), mu);
        CHECK(count_standard(shape) == sixj::testing::brute_force_standard_count(shape));
    }
}

TEST_CASE("hook length formula agrees with enumeration for straight shapes up to 10 cells") {
    CHECK(hook_length_count(P("2,1")) == 2);
    CHECK(hook_length_count(P("2,2")) == 2);
    CHECK(hook_length_count(P("")) == 1);
    CHECK(hook_length_count(P("5")) == 1);
    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(count_standard(SkewShape(P(""), mu)) == hook_length_count(mu));
}

TEST_CASE("apply_reflection") {
    SkewShape two_cell(P("1"), P("2,1"));
    auto ts = enumerate_standard(two_cell);
    auto swapped = apply_reflection(ts[0], 1);
    REQUIRE(swapped.has_value());
    CHECK(*swapped == ts[1]);

    SkewShape row(P(""), P("4"));
    auto row_tableau = enumerate_standard(row).front();
    for (int i = 1; i <= 3; ++i) CHECK_FALSE(apply_reflection(row_tableau, i).has_value());

    auto hook = enumerate_standard(SkewShape(P(""), P("2,1")));
    auto moved = apply_reflection(hook[0], 2); // entry 2 at (1,2) moves to (2,1)
    REQUIRE(moved.has_value());
    CHECK(moved->entry_at(Box{2, 1}) == 2);
    CHECK(*moved == hook[1]);
    CHECK_FALSE(apply_reflection(hook[0], 1).has_value());

    sixj::testing::expect_domain_error([&] { apply_reflection(hook[0], 3); },
                                       ErrorCode::IndexOutOfRange);
    sixj::testing::expect_domain_error([&] { apply_reflection(hook[0], 0); },
                                       ErrorCode::IndexOutOfRange);
}

TEST_CASE("apply_reflection is an involution where defined") {
    sixj::testing::for_each_skew_pair(7, 3, [](const Partition& lambda, const Partition& mu) {
        for (const auto& t : enumerate_standard(SkewShape(lambda, mu)))
            for (int i = 1; i < t.cell_count(); ++i)
                if (auto s = apply_reflection(t, i)) {
                    auto back = apply_reflection(*s, i);
                    REQUIRE(back.has_value());
                    CHECK(*back == t);
                }
    });
}

TEST_CASE("tableau accessors") {
    auto ts = enumerate_standard(SkewShape(P(""), P("2,2")));
    REQUIRE(ts.size() == 2);
    const auto& t = ts[0]; // row-by-row filling
    CHECK(t.entries() == std::vector<int>{1, 2, 3, 4});
    CHECK(t.cell_of(3) == Box{2, 1});
    CHECK(t.entry_at(Box{1, 2}) == 2);
    CHECK_THROWS_AS(t.entry_at(Box{5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(t.cell_of(9), std::invalid_argument);
}
