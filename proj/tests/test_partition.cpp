#include "doctest.h"
#include "oracles.hpp"
#include "pcw/partition.hpp"
#include "test_support.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

using namespace pcw;

namespace {

Coloring from_pairs(int n, int colors, std::vector<std::tuple<int, int, int>> cells) {
    Coloring c(n, colors);
    for (auto [i, j, v] : cells)
        c.set(i, j, v);
    return c;
}

std::int64_t code_of(const Coloring& c) {
    std::int64_t code = 0;
    for (auto v : c.table)
        code = code * c.colors + v;
    return code;
}

}  // namespace

TEST_CASE("coloring layout and counter order") {
    Coloring c(4, 2);
    CHECK(c.table.size() == 6);
    CHECK(c.index(0, 1) == 0);
    CHECK(c.index(0, 3) == 2);
    CHECK(c.index(3, 1) == 4);
    CHECK(c.index(2, 3) == 5);
    CHECK_THROWS_AS(c.index(2, 2), std::out_of_range);
    CHECK(coloring_from_index(4, 2, 1).table == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1});
    CHECK(coloring_from_index(3, 3, 5).table == std::vector<std::uint8_t>{0, 1, 2});
    CHECK(coloring_count(4, 2, 1000) == 64u);
    CHECK_FALSE(coloring_count(8, 2, 1u << 25).has_value());
    Coloring bad = c;
    bad.table[0] = 2;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad.table.pop_back();
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("verify_config examples") {
    CHECK(verify_config(Coloring(4, 2, 0), {Variant::plain, 0, {0, 2}, {1, 3}}));
    CHECK(verify_config(Coloring(4, 2, 1), {Variant::mixed, 1, {0, 2}, {1, 3}}));
    auto c = from_pairs(4, 2, {{0, 3, 1}, {2, 3, 1}});
    CHECK_FALSE(verify_config(c, {Variant::plain, 1, {0, 2}, {1, 3}}));

    // interleaving failure is a plain false, malformed input throws
    CHECK_FALSE(verify_config(Coloring(4, 2, 0), {Variant::plain, 0, {0, 1}, {2, 3}}));
    CHECK_FALSE(verify_config(Coloring(4, 2, 0), {Variant::mixed, 0, {2, 1}, {}}));
    CHECK_THROWS_AS(verify_config(Coloring(4, 2), {Variant::plain, 0, {0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_config(Coloring(4, 2), {Variant::plain, 2, {0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_config(Coloring(4, 2), {Variant::plain, 0, {0}, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_config(Coloring(4, 2), {Variant::mixed, 0, {0}, {1}}), std::invalid_argument);
}

TEST_CASE("find_config examples") {
    auto a = find_config(Coloring(2, 1), 1, Variant::plain);
    REQUIRE(a);
    CHECK(*a == HalfGraphConfig{Variant::plain, 0, {0}, {1}});
    auto b = find_config(Coloring(1, 3), 1, Variant::mixed);
    REQUIRE(b);
    CHECK(*b == HalfGraphConfig{Variant::mixed, 0, {0}, {}});
    auto c = from_pairs(4, 2, {{0, 3, 1}});
    CHECK_FALSE(find_config(c, 2, Variant::plain));
    CHECK_THROWS_AS(find_config(c, 0, Variant::plain), std::invalid_argument);
    // mixed prefers the color-0 clique, then the least positive epsilon
    auto d = find_config(Coloring(5, 3, 2), 2, Variant::mixed);
    REQUIRE(d);
    CHECK(*d == HalfGraphConfig{Variant::mixed, 2, {0, 2}, {1, 3}});
}

TEST_CASE("relation examples") {
    auto r = relation_holds(4, 2, 2, Variant::plain);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample);
    CHECK_FALSE(find_config(*r.counterexample, 2, Variant::plain));
    CHECK(r.mode == "exhaustive");
    CHECK(r.space == 64);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 2; ++k)
            CHECK(relation_holds(n, 1, k, Variant::mixed).holds);
    CHECK(relation_holds(2, 1, 1, Variant::plain).holds);
    CHECK(relation_holds_below(4, 2, 2, Variant::plain).holds);
    CHECK_FALSE(relation_holds_below(4, 3, 2, Variant::plain).holds);
}

TEST_CASE("ramsey examples") {
    CHECK(ramsey_holds(6, 3, 2).holds);
    auto r = ramsey_holds(5, 3, 2);
    REQUIRE_FALSE(r.holds);
    // the counterexample is a pentagon: every vertex has two edges of each color
    const Coloring& c = *r.counterexample;
    for (int v = 0; v < 5; ++v) {
        int zero = 0;
        for (int u = 0; u < 5; ++u)
            if (u != v)
                zero += c.at(u, v) == 0;
        CHECK(zero == 2);
    }
    CHECK(r.checked == static_cast<std::uint64_t>(code_of(c)) + 1);
    for (int n = 1; n <= 5; ++n)
        CHECK(ramsey_holds(n, n, 1).holds);
}

TEST_CASE("square bracket examples") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 2; ++k)
            CHECK(square_bracket_holds(n, 2, k).holds);
    CHECK(square_bracket_holds(3, 2, 3).holds);
    CHECK(square_bracket_holds(5, 5, 2).holds);
    auto r = square_bracket_holds(4, 4, 3);
    REQUIRE_FALSE(r.holds);
    std::set<int> used(r.counterexample->table.begin(), r.counterexample->table.end());
    CHECK(used.size() == 3);
}

TEST_CASE("polarized rectangle examples") {
    Rectangle constant(3, std::vector<int>(4, 1));
    auto a = polarized_11_check(constant, 2);
    REQUIRE(a);
    CHECK(a->first == std::vector<int>{0, 1});
    CHECK(a->second == std::vector<int>{0, 1});
    CHECK_FALSE(polarized_11_check({{1, 0}, {0, 1}}, 2));
    auto b = polarized_11_check({{1, 0}, {0, 1}}, 1);
    REQUIRE(b);
    CHECK(b->first == std::vector<int>{0});
    CHECK(b->second == std::vector<int>{0});
    CHECK_THROWS_AS(polarized_11_check({{1}}, 2), std::invalid_argument);
}

TEST_CASE("relation agrees with the direct-intersection oracle") {
    for (auto v : {Variant::plain, Variant::mixed})
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= 3; ++m)
                for (int k = 1; k <= 2; ++k) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(k);
                    CAPTURE(to_string(v));
                    auto r = relation_holds(n, m, k, v);
                    auto o = oracle::relation_first_failure(n, m, k, v == Variant::mixed);
                    CHECK(r.holds == (o < 0));
                    if (!r.holds)
                        CHECK(code_of(*r.counterexample) == o);
                }
}

TEST_CASE("parallel and serial searches agree") {
    for (auto v : {Variant::plain, Variant::mixed})
        for (int n = 2; n <= 6; ++n) {
            auto a = relation_holds(n, 2, 2, v), b = serial::relation_holds(n, 2, 2, v);
            CHECK(a.holds == b.holds);
            CHECK(a.counterexample == b.counterexample);
            CHECK(a.checked == b.checked);
        }
    for (int n = 3; n <= 6; ++n) {
        CHECK(ramsey_holds(n, 3, 2).counterexample == serial::ramsey_holds(n, 3, 2).counterexample);
        CHECK(square_bracket_holds(n, 3, 3).counterexample == serial::square_bracket_holds(n, 3, 3).counterexample);
    }
}

TEST_CASE("sampling is explicit and reproducible") {
    CHECK_THROWS_AS(ramsey_holds(9, 4, 2), std::length_error);
    SearchOptions opt;
    opt.sampled = true;
    opt.samples = 300;
    opt.seed = 5;
    auto a = ramsey_holds(9, 4, 2, opt), b = serial::ramsey_holds(9, 4, 2, opt);
    CHECK(a.mode == "sampled");
    CHECK(a.space == 0);
    CHECK(a.holds == b.holds);
    CHECK(a.counterexample == b.counterexample);
    CHECK(a.checked == b.checked);
}

TEST_CASE("monotonicity over the small table") {
    for (auto v : {Variant::plain, Variant::mixed}) {
        auto t = relation_table(5, 3, 2, v);
        CHECK(t.size() == 30);
        CHECK(monotonicity_violations(t).empty());
    }
    // a doctored entry is caught
    std::vector<RelationEntry> t{{3, 1, 2, Variant::plain, true}, {4, 1, 1, Variant::plain, false}};
    CHECK(monotonicity_violations(t).size() == 1);
}

TEST_CASE("random colorings: self-consistency and the rectangle consequence") {
    test::Rng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + trial % 5, k = 1 + trial % 3, m = 1 + trial % 3;
        auto c = random_coloring(n, k, rng);
        for (auto v : {Variant::plain, Variant::mixed})
            if (auto cfg = find_config(c, m, v))
                CHECK(verify_config(c, *cfg));
        // a mixed config of twice the size always yields a plain one
        CHECK(mixed_implies_plain(c, 2 * m, m));
        if (auto cfg = find_config(c, 2, Variant::plain)) {
            Rectangle rect(2, std::vector<int>(2));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    rect[i][j] = c.at(cfg->alphas[i], cfg->betas[j]);
            CHECK(polarized_11_check(rect, 1));
        }
    }
    CHECK_FALSE(mixed_implies_plain(Coloring(3, 2, 0), 3, 3));
}
