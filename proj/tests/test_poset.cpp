#include "doctest.h"

#include "oracles.hpp"
#include "pcw/poset.hpp"
#include "pcw/poset_props.hpp"
#include "test_support.hpp"

#include <set>
#include <stdexcept>

using namespace pcw;
using test::C;

TEST_CASE("is_condition") {
    Poset p3(test::P3()), p0(test::P0());
    CHECK(p3.is_condition(C({{0, 0}, {1, 1}})));
    CHECK_FALSE(p0.is_condition(C({{0, 0}, {1, 1}})));
    CHECK(p0.first_overfull(C({{0, 0}, {1, 1}})) == Block{2, 0});
    CHECK(p3.is_condition(Condition{}));
    CHECK(p0.is_condition(Condition{}));
    CHECK_THROWS_AS(p0.is_condition(C({{9, 0}})), std::out_of_range);
}

TEST_CASE("growth_profile") {
    Poset P(test::P3());
    auto g = P.growth_profile(C({{0, 0}}), C({{0, 0}, {1, 1}, {3, 0}}));
    CHECK(g.at(3) == std::vector<int>{0});
    CHECK(g.at(9) == std::vector<int>{0});
    CHECK(g.at(18) == std::vector<int>{0});
    for (auto& [t, v] : P.growth_profile(C({{0, 0}}), C({{0, 0}})))
        CHECK(v.empty());
    for (auto& [t, v] : P.growth_profile(Condition{}, C({{0, 0}})))
        CHECK(v.empty());
    CHECK_THROWS_AS(P.growth_profile(C({{0, 0}}), C({{0, 1}})), std::invalid_argument);
}

TEST_CASE("le, le_pr, le_ap") {
    Poset P(test::P3());
    auto p = C({{0, 0}});
    CHECK(P.le(p, C({{0, 0}, {1, 1}, {3, 0}})));
    CHECK_FALSE(P.le(p, C({{0, 1}})));
    CHECK(P.le(Condition{}, C({{0, 1}, {5, 0}, {17, 1}})));

    CHECK(P.le_pr(3, p, C({{0, 0}, {3, 0}})));
    CHECK_FALSE(P.le_pr(3, p, C({{0, 0}, {1, 1}})));
    CHECK_FALSE(P.le_pr(18, p, C({{0, 0}, {3, 0}})));
    CHECK(P.le_pr(18, p, p));

    CHECK(P.le_ap(3, p, C({{0, 0}, {1, 1}})));
    CHECK_FALSE(P.le_ap(3, p, C({{0, 0}, {3, 0}})));
    CHECK(P.le_ap(18, p, C({{0, 0}, {3, 0}})));
    CHECK_THROWS_AS(P.le_pr(4, p, p), std::invalid_argument);
}

TEST_CASE("growth budget blocks le") {
    // three growing 3-blocks at budget 3
    ParamSet ps{3, 27, {3, 27}, {{3, 3}, {27, 9}}};
    Poset P(ps);
    auto p = C({{0, 0}, {3, 0}, {6, 0}});
    auto q = C({{0, 0}, {1, 0}, {3, 0}, {4, 0}, {6, 0}});
    REQUIRE(P.is_condition(q));
    CHECK(P.le(p, q));
    auto q3 = C({{0, 0}, {1, 0}, {3, 0}, {4, 0}, {6, 0}, {7, 0}});
    REQUIRE(P.is_condition(q3));
    CHECK(P.growth_count(3, p, q3) == 3);
    CHECK_FALSE(P.le(p, q3));
}

TEST_CASE("supp") {
    Poset P(test::P3());
    CHECK(set_of(P.supp(3, C({{0, 0}}), C({{0, 0}, {1, 1}}))) == IntSet{0, 1, 2});
    CHECK(P.supp(3, C({{0, 0}}), C({{0, 0}})) == 0);
    CHECK(set_of(P.supp(9, C({{0, 0}}), C({{0, 0}, {3, 0}}))) == IntSet{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("union_lub") {
    Poset P(test::P3());
    auto r = P.union_lub({C({{0, 0}}), C({{3, 1}})});
    REQUIRE(r.result);
    CHECK(*r.result == C({{0, 0}, {3, 1}}));
    CHECK(r.upper_bound);

    r = P.union_lub({C({{0, 0}}), C({{0, 1}})});
    CHECK_FALSE(r.result);
    CHECK(r.clash == 0);

    r = P.union_lub({C({{0, 0}, {1, 1}})});
    CHECK(*r.result == C({{0, 0}, {1, 1}}));

    r = P.union_lub({C({{0, 0}, {1, 1}}), C({{2, 0}})});
    CHECK_FALSE(r.result);
    CHECK(r.overfull == Block{3, 0});
}

TEST_CASE("decompose") {
    Poset P(test::P3());
    auto d = P.decompose(3, C({{0, 0}}), C({{0, 0}, {1, 1}, {3, 0}}));
    CHECK(d.r == C({{0, 0}, {3, 0}}));
    CHECK(d.s == C({{0, 0}, {1, 1}}));

    auto q = C({{0, 0}, {1, 1}});
    d = P.decompose(3, q, q);
    CHECK(d.r == q);
    CHECK(d.s == q);

    d = P.decompose(3, C({{0, 0}}), C({{0, 0}, {3, 0}}));
    CHECK(d.r == C({{0, 0}, {3, 0}}));
    CHECK(d.s == C({{0, 0}}));

    d = P.decompose(18, C({{0, 0}}), C({{0, 0}, {3, 0}}));
    CHECK(d.r == C({{0, 0}}));
    CHECK(d.s == C({{0, 0}, {3, 0}}));

    CHECK_THROWS_AS(P.decompose(3, C({{0, 1}}), q), std::invalid_argument);
}

TEST_CASE("witness_pair") {
    Poset P(test::P3());
    auto w = P.witness_pair(3, C({{0, 0}}), C({{3, 1}}), C({{0, 0}, {1, 1}, {3, 1}}));
    CHECK(w.q == C({{0, 0}, {3, 1}}));
    CHECK(w.t == C({{3, 1}}));

    auto r = C({{0, 0}, {1, 1}});
    w = P.witness_pair(3, r, r, r);
    CHECK(w.q == r);
    CHECK(w.t == r);

    w = P.witness_pair(3, C({{0, 0}}), C({{0, 0}}), r);
    CHECK(w.t == r);
    CHECK(w.q == C({{0, 0}}));

    CHECK_THROWS_AS(P.witness_pair(3, C({{0, 1}}), C({{0, 0}}), r), std::invalid_argument);
}

TEST_CASE("enumeration counts agree with two oracles") {
    Poset P1(test::P1());
    auto all = P1.enumerate_conditions();
    CHECK(all.size() == 811);
    CHECK(oracle::count_by_domains(test::P1()) == 811);
    CHECK(oracle::count_by_partial_maps(test::P1()) == 811);

    Poset P0(test::P0());
    auto all0 = P0.enumerate_conditions();
    CHECK(all0.size() == oracle::count_by_domains(test::P0()));
    CHECK(all0.size() == oracle::count_by_partial_maps(test::P0()));

    ParamSet degenerate{1, 1, {1}, {{1, 1}}};
    auto none = Poset(degenerate).enumerate_conditions();
    REQUIRE(none.size() == 1);
    CHECK(none.front().empty());

    CHECK_THROWS_AS(Poset(test::P3()).enumerate_conditions(), std::length_error);
}

TEST_CASE("enumeration is duplicate free and ordered") {
    Poset P(test::P1());
    auto all = P.enumerate_conditions();
    std::set<Condition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    auto key = [](const Condition& c) {
        std::vector<int> dom, val;
        for (auto [i, v] : c.pairs()) {
            dom.push_back(i);
            val.push_back(v);
        }
        return std::make_pair(dom, val);
    };
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(key(all[i]) < key(all[i + 1]));
    for (auto& c : all)
        CHECK(P.is_condition(c));
}

TEST_CASE("extensions_within stays inside the region") {
    Poset P(test::P3());
    auto base = C({{0, 0}});
    auto ext = P.extensions_within(base, P.class_mask(0, 3));
    // two free points, budget 3 per block: 1 + 2*2 + 0 (three points overflow)
    CHECK(ext.size() == 1 + 2 + 2);
    for (auto& c : ext) {
        CHECK(base.subset_of(c));
        CHECK((c.domain & ~P.class_mask(0, 3)) == 0);
    }
}

TEST_CASE("property suite is clean on the small sets") {
    for (auto ps : {test::P0(), test::P1()}) {
        Poset P(ps);
        PosetSuiteConfig cfg;
        cfg.samples = 4000;
        auto rep = run_poset_suite(P, cfg);
        CHECK(rep.mode == "exhaustive");
        for (auto& t : rep.clauses) {
            INFO(t.clause << " " << t.witness.value_or(""));
            CHECK(t.violations == 0);
            CHECK(t.checked > 0);
        }
    }
}

TEST_CASE("property suite samples when enumeration is out of reach") {
    Poset P(test::P3());
    PosetSuiteConfig cfg;
    cfg.samples = 2000;
    cfg.pool = 60;
    cfg.pair_limit = 50000;
    auto rep = run_poset_suite(P, cfg);
    CHECK(rep.mode == "sampled");
    for (auto& t : rep.clauses) {
        INFO(t.clause << " " << t.witness.value_or(""));
        CHECK(t.violations == 0);
    }
}
