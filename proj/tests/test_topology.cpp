#include "doctest.h"
#include "pcw/topology.hpp"
#include "test_support.hpp"

#include <stdexcept>

using namespace pcw;

namespace {

FiniteSpace sierpinski() {
    return FiniteSpace::from_opens(2, {0, 0b01, 0b11});
}

// Brute force over all opens, independent of minimal neighbourhoods.
Mask closure_by_opens(Mask s, const FiniteSpace& x) {
    Mask outside = 0;
    for (Mask u : x.opens())
        if (!(u & s))
            outside |= u;
    return x.all() & ~outside;
}

int density_of_subspace(const FiniteSpace& x, Mask y) {
    int best = popcount(y);
    for (Mask s = y;; s = (s - 1) & y) {
        Mask cl = 0;
        for (Mask u : x.opens())
            if (!(u & s))
                cl |= u;
        if ((y & ~cl) == y && popcount(s) < best)
            best = popcount(s);
        if (s == 0)
            break;
    }
    return best;
}

}  // namespace

TEST_CASE("closure examples") {
    auto s = sierpinski();
    CHECK(closure(0b01, s) == 0b11);
    CHECK(closure(0b10, s) == 0b10);
    CHECK(closure(0, s) == 0);
    auto d = FiniteSpace::discrete(5);
    for (Mask m = 0; m < 32; ++m)
        CHECK(closure(m, d) == m);
    CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0, 0b01}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSpace::from_opens(3, {0, 0b001, 0b010, 0b111}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSpace::discrete(17), std::length_error);
}

TEST_CASE("density and spread examples") {
    for (int n = 1; n <= 6; ++n) {
        auto d = FiniteSpace::discrete(n);
        CHECK(density(d) == n);
        CHECK(spread(d) == n);
        auto i = FiniteSpace::indiscrete(n);
        CHECK(density(i) == 1);
        CHECK(spread(i) == 1);
    }
    CHECK(density(sierpinski()) == 1);
    CHECK(spread(sierpinski()) == 1);
    auto inv = invariants(sierpinski());
    CHECK(inv.hL == 2);
    CHECK(inv.hd == 1);
    CHECK(inv.spread_plus == 2);
}

TEST_CASE("is_discrete examples") {
    auto i = FiniteSpace::indiscrete(3);
    CHECK(is_discrete(0b100, i));
    CHECK_FALSE(is_discrete(0b011, i));
    auto d = FiniteSpace::discrete(4);
    for (Mask m = 0; m < 16; ++m)
        CHECK(is_discrete(m, d));
}

TEST_CASE("hL witness") {
    auto w = hL_witness(sierpinski(), 2);
    REQUIRE(w);
    // a = 0 first: its neighbourhood {a} misses b
    CHECK(w->points == std::vector<int>{0, 1});
    CHECK_FALSE(hL_witness(FiniteSpace::indiscrete(3), 2));
    CHECK(hL_witness(FiniteSpace::indiscrete(3), 1));
    CHECK_FALSE(hL_witness(FiniteSpace::discrete(3), 4));
}

TEST_CASE("random spaces: closure axioms and invariant facts") {
    test::Rng rng(5);
    for (int k = 0; k < 60; ++k) {
        const int n = 1 + k % 8;
        auto x = random_space(n, rng);
        auto opens = x.opens();
        CHECK(FiniteSpace::from_opens(n, opens).basis() == x.basis());
        for (Mask s = 0; s <= x.all(); ++s) {
            const Mask c = closure(s, x);
            CHECK((s & ~c) == 0);
            CHECK(closure(c, x) == c);
            CHECK(c == closure_by_opens(s, x));
        }
        for (int t = 0; t < 20; ++t) {
            const Mask a = rng() & x.all(), b = a | (rng() & x.all());
            CHECK((closure(a, x) & ~closure(b, x)) == 0);
        }
        auto inv = invariants(x);
        CHECK(inv.density >= 1);
        CHECK(inv.hL >= inv.spread);
        CHECK(inv.hd >= inv.spread);
        CHECK(inv.hd >= inv.density);
        auto w = hL_witness(x, inv.hL);
        REQUIRE(w);
        for (std::size_t a = 0; a < w->points.size(); ++a) {
            CHECK(x.is_open(w->opens[a]));
            CHECK((w->opens[a] & bit(w->points[a])) != 0);
            for (std::size_t b = a + 1; b < w->points.size(); ++b)
                CHECK((w->opens[a] & bit(w->points[b])) == 0);
        }
        CHECK_FALSE(hL_witness(x, inv.hL + 1));
        if (is_t1(x))
            CHECK(spread(x) == n);
        if (n <= 6) {
            int hd = 0;
            for (Mask y = 1; y <= x.all(); ++y)
                hd = std::max(hd, density_of_subspace(x, y));
            CHECK(inv.hd == hd);
        }
    }
}

TEST_CASE("coloring_from_system examples") {
    SeparationSystem disjoint{6, {}, {0, 2, 4}, {0b11, 0b1100, 0b110000}, {0b1, 0b100, 0b10000}};
    for (Mask p = 0; p < 6; ++p)
        disjoint.closed_basis.push_back(bit(p));
    for (auto mode : {SeparationMode::density, SeparationMode::lindelof}) {
        auto c = coloring_from_system(disjoint, mode);
        CHECK(std::all_of(c.table.begin(), c.table.end(), [](auto v) { return v == 0; }));
    }
    // u2_0 holds every later point
    SeparationSystem first = disjoint;
    first.u2[0] = 0b010101;
    first.u1[0] = 0b111111;
    auto c = coloring_from_system(first, SeparationMode::density);
    CHECK(c.at(0, 1) == 1);
    CHECK(c.at(0, 2) == 1);
    CHECK(c.at(1, 2) == 0);
    // lindelof reads membership the other way round
    SeparationSystem last = disjoint;
    last.u2[2] = 0b010101;
    last.u1[2] = 0b111111;
    auto l = coloring_from_system(last, SeparationMode::lindelof);
    CHECK(l.at(0, 2) == 1);
    CHECK(l.at(1, 2) == 1);
    CHECK(l.at(0, 1) == 0);
    CHECK_THROWS_AS(coloring_from_system(first, SeparationMode::lindelof), std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_system(last, SeparationMode::density), std::invalid_argument);
}

TEST_CASE("discrete_from_config examples") {
    SeparationSystem disjoint{6, {}, {0, 2, 4}, {0b11, 0b1100, 0b110000}, {0b1, 0b100, 0b10000}};
    for (Mask p = 0; p < 6; ++p)
        disjoint.closed_basis.push_back(bit(p));
    HalfGraphConfig clique{Variant::mixed, 0, {0, 1, 2}, {}};
    auto f = discrete_from_config(disjoint, clique, SeparationMode::density);
    CHECK(f.points == std::vector<int>{0, 2, 4});
    CHECK(f.opens == disjoint.u2);
    CHECK_THROWS_AS(discrete_from_config(disjoint, {Variant::mixed, 1, {0}, {1}}, SeparationMode::density),
                    std::invalid_argument);

    for (auto mode : {SeparationMode::density, SeparationMode::lindelof}) {
        auto sys = nested_interval_system(mode, 8);
        auto c = coloring_from_system(sys, mode);
        CHECK(std::all_of(c.table.begin(), c.table.end(), [](auto v) { return v == 1; }));
        auto cfg = find_config(c, 4, Variant::mixed);
        REQUIRE(cfg);
        CHECK(cfg->epsilon == 1);
        auto fam = discrete_from_config(sys, *cfg, mode);
        CHECK(fam.points.size() == 2);
        CHECK(is_discrete_family(fam));
    }
}

TEST_CASE("the alpha-even lindelof pairing keeps y out of its own set") {
    auto sys = nested_interval_system(SeparationMode::lindelof, 8);
    auto cfg = find_config(coloring_from_system(sys, SeparationMode::lindelof), 4, Variant::mixed);
    REQUIRE(cfg);
    auto fam = lindelof_alpha_even_pairing(sys, *cfg);
    REQUIRE(fam.points.size() == 2);
    CHECK((fam.opens[0] & bit(fam.points[0])) == 0);
    CHECK_FALSE(is_discrete_family(fam));
}

TEST_CASE("extraction on random systems") {
    test::Rng rng(17);
    int case2 = 0;
    for (auto mode : {SeparationMode::density, SeparationMode::lindelof})
        for (int k = 0; k < 60; ++k) {
            auto sys = random_system(mode, 4 + k % 8, rng);
            CHECK_NOTHROW(validate(sys, mode));
            auto c = coloring_from_system(sys, mode);
            for (int m = 4; m >= 1; --m) {
                auto cfg = find_config(c, m, Variant::mixed);
                if (!cfg || (cfg->epsilon == 1 && m < 2))
                    continue;
                auto fam = discrete_from_config(sys, *cfg, mode);
                CHECK(is_discrete_family(fam));
                case2 += cfg->epsilon == 1;
                break;
            }
        }
    CHECK(case2 > 0);
}
