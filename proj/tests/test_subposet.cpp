#include "doctest.h"
#include "pcw/subposet.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace pcw;
using test::C;

namespace {

ReasonableParam example_y() {
    return {3, {Condition{}, C({{0, 0}})}, {0, mask_of({0, 1, 2})}};
}

}  // namespace

TEST_CASE("theta_of picks the next level") {
    CHECK(theta_of(3, test::P3()) == 9);
    CHECK(theta_of(9, test::P3()) == 18);
    CHECK(theta_of(2, test::P0()) == 4);
    CHECK_THROWS_AS(theta_of(18, test::P3()), std::invalid_argument);
}

TEST_CASE("example y: membership, alpha and ap") {
    Poset P(test::P3());
    SubPoset Q(P, example_y());
    const Condition q = C({{0, 0}, {1, 1}});
    CHECK(Q.contains(q));
    CHECK(Q.alpha(q) == 1);
    CHECK(Q.ap(q) == std::vector<Condition>{q});
    CHECK_FALSE(Q.contains(C({{0, 0}, {3, 0}})));
    CHECK_FALSE(Q.contains(C({{0, 1}})));
    CHECK(Q.alpha(Condition{}) == 0);
    CHECK_THROWS_AS(Q.alpha(C({{5, 1}})), std::invalid_argument);
    CHECK(Q.members().size() == 6);
    CHECK(std::is_sorted(Q.members().begin(), Q.members().end()));
    CHECK(Q.le(C({{0, 0}}), q));
    CHECK_FALSE(Q.le_pr(C({{0, 0}}), q));
}

TEST_CASE("theta granularity shrinks the example to its chain") {
    Poset P(test::P3());
    SubPoset Q(P, example_y(), Granularity::theta);
    CHECK(Q.members() == std::vector<Condition>{Condition{}, C({{0, 0}})});
    CHECK(granularity_from_string("theta") == Granularity::theta);
    CHECK_THROWS_AS(granularity_from_string("kapa"), std::invalid_argument);
}

TEST_CASE("validate_reasonable rejects broken parameters") {
    Poset P(test::P3());
    auto y = example_y();
    CHECK_NOTHROW(validate_reasonable(y, P));

    auto bad = y;
    bad.u_chain[1] = mask_of({0, 1, 2, 3});
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);

    bad = y;
    bad.u_chain = {mask_of({0}), 0};
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);

    bad = y;
    bad.u_chain.pop_back();
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);

    bad = y;
    bad.kappa = 18;
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);

    bad = y;
    bad.p_chain[1] = C({{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);

    // the second base grows the 9-block of the first
    bad = {3, {C({{0, 0}}), C({{0, 0}, {4, 1}})}, {0, 0}};
    CHECK_THROWS_AS(validate_reasonable(bad, P), std::invalid_argument);
}

TEST_CASE("degenerate y verifies everything") {
    Poset P(test::P3());
    SubPoset Q(P, {3, {Condition{}}, {0}});
    CHECK(Q.members().size() == 1);
    auto rep = check_quadruple_axioms(Q);
    CHECK(rep.ok());
    CHECK(rep.verified({"a", "b", "c", "d", "i", "j"}));
    for (const auto& t : check_observations(Q))
        CHECK_MESSAGE(t.violations == 0, t.clause);
}

TEST_CASE("clause j on the example depends on granularity") {
    Poset P(test::P3());
    auto kap = check_quadruple_axioms(SubPoset(P, example_y()));
    CHECK(kap.clauses.at("j").status == ClauseStatus::violated);
    CHECK(kap.clauses.at("j").detail.find("q*={0:0}") != std::string::npos);
    CHECK(kap.verified({"a", "b", "c", "d", "i"}));

    auto th = check_quadruple_axioms(SubPoset(P, example_y(), Granularity::theta));
    CHECK(th.ok());
    CHECK(th.verified({"a", "b", "c", "d", "i", "j"}));
    for (const char* k : {"e", "f", "g", "h"})
        CHECK(th.clauses.at(k).status == ClauseStatus::bounded_skip);
}

TEST_CASE("pure_mix on the example") {
    Poset P(test::P3());
    SubPoset Q(P, example_y());
    const Condition p = C({{0, 0}, {1, 1}});
    CHECK(Q.pure_mix(p, p, p) == p);
    CHECK_THROWS_AS(Q.pure_mix(p, C({{0, 0}}), p), std::invalid_argument);
}

TEST_CASE("random reasonable parameters are valid and obey the observations") {
    Poset P(test::P3());
    test::Rng rng(7);
    for (int k = 0; k < 6; ++k) {
        auto y = random_reasonable(P, 3, 1 + k % 4, rng);
        CHECK_NOTHROW(validate_reasonable(y, P));
        CHECK(y.u_chain.back() != 0);
        SubPoset Q(P, y);
        CHECK(Q.members().size() > y.p_chain.size() - 1);
        for (const auto& t : check_observations(Q))
            CHECK_MESSAGE(t.violations == 0, t.clause << " " << t.witness.value_or(""));
        auto rep = check_quadruple_axioms(Q, {4, 20000});
        for (const char* c : {"a", "b", "c", "d", "i"})
            CHECK_MESSAGE(rep.clauses.at(c).status == ClauseStatus::verified, c << " " << rep.clauses.at(c).detail);
    }
}

TEST_CASE("member cap") {
    Poset P(test::P3());
    CHECK_THROWS_AS(SubPoset(P, example_y(), Granularity::kappa, 3), std::length_error);
}
