#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dp2/quotient.hpp"

using namespace dp2;
using dp2::Rational;

TEST_CASE("table of singularity data") {
    auto a1 = quot::SingularityType::du_val(2);
    CHECK(a1.delta_k2 == Rational(0));
    CHECK(a1.delta_c2 == Rational(-1, 2));
    CHECK(a1.chain == std::vector<int>{-2});

    auto a2 = quot::SingularityType::du_val(3);
    CHECK(a2.delta_k2 == Rational(0));
    CHECK(a2.delta_c2 == Rational(-2, 3));
    CHECK(a2.chain == std::vector<int>({-2, -2}));

    auto t = quot::SingularityType::third_11();
    CHECK(t.delta_k2 == Rational(-1, 3));
    CHECK(t.chain == std::vector<int>{-3});

    auto s = quot::SingularityType::seventh_13();
    CHECK(s.delta_k2 == Rational(-3, 7));
    CHECK(s.delta_c2 == Rational(-3, 7));
    CHECK(s.delta_d2 == Rational(-5, 7));
    CHECK(s.chain == std::vector<int>({-3, -2, -2}));

    CHECK(a1.name() == "A1");
    CHECK(s.name() == "1/7(1,3)");
}

TEST_CASE("hurwitz computations") {
    CHECK(quot::hurwitz_k2(2, Rational(2), {{1, 2}}) == Rational(4));
    CHECK(quot::hurwitz_k2(4, Rational(2), {{1, 2}, {1, 2}, {1, 2}}) == Rational(8));
    CHECK(quot::hurwitz_k2(3, Rational(2), {{1, 3}}) == Rational(6));
    CHECK(quot::hurwitz_k2(1, Rational(2), {}) == Rational(2));
    CHECK(quot::hurwitz_k2(7, Rational(2), {}) == Rational(2, 7));
    CHECK(quot::hurwitz_k2(168, Rational(2), std::vector<quot::RamificationCurve>(21, {1, 2})) ==
          Rational(121, 21));
    CHECK_THROWS(quot::hurwitz_k2(0, Rational(2), {}));
    CHECK_THROWS(quot::hurwitz_k2(2, Rational(2), {{1, 3}}));  // inertia must divide order
}

TEST_CASE("hurwitz with empty ramification is kx2 / order") {
    for (int n = 1; n <= 12; ++n)
        CHECK(quot::hurwitz_k2(n, Rational(2), {}) == Rational(2, n));
}

TEST_CASE("proper transform corrections") {
    std::vector<std::pair<quot::SingularityType, quot::LocalRole>> four_a1(
        4, {quot::SingularityType::du_val(2), quot::LocalRole::C});
    CHECK(quot::proper_transform_self_int(Rational(1), four_a1) == Rational(-1));
    CHECK(quot::proper_transform_self_int(Rational(0), {}) == Rational(0));
    CHECK(quot::proper_transform_self_int(
              Rational(-1), {{quot::SingularityType::seventh_13(), quot::LocalRole::D}}) ==
          Rational(-12, 7));
}

TEST_CASE("scenario ledgers reach the stated values") {
    auto check = [](quot::Scenario s, std::int64_t expect) {
        auto ledger = quot::run_scenario(s);
        CHECK(ledger.result == Rational(expect));
        CHECK(ledger.result.is_integer());
        CHECK(ledger.replay() == ledger.result);
    };
    check(quot::Scenario::Type0, 9);
    check(quot::Scenario::Type1, 4);
    check(quot::Scenario::Type2, 2);
    check(quot::Scenario::Type3, 6);
    check(quot::Scenario::Type4, 4);
    check(quot::Scenario::V4, 8);
    check(quot::Scenario::Type5, 8);
    check(quot::Scenario::PSL2F7, 5);
}

TEST_CASE("scenario intermediate values") {
    auto type4 = quot::run_scenario(quot::Scenario::Type4);
    REQUIRE(type4.steps.size() == 4);
    CHECK(type4.steps[0].k2_after == Rational(2, 3));
    CHECK(type4.steps[1].k2_after == Rational(2, 3));  // two A2 cost nothing
    CHECK(type4.steps[2].k2_after == Rational(0));
    CHECK(type4.steps[3].k2_after == Rational(4));

    auto type5 = quot::run_scenario(quot::Scenario::Type5);
    CHECK(type5.steps[0].k2_after == Rational(2, 7));
    CHECK(type5.steps[1].k2_after == Rational(-1));
    CHECK(type5.steps[2].k2_after == Rational(8));

    auto psl = quot::run_scenario(quot::Scenario::PSL2F7);
    CHECK(psl.steps[0].k2_after == Rational(121, 21));
    CHECK(psl.steps[2].k2_after == Rational(5));

    auto type2 = quot::run_scenario(quot::Scenario::Type2);
    CHECK(type2.steps[0].k2_after == Rational(1));
}

TEST_CASE("du val points never change K^2") {
    for (int n = 2; n <= 12; ++n) {
        auto a = quot::SingularityType::du_val(n);
        CHECK(a.delta_k2 == Rational(0));
        CHECK((int)a.chain.size() == n - 1);
        for (int c : a.chain) CHECK(c == -2);
        CHECK(a.delta_c2 == Rational(-(n - 1), n));
    }
}

TEST_CASE("scenario parsing") {
    CHECK(quot::parse_scenario("Type4") == quot::Scenario::Type4);
    CHECK(quot::parse_scenario("psl2f7") == quot::Scenario::PSL2F7);
    CHECK(!quot::parse_scenario("type9").has_value());
    for (auto s : quot::all_scenarios()) CHECK(quot::parse_scenario(quot::scenario_name(s)) == s);
}
