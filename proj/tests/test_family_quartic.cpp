#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dp2/family_quartic.hpp"

#include <set>

using namespace dp2;
using quartic::Aut;
using quartic::Family;
using quartic::FamilyAction;
using quartic::QuarticPreset;
using quartic::Verdict;

namespace {

Aut A(const std::string& w) { return *quartic::parse_aut(w); }

std::vector<Aut> G(std::initializer_list<const char*> words) {
    std::vector<Aut> out;
    for (const char* w : words) out.push_back(A(w));
    return out;
}

}  // namespace

TEST_CASE("automorphism algebra") {
    CHECK(quartic::order(A("a")) == 4);
    CHECK(quartic::order(A("n")) == 2);
    CHECK(quartic::order(A("a3b")) == 4);
    CHECK(quartic::order(A("dg")) == 2);
    CHECK(compose(A("a3b"), A("a3b")) == A("n"));
    CHECK(compose(A("d"), compose(A("a"), A("d"))) == A("b"));
    CHECK(compose(A("ab"), A("ab3")) == compose(A("a"), A("a")));
    CHECK(quartic::generate(G({"ab", "ab3", "d", "g"})).size() == 32);
    CHECK(quartic::generate(G({"a", "b", "d", "g"})).size() == 64);
    CHECK(quartic::generate(G({"a3b", "a2d"})).size() == 8);   // Q8
    CHECK(quartic::generate(G({"a3b", "dg"})).size() == 8);    // D8
    CHECK(quartic::generate(G({"a2g", "b2g"})).size() == 4);   // C2 x C2
    CHECK(quartic::inverse(A("a3b")) == A("ab3"));
}

TEST_CASE("lattice dictionary relations") {
    auto al = quartic::lat_alpha();
    auto be = quartic::lat_beta();
    auto de = quartic::lat_delta();
    auto ga = quartic::lat_gamma();
    CHECK(ga == weyl::geiser());
    auto grp = weyl::SubgroupClosure::generate({al, be, de, ga});
    CHECK(grp.order() == 64);  // ((C4 x C4) : C2) x C2
    CHECK(weyl::compose(al, be) == weyl::compose(be, al));
    CHECK(weyl::compose(weyl::compose(de, al), de) == be);
    // the lattice image is faithful on the 32-element acting subgroup
    std::set<std::uint64_t> keys;
    for (const auto& e : quartic::generate(G({"ab", "ab3", "d", "g"})))
        keys.insert(weyl::perm_key(quartic::lattice(e).perm));
    CHECK(keys.size() == 32);
}

TEST_CASE("labeled line catalog") {
    const auto& cat = quartic::catalog();
    CHECK(cat.size() == 56);
    CHECK(quartic::family_lines(Family::Theta).size() == 8);
    CHECK(quartic::family_lines(Family::Eta).size() == 16);
    CHECK(quartic::family_lines(Family::Sigma).size() == 16);
    CHECK(quartic::family_lines(Family::Tau).size() == 16);
    std::set<int> seen;
    for (const auto& l : cat) seen.insert(l.line);
    CHECK(seen.size() == 56);

    // theta lines are invariant under alpha^2 beta^2, the rest meet their image once
    auto n = quartic::lattice(quartic::aut_n());
    const auto& prod = pic::line_products();
    for (int l : quartic::family_lines(Family::Theta)) CHECK(n.perm[l] == l);
    for (Family f : {Family::Eta, Family::Sigma, Family::Tau})
        for (int l : quartic::family_lines(f)) CHECK(prod[l][n.perm[l]] == 1);

    // pair-contraction identity: a non-theta line meets its n-image once and
    // its n*gamma-image not at all
    auto ng = quartic::lattice(compose(quartic::aut_n(), quartic::aut_gamma()));
    for (Family f : {Family::Eta, Family::Sigma, Family::Tau})
        for (int l : quartic::family_lines(f)) CHECK(prod[l][ng.perm[l]] == 0);

    // each family is preserved by the acting group
    for (const auto& e : quartic::generate(G({"ab", "ab3", "d", "g"}))) {
        auto p = quartic::lattice(e).perm;
        for (int l = 0; l < 56; ++l)
            CHECK(quartic::family_of_line(p[l]) == quartic::family_of_line(l));
    }
}

TEST_CASE("galois models of the nine examples") {
    auto m2 = quartic::galois_model(quartic::example_preset(2));
    CHECK(m2.sigma == FamilyAction::NGamma);
    CHECK(m2.tau == FamilyAction::NGamma);
    CHECK(m2.eta == FamilyAction::NGamma);

    auto m3 = quartic::galois_model(quartic::example_preset(3));
    CHECK(m3.sigma == FamilyAction::NGamma);
    CHECK(m3.tau == FamilyAction::NGamma);
    CHECK(m3.eta == FamilyAction::Id);

    auto m4 = quartic::galois_model(quartic::example_preset(4));
    CHECK(m4.sigma == FamilyAction::Id);
    CHECK(m4.eta == FamilyAction::NGamma);

    auto m6 = quartic::galois_model(quartic::example_preset(6));
    CHECK(m6.sigma == FamilyAction::Gamma);
    CHECK(m6.tau == FamilyAction::Gamma);
    CHECK(m6.eta == FamilyAction::Gamma);

    auto m7 = quartic::galois_model(quartic::example_preset(7));
    CHECK(m7.sigma == FamilyAction::N);
    CHECK(m7.tau == FamilyAction::N);
    CHECK(m7.eta == FamilyAction::Gamma);

    auto m8 = quartic::galois_model(quartic::example_preset(8));
    CHECK(m8.sigma == FamilyAction::Full);
    CHECK(m8.tau == FamilyAction::Full);
    CHECK(m8.eta == FamilyAction::N);
    for (const auto& orbit : m8.theta_orbits) CHECK(orbit.size() == 4);

    auto m9 = quartic::galois_model(quartic::example_preset(9));
    CHECK(m9.sigma == FamilyAction::Full);
    CHECK(m9.tau == FamilyAction::Full);
    CHECK(m9.eta == FamilyAction::Gamma);

    auto m1 = quartic::galois_model(quartic::example_preset(1));
    CHECK(m1.sigma == FamilyAction::Id);
    CHECK(m1.generators.empty());
    CHECK(m1.theta_orbits.size() == 8);
}

TEST_CASE("preset validation") {
    QuarticPreset bad;
    bad.sigma = quartic::ClassSym::Nu;
    bad.galois_rank = 1;
    CHECK_THROWS_AS(quartic::galois_model(bad), quartic::UnsupportedRegime);
    QuarticPreset bad2;
    bad2.sigma = quartic::ClassSym::Mu;
    bad2.galois_rank = 0;
    CHECK_THROWS_AS(quartic::galois_model(bad2), quartic::UnsupportedRegime);
}

TEST_CASE("minimality of the example groups") {
    // example 1: Q8 with everything split
    auto r1 = quartic::g_minimality(G({"a3b", "a2d"}), quartic::example_preset(1));
    CHECK(r1.g_minimal);
    CHECK(r1.combined_rank == 1);
    // trivial group over a split field is nowhere minimal
    auto r0 = quartic::g_minimality({}, quartic::example_preset(1));
    CHECK(!r0.g_minimal);
    CHECK(r0.combined_rank == 8);
    // example 2: every listed type is minimal through the Galois fusion alone
    for (auto gens : {G({"n"}), G({"a3b"}), G({"a3bg"}), G({"a2g", "b2g"}), G({"a3b", "dg"}),
                      G({"a3b", "a2d"}), G({"a3b", "abdg"})}) {
        auto r = quartic::g_minimality(gens, quartic::example_preset(2));
        CHECK(r.g_minimal);
    }
    // example 8: rho(X)^G = rho(X) = 1
    auto r8 = quartic::g_minimality({}, quartic::example_preset(9));
    CHECK(r8.g_minimal);
    CHECK(r8.combined_rank == 1);
}

TEST_CASE("x rationality across the nine examples") {
    for (int k = 1; k <= 5; ++k)
        CHECK(quartic::x_rationality(quartic::example_preset(k)) == Verdict::Rational);
    for (int k = 6; k <= 9; ++k)
        CHECK(quartic::x_rationality(quartic::example_preset(k)) == Verdict::NonRational);
}

TEST_CASE("quotient verdicts reproduce the example texts") {
    const Verdict R = Verdict::Rational, N = Verdict::NonRational;
    auto check = [](int example, std::vector<Aut> gens, Verdict expect) {
        CAPTURE(example);
        CHECK(quartic::quotient_verdict(gens, quartic::example_preset(example)) == expect);
    };
    // example 1
    check(1, G({"a3b", "a2d"}), R);
    // example 2: non-rational for C2, C4, Q8; rational for C2^2, D8
    check(2, G({"n"}), N);
    check(2, G({"a3b"}), N);
    check(2, G({"a3bg"}), N);
    check(2, G({"a3b", "a2d"}), N);
    check(2, G({"a3b", "abdg"}), N);
    check(2, G({"a2g", "b2g"}), R);
    check(2, G({"a3b", "dg"}), R);
    // example 3: all three listed groups rational
    check(3, G({"a2d"}), R);
    check(3, G({"a3bg"}), R);
    check(3, G({"a3bg", "a2d"}), R);
    // example 4: D8 non-rational
    check(4, G({"a3b", "dg"}), N);
    // example 5: N rational, C2^2 non-rational
    check(5, G({"n"}), R);
    check(5, G({"a2g", "b2g"}), N);
    // example 6: same split as example 2, plus the type-2 branch
    check(6, G({"n"}), N);
    check(6, G({"dg"}), N);
    check(6, G({"a3b"}), N);
    check(6, G({"a3bg"}), N);
    check(6, G({"a3b", "a2d"}), N);
    check(6, G({"a3b", "abdg"}), N);
    check(6, G({"a2g", "b2g"}), R);
    check(6, G({"a3b", "dg"}), R);
    // example 7: Q8 rational, D8 non-rational
    check(7, G({"a3b", "a2dg"}), R);
    check(7, G({"a3b", "dg"}), N);
    // example 8: C4 rational, C2^2 non-rational
    check(8, G({"a3bg"}), R);
    check(8, G({"a2g", "b2g"}), N);
    // example 9: all three listed groups rational
    check(9, G({"n"}), R);
    check(9, G({"a3b"}), R);
    check(9, G({"a3b", "a2d"}), R);
}

TEST_CASE("table of 44 cells") {
    int impossible = 0, quartic_cells = 0, cubic_cells = 0;
    for (int row = 1; row <= 11; ++row)
        for (int col = 1; col <= 4; ++col) {
            auto cell = quartic::table4(row, col);
            CAPTURE(row);
            CAPTURE(col);
            switch (cell.kind) {
                case quartic::TableCell::Kind::Impossible:
                    ++impossible;
                    CHECK(!cell.impossible_reason.empty());
                    break;
                case quartic::TableCell::Kind::Cubic:
                    ++cubic_cells;
                    CHECK((row == 4 || row == 8));
                    break;
                case quartic::TableCell::Kind::Quartic: {
                    ++quartic_cells;
                    auto preset = quartic::example_preset(cell.example);
                    CHECK(quartic::x_rationality(preset) == cell.x_expected);
                    CHECK(quartic::quotient_verdict(cell.group, preset) ==
                          cell.quotient_expected);
                    // expected columns match the (X, X/G) pattern
                    Verdict xcol = (col <= 2) ? Verdict::Rational : Verdict::NonRational;
                    Verdict qcol = (col == 1 || col == 3) ? Verdict::Rational
                                                          : Verdict::NonRational;
                    CHECK(cell.x_expected == xcol);
                    CHECK(cell.quotient_expected == qcol);
                    break;
                }
            }
        }
    CHECK(impossible == 6);
    CHECK(cubic_cells == 8);
    CHECK(quartic_cells == 30);
}
