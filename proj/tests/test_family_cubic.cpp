#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dp2/family_cubic.hpp"

using namespace dp2;
using cubic::CubicParams;
using cubic::GammaTag;
using cubic::Verdict3;

TEST_CASE("auxiliary polynomials") {
    auto p17 = cubic::example_params(17);
    auto aux = cubic::aux_polynomials(p17);
    // -13 t^3 + 13 t^2 - 1 and the pencil quartic C z^4 + 2z + A
    CHECK(aux.conic_inv.coeffs == std::vector<Rational>({Rational(-1), Rational(0), Rational(13),
                                                         Rational(-13)}));
    CHECK(aux.eckardt.eval(Rational(1)).is_zero());  // the built-in rational root k = 1
    CHECK(aux.s3_fixed.degree() == 4);

    auto p18 = cubic::example_params(18);
    auto aux18 = cubic::aux_polynomials(p18);
    // (1/2) t^3 + t^2 - 1, proportional to t^3 + 2t^2 - 2
    CHECK(aux18.conic_inv.eval(Rational(1)) == Rational(1, 2));
    CHECK(nf::rational_roots(aux18.conic_inv).empty());
    CHECK(aux18.eckardt.eval(Rational(1)).is_zero());
}

TEST_CASE("validation") {
    CubicParams bad{Rational(1), Rational(0), Rational(1), nf::SquareClassField::rationals()};
    CHECK_THROWS(cubic::c3_quotient_rational(bad));  // no omega
    CubicParams zero{Rational(1), Rational(0), Rational(0),
                     *nf::SquareClassField::parse("w")};
    CHECK_THROWS(cubic::c3_quotient_rational(zero));
}

TEST_CASE("quotient by the order-3 group") {
    CHECK(!cubic::c3_quotient_rational(cubic::example_params(15)));
    CHECK(cubic::c3_quotient_rational(cubic::example_params(16)));
    CHECK(cubic::c3_quotient_rational(cubic::example_params(17)));
    CHECK(!cubic::c3_quotient_rational(cubic::example_params(18)));
    CubicParams trivial{Rational(1), Rational(0), Rational(1),
                        *nf::SquareClassField::parse("w")};
    CHECK(cubic::c3_quotient_rational(trivial));
}

TEST_CASE("discrimination flags") {
    auto d15 = cubic::discrimination(cubic::example_params(15));
    CHECK(!d15.eckardt_galois_even);   // AC(16A^3C - 27) = 81/16
    CHECK(!d15.conic_inv_galois_even); // 16A^3C - 27 = 9

    auto d16 = cubic::discrimination(cubic::example_params(16));
    CHECK(!d16.eckardt_galois_even);
    CHECK(d16.conic_inv_galois_even);  // class 3 over Q(omega)

    auto d17 = cubic::discrimination(cubic::example_params(17));
    CHECK(d17.eckardt_galois_even);    // class 13 over Q(omega, sqrt -13)
    CHECK(!d17.conic_inv_galois_even); // 25

    auto d18 = cubic::discrimination(cubic::example_params(18));
    CHECK(d18.eckardt_galois_even);    // class -11 ~ 2 over Q(omega, sqrt -22)
    CHECK(d18.conic_inv_galois_even);

    CubicParams withB{Rational(1), Rational(1), Rational(1), *nf::SquareClassField::parse("w")};
    CHECK_THROWS(cubic::discrimination(withB));
}

TEST_CASE("galois image identification") {
    CHECK(cubic::gamma_identification(cubic::example_params(15)) ==
          GammaTag::ContainsGeiserOnly);
    CHECK(cubic::gamma_identification(cubic::example_params(16)) ==
          GammaTag::ContainsSGeiserClass);
    CHECK(cubic::gamma_identification(cubic::example_params(17)) == GammaTag::RcsGamma);
    CHECK(cubic::gamma_identification(cubic::example_params(18)) == GammaTag::RcGamma);
    CHECK(cubic::gamma_identification(cubic::example_params(19)) == GammaTag::RcGamma);

    // shapes of the constructed images
    CHECK(cubic::galois_image(cubic::example_params(17)).order() == 6);
    CHECK(cubic::galois_image(cubic::example_params(18)).order() == 6);
}

TEST_CASE("rationality of the surface") {
    CHECK(cubic::x_rationality_cubic(cubic::example_params(15)) == Verdict3::NonRational);
    CHECK(cubic::x_rationality_cubic(cubic::example_params(16)) == Verdict3::NonRational);
    CHECK(cubic::x_rationality_cubic(cubic::example_params(17)) == Verdict3::Rational);
    CHECK(cubic::x_rationality_cubic(cubic::example_params(18)) == Verdict3::Rational);
    CHECK(cubic::x_rationality_cubic(cubic::example_params(19)) == Verdict3::Rational);
}

TEST_CASE("quotient by the symmetric group") {
    CHECK(cubic::s3_quotient_verdict(cubic::example_params(15)) == Verdict3::NonRational);
    CHECK(cubic::s3_quotient_verdict(cubic::example_params(16)) == Verdict3::Rational);
    CHECK(cubic::s3_quotient_verdict(cubic::example_params(17)) == Verdict3::Rational);
    // the quoted fixed-point quartic z^4 + 16z + 16 of example 18 has the
    // rational root -2, so transitivity fails and the criterion is silent
    CHECK(cubic::s3_quotient_verdict(cubic::example_params(18)) == Verdict3::Undetermined);
    // the corrected parameters realize the intended non-rational quotient
    CHECK(cubic::s3_quotient_verdict(cubic::example_params(19)) == Verdict3::NonRational);
}

TEST_CASE("fixtures as a whole") {
    auto f15 = cubic::evaluate(cubic::example_params(15));
    CHECK(f15.gamma == GammaTag::ContainsGeiserOnly);
    CHECK(f15.x == Verdict3::NonRational);
    CHECK(f15.c3 == Verdict3::NonRational);
    CHECK(f15.s3 == Verdict3::NonRational);

    auto f16 = cubic::evaluate(cubic::example_params(16));
    CHECK(f16.x == Verdict3::NonRational);
    CHECK(f16.c3 == Verdict3::Rational);
    CHECK(f16.s3 == Verdict3::Rational);

    auto f17 = cubic::evaluate(cubic::example_params(17));
    CHECK(f17.x == Verdict3::Rational);
    CHECK(f17.c3 == Verdict3::Rational);
    CHECK(f17.s3 == Verdict3::Rational);

    auto f18 = cubic::evaluate(cubic::example_params(18));
    CHECK(f18.x == Verdict3::Rational);
    CHECK(f18.c3 == Verdict3::NonRational);
    CHECK(f18.s3 == Verdict3::Undetermined);

    auto f19 = cubic::evaluate(cubic::example_params(19));
    CHECK(f19.x == Verdict3::Rational);
    CHECK(f19.c3 == Verdict3::NonRational);
    CHECK(f19.s3 == Verdict3::NonRational);
}

TEST_CASE("eckardt point count") {
    CHECK(cubic::eckardt_points_count(cubic::example_params(17)) == 6);
    CHECK(cubic::eckardt_points_count(cubic::example_params(15)) == 6);
    CubicParams degenerate{Rational(0), Rational(1), Rational(1),
                           *nf::SquareClassField::parse("w")};
    // pencil cubic 4k^3 - 12k^2 + 9k = k(2k - 3)^2: two distinct roots
    CHECK(cubic::eckardt_points_count(degenerate) == 2);
}

TEST_CASE("gamma identification is consistent with the type-4 classification") {
    // whenever a named tag is returned, the image passes the two-part test
    for (int k : {17, 18, 19}) {
        auto img = cubic::galois_image(cubic::example_params(k));
        auto ab = weyl::compose(weyl::gen_a(), weyl::gen_b());
        std::vector<pic::Mat8> mats{ab.matrix};
        for (const auto& g : img.generators()) mats.push_back(weyl::lift(g).matrix);
        CHECK(weyl::invariant_rank(mats) == 1);
        CHECK(weyl::minimal_model_search(img, 5).max_k2 >= 5);
    }
}

TEST_CASE("agreement when C is a square") {
    // c3 and s3 verdicts agree on rational whenever C is a square
    for (int k : {16, 17}) {
        auto p = cubic::example_params(k);
        CHECK(cubic::c3_quotient_rational(p));
        CHECK(cubic::s3_quotient_verdict(p) == Verdict3::Rational);
    }
}
