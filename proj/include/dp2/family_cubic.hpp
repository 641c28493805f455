#pragma once

#include "dp2/numberfield.hpp"
#include "dp2/rational.hpp"
#include "dp2/weyl.hpp"

#include <string>

namespace dp2::cubic {

// The family (x^3 + y^3) z + A x^2 y^2 + 2B xy z^2 + C z^4 = t^2 over a field
// containing a primitive cube root of unity, with the order-3 action
// (x : y : z : t) -> (omega x : omega^2 y : z : t) and the swap extending it
// to S3.

struct CubicParams {
    Rational A;
    Rational B;
    Rational C;
    nf::SquareClassField field;
};

// Throws std::invalid_argument unless the field contains omega (class -3)
// and C is nonzero.
void validate(const CubicParams& p);

struct AuxPolynomials {
    nf::RationalPoly eckardt;    // 4(B^2 - AC) k^3 - 12B k^2 + 9k - 4A
    nf::RationalPoly conic_inv;  // 4C t^3 - 4(B^2 - AC) t^2 - 4B t - 1
    nf::RationalPoly s3_fixed;   // C z^4 + 2B z^2 + 2z + A
};

AuxPolynomials aux_polynomials(const CubicParams& p);

// X / C3 is rational exactly when C is a square in the field.
bool c3_quotient_rational(const CubicParams& p);

enum class Verdict3 { Rational, NonRational, Undetermined };
std::string verdict3_name(Verdict3 v);

// X / S3: rational when C is a square; non-rational when C is not a square
// and the degree-4 fixed-point equation is irreducible over the field;
// undetermined otherwise.
Verdict3 s3_quotient_verdict(const CubicParams& p);

struct Discrimination {
    bool eckardt_galois_even = false;    // AC(16 A^3 C - 27) not a square
    bool conic_inv_galois_even = false;  // 16 A^3 C - 27 not a square
};

// Requires B = 0; the flags are cross-checked against the discriminant
// square classes of the two cubics.
Discrimination discrimination(const CubicParams& p);

enum class GammaTag {
    ContainsGeiserOnly,
    ContainsSGeiserClass,
    RcsGamma,   // conjugate to <r, cs gamma>
    RcGamma,    // conjugate to <r, c gamma>
    RcGammaS,   // conjugate to <r, c gamma, s>
    Other
};

std::string gamma_tag_name(GammaTag t);

// Builds the Galois image inside the centralizer of the order-3 group from
// the root and square-class data of the auxiliary polynomials (B = 0 only;
// other inputs report Other) and matches it against the known subgroup
// shapes by conjugacy.
GammaTag gamma_identification(const CubicParams& p);

// The constructed Galois image itself (for rank checks and cross-validation).
weyl::SubgroupClosure galois_image(const CubicParams& p);

Verdict3 x_rationality_cubic(const CubicParams& p);

// Number of generalized Eckardt points: six whenever the pencil polynomial
// k . eckardt(k) is a separable quartic and A is nonzero; the degenerate
// A = 0 case reports the distinct-root count of the pencil cubic instead.
int eckardt_points_count(const CubicParams& p);

// Worked examples 15..18; 19 is the corrected variant of 18 whose
// fixed-point quartic is genuinely irreducible.
CubicParams example_params(int k);

struct ExampleFixture {
    GammaTag gamma;
    Verdict3 x;
    Verdict3 c3;
    Verdict3 s3;
};

ExampleFixture evaluate(const CubicParams& p);

}  // namespace dp2::cubic
