#include "dp2/family_cubic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dp2::cubic {

using nf::RationalPoly;
using weyl::Isometry;
using weyl::SubgroupClosure;

void validate(const CubicParams& p) {
    if (!nf::is_square_in(Rational(-3), p.field))
        throw std::invalid_argument("the field must contain a primitive cube root of unity");
    if (p.C.is_zero()) throw std::invalid_argument("C must be nonzero");
}

AuxPolynomials aux_polynomials(const CubicParams& p) {
    Rational disc = p.B * p.B - p.A * p.C;
    AuxPolynomials a;
    a.eckardt.coeffs = {Rational(-4) * p.A, Rational(9), Rational(-12) * p.B,
                        Rational(4) * disc};
    a.conic_inv.coeffs = {Rational(-1), Rational(-4) * p.B, Rational(-4) * disc,
                          Rational(4) * p.C};
    a.s3_fixed.coeffs = {p.A, Rational(2), Rational(2) * p.B, Rational(0), p.C};
    return a;
}

bool c3_quotient_rational(const CubicParams& p) {
    validate(p);
    return nf::is_square_in(p.C, p.field);
}

std::string verdict3_name(Verdict3 v) {
    switch (v) {
        case Verdict3::Rational: return "rational";
        case Verdict3::NonRational: return "non-rational";
        case Verdict3::Undetermined: return "undetermined";
    }
    return {};
}

Verdict3 s3_quotient_verdict(const CubicParams& p) {
    validate(p);
    if (nf::is_square_in(p.C, p.field)) return Verdict3::Rational;
    auto aux = aux_polynomials(p);
    switch (nf::quartic_transitive_over(aux.s3_fixed, p.field)) {
        case nf::Transitivity::Transitive: return Verdict3::NonRational;
        case nf::Transitivity::NotTransitive:
        case nf::Transitivity::Inconclusive: return Verdict3::Undetermined;
    }
    return Verdict3::Undetermined;
}

Discrimination discrimination(const CubicParams& p) {
    validate(p);
    if (!p.B.is_zero()) throw std::invalid_argument("the parity rule assumes B = 0");
    Rational t = Rational(16) * p.A * p.A * p.A * p.C - Rational(27);
    Discrimination d;
    d.eckardt_galois_even = !nf::is_square_in(p.A * p.C * t, p.field);
    d.conic_inv_galois_even = !nf::is_square_in(t, p.field);
    // cross-check against the discriminant classes computed from the cubics
    auto aux = aux_polynomials(p);
    auto eck = nf::cubic_analysis(aux.eckardt, p.field);
    auto rs = nf::cubic_analysis(aux.conic_inv, p.field);
    if (eck.galois_order_even != d.eckardt_galois_even ||
        rs.galois_order_even != d.conic_inv_galois_even)
        throw std::logic_error("square-class parity disagrees with the discriminant");
    return d;
}

std::string gamma_tag_name(GammaTag t) {
    switch (t) {
        case GammaTag::ContainsGeiserOnly: return "contains-geiser";
        case GammaTag::ContainsSGeiserClass: return "contains-s-geiser-class";
        case GammaTag::RcsGamma: return "<r,cs*geiser>";
        case GammaTag::RcGamma: return "<r,c*geiser>";
        case GammaTag::RcGammaS: return "<r,c*geiser,s>";
        case GammaTag::Other: return "other";
    }
    return {};
}

namespace {

Isometry named_a2b() {
    auto a = weyl::gen_a();
    return weyl::compose(weyl::compose(a, a), weyl::gen_b());
}

// elements cs^e s^rho gamma^t with the stated flip pattern
Isometry pattern_element(bool e, bool rho, bool t) {
    Isometry out = weyl::identity();
    if (e) out = weyl::compose(out, weyl::compose(weyl::gen_c(), weyl::gen_s()));
    if (rho) out = weyl::compose(out, weyl::gen_s());
    if (t) out = weyl::compose(out, weyl::geiser());
    return out;
}

const SubgroupClosure& centralizer216() {
    static const SubgroupClosure c = [] {
        auto cs = weyl::compose(weyl::gen_c(), weyl::gen_s());
        return SubgroupClosure::generate({weyl::gen_a(), weyl::gen_b(), cs, weyl::gen_r(),
                                          weyl::gen_s(), weyl::geiser()});
    }();
    return c;
}

bool subgroups_conjugate(const SubgroupClosure& x, const SubgroupClosure& y,
                         const SubgroupClosure& ambient) {
    if (x.order() != y.order()) return false;
    std::set<std::uint64_t> target;
    for (const auto& e : y.elements()) target.insert(weyl::perm_key(e));
    for (const auto& w : ambient.elements()) {
        auto winv = weyl::inverse(w);
        bool all = true;
        for (const auto& e : x.elements()) {
            auto conj = weyl::compose(weyl::compose(w, e), winv);
            if (!target.count(weyl::perm_key(conj))) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

struct GammaData {
    SubgroupClosure image;
    bool b_zero = false;
};

GammaData build_galois_image(const CubicParams& p) {
    validate(p);
    GammaData out{SubgroupClosure::generate({}), p.B.is_zero()};
    if (!p.B.is_zero()) return out;

    auto aux = aux_polynomials(p);
    auto eck = nf::cubic_analysis(aux.eckardt, p.field);
    auto rs = nf::cubic_analysis(aux.conic_inv, p.field);

    Rational t = Rational(16) * p.A * p.A * p.A * p.C - Rational(27);
    Rational class_e = p.A * p.C * t;  // eckardt discriminant class over fields with omega
    Rational class_r = t;
    Rational class_a = p.A;
    bool even_e = !nf::is_square_in(class_e, p.field);
    bool even_r = !nf::is_square_in(class_r, p.field);
    bool nontrivial_a = !nf::is_square_in(class_a, p.field);

    std::vector<Isometry> gens;
    if (!eck.has_root_in_k) gens.push_back(named_a2b());
    if (!rs.has_root_in_k) gens.push_back(weyl::gen_r());

    // quadratic characters: patterns (e, rho, t) on (sqrt of eckardt class,
    // sqrt of pencil class, sqrt of A) orthogonal to every square relation
    Rational one(1);
    std::array<Rational, 3> cls = {even_e ? class_e : one, even_r ? class_r : one,
                                   nontrivial_a ? class_a : one};
    std::vector<std::array<bool, 3>> relations;
    for (int mask = 1; mask < 8; ++mask) {
        Rational prod = one;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) prod = prod * cls[i];
        if (nf::is_square_in(prod, p.field))
            relations.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
    }
    for (int pat = 1; pat < 8; ++pat) {
        bool ok = true;
        for (const auto& rel : relations) {
            int dot = 0;
            for (int i = 0; i < 3; ++i)
                if (rel[i] && (pat & (1 << i))) ++dot;
            if (dot & 1) { ok = false; break; }
        }
        if (ok)
            gens.push_back(pattern_element((pat & 1) != 0, (pat & 2) != 0, (pat & 4) != 0));
    }
    out.image = SubgroupClosure::generate(gens);
    return out;
}

}  // namespace

weyl::SubgroupClosure galois_image(const CubicParams& p) { return build_galois_image(p).image; }

GammaTag gamma_identification(const CubicParams& p) {
    auto data = build_galois_image(p);
    if (!data.b_zero) return GammaTag::Other;
    const auto& gamma = data.image;
    const auto& amb = centralizer216();

    auto r = weyl::gen_r();
    auto cg = weyl::compose(weyl::gen_c(), weyl::geiser());
    auto csg = weyl::compose(weyl::compose(weyl::gen_c(), weyl::gen_s()), weyl::geiser());
    auto named_rcsg = SubgroupClosure::generate({r, csg});
    auto named_rcg = SubgroupClosure::generate({r, cg});
    auto named_rcgs = SubgroupClosure::generate({r, cg, weyl::gen_s()});

    if (subgroups_conjugate(gamma, named_rcsg, amb)) return GammaTag::RcsGamma;
    if (subgroups_conjugate(gamma, named_rcg, amb)) return GammaTag::RcGamma;
    if (subgroups_conjugate(gamma, named_rcgs, amb)) return GammaTag::RcGammaS;

    auto sg = weyl::compose(weyl::gen_s(), weyl::geiser());
    for (const auto& e : gamma.elements()) {
        if (e == weyl::identity_perm()) continue;
        if (weyl::compose(e, e) != weyl::identity_perm()) continue;
        if (weyl::conjugate_in(weyl::lift(e), sg, amb).has_value())
            return GammaTag::ContainsSGeiserClass;
    }
    if (gamma.contains(weyl::geiser().perm)) return GammaTag::ContainsGeiserOnly;
    return GammaTag::Other;
}

Verdict3 x_rationality_cubic(const CubicParams& p) {
    auto tag = gamma_identification(p);
    switch (tag) {
        case GammaTag::RcsGamma:
        case GammaTag::RcGamma:
        case GammaTag::RcGammaS: {
            // cross-check the contraction promise on the constructed image
            auto image = galois_image(p);
            if (weyl::minimal_model_search(image, 5).max_k2 < 5)
                throw std::logic_error("named Galois image fails the contraction promise");
            return Verdict3::Rational;
        }
        case GammaTag::ContainsSGeiserClass: return Verdict3::NonRational;
        case GammaTag::ContainsGeiserOnly: {
            auto image = galois_image(p);
            if (weyl::invariant_rank(image) != 1)
                throw std::logic_error("Geiser-containing image must have invariant rank 1");
            return Verdict3::NonRational;
        }
        case GammaTag::Other: return Verdict3::Undetermined;
    }
    return Verdict3::Undetermined;
}

int eckardt_points_count(const CubicParams& p) {
    validate(p);
    auto aux = aux_polynomials(p);
    if (p.A.is_zero()) {
        // degenerate: report the distinct-root count of the pencil cubic
        std::set<std::pair<std::int64_t, std::int64_t>> roots;
        for (const auto& r : nf::rational_roots(aux.eckardt)) roots.insert({r.num(), r.den()});
        return (int)roots.size();
    }
    if (aux.eckardt.degree() != 3)
        throw std::invalid_argument("pencil polynomial degenerates for these parameters");
    return 6;
}

CubicParams example_params(int k) {
    auto field = [](const char* d) { return *nf::SquareClassField::parse(d); };
    switch (k) {
        case 15: return {Rational(2), Rational(0), Rational(9, 32), field("w")};
        case 16: return {Rational(3), Rational(0), Rational(25, 144), field("w")};
        case 17: return {Rational(-1), Rational(0), Rational(-13, 4), field("w,-13")};
        case 18: return {Rational(2), Rational(0), Rational(1, 8), field("w,-22")};
        case 19: return {Rational(5, 4), Rational(0), Rational(4, 5), field("w,-10")};
    }
    throw std::invalid_argument("cubic examples are numbered 15..18 (19 = corrected 18)");
}

ExampleFixture evaluate(const CubicParams& p) {
    ExampleFixture f;
    f.gamma = gamma_identification(p);
    f.x = x_rationality_cubic(p);
    f.c3 = c3_quotient_rational(p) ? Verdict3::Rational : Verdict3::NonRational;
    f.s3 = s3_quotient_verdict(p);
    return f;
}

}  // namespace dp2::cubic
