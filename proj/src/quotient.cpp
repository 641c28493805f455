#include "dp2/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp2::quot {

std::string SingularityType::name() const {
    if (q == m - 1 && m >= 2) return "A" + std::to_string(m - 1);
    return "1/" + std::to_string(m) + "(1," + std::to_string(q) + ")";
}

SingularityType SingularityType::du_val(int n) {
    if (n < 2) throw std::invalid_argument("A_{n-1} needs n >= 2");
    SingularityType s;
    s.m = n;
    s.q = n - 1;
    s.delta_k2 = Rational(0);
    s.delta_c2 = Rational(-(n - 1), n);
    s.delta_d2 = Rational(-(n - 1), n);
    s.chain.assign(n - 1, -2);
    return s;
}

SingularityType SingularityType::third_11() {
    SingularityType s;
    s.m = 3;
    s.q = 1;
    s.delta_k2 = Rational(-1, 3);
    s.delta_c2 = Rational(-1, 3);
    s.delta_d2 = Rational(-1, 3);
    s.chain = {-3};
    return s;
}

SingularityType SingularityType::seventh_13() {
    SingularityType s;
    s.m = 7;
    s.q = 3;
    s.delta_k2 = Rational(-3, 7);
    s.delta_c2 = Rational(-3, 7);
    s.delta_d2 = Rational(-5, 7);
    s.chain = {-3, -2, -2};
    return s;
}

Rational hurwitz_k2(std::int64_t group_order, const Rational& kx2,
                    const std::vector<RamificationCurve>& ram) {
    if (group_order < 1) throw std::invalid_argument("group order must be positive");
    std::int64_t m = 1;
    for (const auto& c : ram) {
        if (c.minus_k_multiple < 1)
            throw std::invalid_argument("ramification class must be a positive multiple of -K");
        if (c.inertia_order < 2 || group_order % c.inertia_order != 0)
            throw std::invalid_argument("inertia order must be >= 2 and divide the group order");
        m += (std::int64_t)(c.inertia_order - 1) * c.minus_k_multiple;
    }
    // K - R = m K, so (K - R)^2 = m^2 K^2
    return Rational(m * m) * kx2 / Rational(group_order);
}

Rational proper_transform_self_int(const Rational& c2,
                                   const std::vector<std::pair<SingularityType, LocalRole>>& passes) {
    Rational v = c2;
    for (const auto& [sing, role] : passes)
        v += (role == LocalRole::C) ? sing.delta_c2 : sing.delta_d2;
    return v;
}

Rational QuotientLedger::replay() const {
    Rational k2 = start_k2;
    for (const auto& s : steps) {
        switch (s.kind) {
            case LedgerStep::Kind::Hurwitz: k2 = s.hurwitz_value; break;
            case LedgerStep::Kind::Resolve: k2 += s.resolve_delta; break;
            case LedgerStep::Kind::Contract: k2 += Rational(s.contract_count); break;
        }
        if (k2 != s.k2_after) throw std::logic_error("ledger step value mismatch");
    }
    return k2;
}

std::optional<Scenario> parse_scenario(const std::string& name) {
    std::string n;
    for (char c : name) n += (char)tolower((unsigned char)c);
    if (n == "type0") return Scenario::Type0;
    if (n == "type1") return Scenario::Type1;
    if (n == "type2") return Scenario::Type2;
    if (n == "type3") return Scenario::Type3;
    if (n == "type4") return Scenario::Type4;
    if (n == "v4") return Scenario::V4;
    if (n == "type5") return Scenario::Type5;
    if (n == "psl2f7") return Scenario::PSL2F7;
    return std::nullopt;
}

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Type0: return "type0";
        case Scenario::Type1: return "type1";
        case Scenario::Type2: return "type2";
        case Scenario::Type3: return "type3";
        case Scenario::Type4: return "type4";
        case Scenario::V4: return "v4";
        case Scenario::Type5: return "type5";
        case Scenario::PSL2F7: return "psl2f7";
    }
    return {};
}

const std::vector<Scenario>& all_scenarios() {
    static const std::vector<Scenario> all = {Scenario::Type0, Scenario::Type1, Scenario::Type2,
                                              Scenario::Type3, Scenario::Type4, Scenario::V4,
                                              Scenario::Type5, Scenario::PSL2F7};
    return all;
}

namespace {

struct LedgerBuilder {
    QuotientLedger ledger;
    Rational k2 = Rational(2);

    LedgerBuilder(Scenario s, std::int64_t order) {
        ledger.scenario = scenario_name(s);
        ledger.group_order = order;
    }

    void hurwitz(const std::vector<RamificationCurve>& ram, const std::string& detail) {
        k2 = hurwitz_k2(ledger.group_order, ledger.start_k2, ram);
        ledger.steps.push_back(
            {LedgerStep::Kind::Hurwitz, detail, k2, k2, Rational(0), 0});
    }

    void resolve(const SingularityType& sing, int count) {
        Rational delta = sing.delta_k2 * Rational(count);
        k2 += delta;
        ledger.steps.push_back({LedgerStep::Kind::Resolve,
                                std::to_string(count) + " x " + sing.name(), k2, Rational(0),
                                delta, 0});
    }

    void contract(int count, const std::string& detail) {
        k2 += Rational(count);
        ledger.steps.push_back({LedgerStep::Kind::Contract, detail, k2, Rational(0), Rational(0),
                                count});
    }

    QuotientLedger finish() {
        ledger.result = k2;
        return ledger;
    }
};

}  // namespace

QuotientLedger run_scenario(Scenario s) {
    switch (s) {
        case Scenario::Type0: {
            // deck involution of the anticanonical double cover: ramified in a
            // curve of class -2K, quotient is the plane
            LedgerBuilder b(s, 2);
            b.hurwitz({{2, 2}}, "fixed curve of class -2K, e = 2");
            return b.finish();
        }
        case Scenario::Type1: {
            // involution with a fixed -K curve and two isolated fixed points
            LedgerBuilder b(s, 2);
            b.hurwitz({{1, 2}}, "fixed curve of class -K, e = 2");
            b.resolve(SingularityType::du_val(2), 2);
            return b.finish();
        }
        case Scenario::Type2: {
            // involution with four isolated fixed points on an invariant -K
            // curve C; the transform of f(C) becomes a (-1)-curve
            LedgerBuilder b(s, 2);
            b.hurwitz({}, "no fixed curve");
            b.resolve(SingularityType::du_val(2), 4);
            Rational image_c2 = Rational(2) / Rational(2);  // C^2 = 2 halves under the quotient
            std::vector<std::pair<SingularityType, LocalRole>> passes(
                4, {SingularityType::du_val(2), LocalRole::C});
            Rational transform = proper_transform_self_int(image_c2, passes);
            if (transform != Rational(-1))
                throw std::logic_error("transform of the invariant curve is not a (-1)-curve");
            b.contract(1, "transform of the invariant -K curve");
            return b.finish();
        }
        case Scenario::Type3: {
            LedgerBuilder b(s, 3);
            b.hurwitz({{1, 3}}, "fixed curve of class -K, e = 3");
            b.resolve(SingularityType::du_val(3), 1);
            return b.finish();
        }
        case Scenario::Type4: {
            LedgerBuilder b(s, 3);
            b.hurwitz({}, "four isolated fixed points only");
            b.resolve(SingularityType::du_val(3), 2);
            b.resolve(SingularityType::third_11(), 2);
            b.contract(4, "transforms of the two invariant curves and the two halves of z = 0");
            return b.finish();
        }
        case Scenario::V4: {
            LedgerBuilder b(s, 4);
            b.hurwitz({{1, 2}, {1, 2}, {1, 2}},
                      "three involutions, each fixing a -K curve");
            return b.finish();
        }
        case Scenario::Type5: {
            LedgerBuilder b(s, 7);
            b.hurwitz({}, "three isolated fixed points only");
            b.resolve(SingularityType::seventh_13(), 3);
            b.contract(9, "three (-1)-transforms, then the chain tails");
            return b.finish();
        }
        case Scenario::PSL2F7: {
            // 21 reflection involutions fix -K curves; K - R = 22K
            LedgerBuilder b(s, 168);
            b.hurwitz(std::vector<RamificationCurve>(21, {1, 2}),
                      "21 involution classes, each fixing a -K curve");
            b.resolve(SingularityType::third_11(), 1);
            b.resolve(SingularityType::seventh_13(), 1);
            return b.finish();
        }
    }
    throw std::invalid_argument("unknown scenario");
}

}  // namespace dp2::quot
