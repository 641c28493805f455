#pragma once

#include "dp2/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dp2::quot {

// Numerical data of a cyclic quotient singularity 1/m(1,q): the K^2 defect of
// the minimal resolution, the self-intersection corrections picked up by the
// proper transforms of the two invariant curves through the point, and the
// self-intersections of the exceptional chain.
struct SingularityType {
    int m = 2;
    int q = 1;
    Rational delta_k2;
    Rational delta_c2;
    Rational delta_d2;
    std::vector<int> chain;

    std::string name() const;

    // A_{n-1} = 1/n(1, n-1): no K^2 defect, chain of (-2)-curves.
    static SingularityType du_val(int n);
    // 1/3(1,1): one (-3)-curve.
    static SingularityType third_11();
    // 1/7(1,3): chain -3, -2, -2.
    static SingularityType seventh_13();
};

// A curve of fixed points entering the Hurwitz formula: class is a positive
// multiple of -K, e is the order of the pointwise stabilizer.
struct RamificationCurve {
    int minus_k_multiple = 1;
    int inertia_order = 2;
};

// (K - R)^2 / |G| with R = sum (e_C - 1) C, all classes multiples of -K.
Rational hurwitz_k2(std::int64_t group_order, const Rational& kx2,
                    const std::vector<RamificationCurve>& ram);

enum class LocalRole { C, D };

// c2 plus the Table-row corrections of the passes through singular points.
Rational proper_transform_self_int(const Rational& c2,
                                   const std::vector<std::pair<SingularityType, LocalRole>>& passes);

struct LedgerStep {
    enum class Kind { Hurwitz, Resolve, Contract } kind;
    std::string detail;
    Rational k2_after;
    // replay data
    Rational hurwitz_value;        // Kind::Hurwitz: K^2 after the quotient
    Rational resolve_delta;        // Kind::Resolve: total K^2 change
    int contract_count = 0;        // Kind::Contract
};

struct QuotientLedger {
    std::string scenario;
    std::int64_t group_order = 1;
    Rational start_k2 = Rational(2);
    std::vector<LedgerStep> steps;
    Rational result;

    // Recomputes the result from the recorded steps.
    Rational replay() const;
};

enum class Scenario { Type0, Type1, Type2, Type3, Type4, V4, Type5, PSL2F7 };

std::optional<Scenario> parse_scenario(const std::string& name);
std::string scenario_name(Scenario s);
const std::vector<Scenario>& all_scenarios();

QuotientLedger run_scenario(Scenario s);

}  // namespace dp2::quot
