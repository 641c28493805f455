#pragma once

#include <string>
#include <vector>

namespace dp2::isk {

// Conic bundle with four singular fibres and two (-2)-sections. Quotient
// analysis runs on action descriptors: the cyclic part acting trivially on
// all (-1)-curves, the section-swapping part acting trivially on the base,
// and the faithful base action with its fixed-point data.

enum class BaseGroup { Trivial, C2, C2xC2, Other };

struct ElementFix {
    bool isolated_only = true;  // the element has no curve of fixed points
    bool pair_fused = true;     // its fixed-point pair in an invariant fibre
                                // lies in one combined orbit
};

struct IskAction {
    int g0_order = 1;
    bool gb_nontrivial = false;
    BaseGroup base = BaseGroup::Trivial;
    int base_order_other = 1;            // order when base == Other
    std::vector<ElementFix> fiber_fix;   // one entry per nontrivial base element

    int base_order() const;
    int group_order() const { return g0_order * (gb_nontrivial ? 2 : 1) * base_order(); }
};

enum class ModelKind { K2_8, IskovskikhAgain, MinimalConicBundleK4, K2AtLeast5 };

struct IskVerdict {
    ModelKind kind;
    int k2_bound;

    std::string str() const;
};

// |G0| even: smooth conic bundle with K^2 = 8. |G0| odd and > 1: an
// Iskovskikh surface again. Trivial: pass-through.
IskVerdict quotient_by_g0(int d);

// A nontrivial section-swapping subgroup gives a smooth quotient with K^2 = 8.
IskVerdict quotient_by_gb(bool present);

// Faithful base action, assuming the first two stages are already reduced
// away. C2 / C2xC2 with all elements isolated-fixed and all fibre pairs fused
// keep a minimal conic bundle with K^2 = 4; anything else reaches K^2 >= 5.
IskVerdict base_quotient(BaseGroup f, const std::vector<ElementFix>& fix);

// Composes the three stages; a stage reaching K^2 >= 5 is absorbing.
IskVerdict full_pipeline(const IskAction& action);

}  // namespace dp2::isk
