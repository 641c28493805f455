#include "dp2/iskovskikh.hpp"

#include <stdexcept>

namespace dp2::isk {

int IskAction::base_order() const {
    switch (base) {
        case BaseGroup::Trivial: return 1;
        case BaseGroup::C2: return 2;
        case BaseGroup::C2xC2: return 4;
        case BaseGroup::Other: return base_order_other;
    }
    return 1;
}

std::string IskVerdict::str() const {
    switch (kind) {
        case ModelKind::K2_8: return "K2=8";
        case ModelKind::IskovskikhAgain: return "iskovskikh";
        case ModelKind::MinimalConicBundleK4: return "minimal-conic-bundle-K2=4";
        case ModelKind::K2AtLeast5: return "K2>=5";
    }
    return {};
}

IskVerdict quotient_by_g0(int d) {
    if (d < 1) throw std::invalid_argument("cyclic order must be positive");
    if (d == 1) return {ModelKind::IskovskikhAgain, 4};
    if (d % 2 == 0) return {ModelKind::K2_8, 8};
    return {ModelKind::IskovskikhAgain, 4};
}

IskVerdict quotient_by_gb(bool present) {
    if (!present) return {ModelKind::IskovskikhAgain, 4};
    return {ModelKind::K2_8, 8};
}

IskVerdict base_quotient(BaseGroup f, const std::vector<ElementFix>& fix) {
    int nontrivial = 0;
    switch (f) {
        case BaseGroup::Trivial: return {ModelKind::IskovskikhAgain, 4};
        case BaseGroup::C2: nontrivial = 1; break;
        case BaseGroup::C2xC2: nontrivial = 3; break;
        case BaseGroup::Other: return {ModelKind::K2AtLeast5, 5};
    }
    if ((int)fix.size() != nontrivial)
        throw std::invalid_argument("fixed-point data must cover each nontrivial base element");
    for (const auto& e : fix)
        if (!e.isolated_only || !e.pair_fused) return {ModelKind::K2AtLeast5, 5};
    return {ModelKind::MinimalConicBundleK4, 4};
}

IskVerdict full_pipeline(const IskAction& action) {
    bool rest_nontrivial_after_g0 = action.gb_nontrivial || action.base != BaseGroup::Trivial;
    IskVerdict v = quotient_by_g0(action.g0_order);
    if (v.kind == ModelKind::K2_8)
        return rest_nontrivial_after_g0 ? IskVerdict{ModelKind::K2AtLeast5, 5} : v;

    bool rest_nontrivial_after_gb = action.base != BaseGroup::Trivial;
    v = quotient_by_gb(action.gb_nontrivial);
    if (v.kind == ModelKind::K2_8)
        return rest_nontrivial_after_gb ? IskVerdict{ModelKind::K2AtLeast5, 5} : v;

    return base_quotient(action.base, action.fiber_fix);
}

}  // namespace dp2::isk
