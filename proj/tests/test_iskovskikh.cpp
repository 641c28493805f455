#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dp2/iskovskikh.hpp"

#include <vector>

using namespace dp2;
using isk::BaseGroup;
using isk::ElementFix;
using isk::IskAction;
using isk::ModelKind;

namespace {

// every descriptor with |G| <= max_order
std::vector<IskAction> enumerate_actions(int max_order) {
    std::vector<IskAction> out;
    for (int d = 1; d <= max_order; ++d)
        for (int gb = 0; gb <= 1; ++gb)
            for (BaseGroup f : {BaseGroup::Trivial, BaseGroup::C2, BaseGroup::C2xC2, BaseGroup::Other})
                for (int other = 3; other <= (f == BaseGroup::Other ? max_order : 3); ++other) {
                    IskAction a;
                    a.g0_order = d;
                    a.gb_nontrivial = gb;
                    a.base = f;
                    a.base_order_other = other;
                    if (a.group_order() > max_order) continue;
                    int nontrivial = f == BaseGroup::C2 ? 1 : f == BaseGroup::C2xC2 ? 3 : 0;
                    if (nontrivial == 0) {
                        out.push_back(a);
                        continue;
                    }
                    for (int mask = 0; mask < (1 << (2 * nontrivial)); ++mask) {
                        IskAction b = a;
                        for (int e = 0; e < nontrivial; ++e)
                            b.fiber_fix.push_back(
                                {(mask >> (2 * e)) & 1 ? true : false,
                                 (mask >> (2 * e + 1)) & 1 ? true : false});
                        out.push_back(b);
                    }
                }
    return out;
}

bool has_fixed_curve_element(const IskAction& a) {
    if (a.g0_order > 1) return true;  // the cyclic part fixes the two sections pointwise
    if (a.gb_nontrivial) return true; // swaps sections without isolated fixed points
    for (const auto& e : a.fiber_fix)
        if (!e.isolated_only) return true;
    return false;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

TEST_CASE("stage verdicts") {
    CHECK(isk::quotient_by_g0(2).kind == ModelKind::K2_8);
    CHECK(isk::quotient_by_g0(3).kind == ModelKind::IskovskikhAgain);
    CHECK(isk::quotient_by_g0(1).kind == ModelKind::IskovskikhAgain);
    CHECK_THROWS(isk::quotient_by_g0(0));

    CHECK(isk::quotient_by_gb(true).kind == ModelKind::K2_8);
    CHECK(isk::quotient_by_gb(false).kind == ModelKind::IskovskikhAgain);

    CHECK(isk::base_quotient(BaseGroup::C2, {{true, true}}).kind ==
          ModelKind::MinimalConicBundleK4);
    CHECK(isk::base_quotient(BaseGroup::C2, {{false, true}}).kind == ModelKind::K2AtLeast5);
    CHECK(isk::base_quotient(BaseGroup::C2, {{true, false}}).kind == ModelKind::K2AtLeast5);
    CHECK(isk::base_quotient(BaseGroup::Other, {}).kind == ModelKind::K2AtLeast5);
    CHECK(isk::base_quotient(BaseGroup::Trivial, {}).kind == ModelKind::IskovskikhAgain);
}

TEST_CASE("pipeline composition") {
    IskAction trivial;
    auto v = isk::full_pipeline(trivial);
    CHECK(v.kind == ModelKind::IskovskikhAgain);
    CHECK(v.k2_bound == 4);

    IskAction even_g0;
    even_g0.g0_order = 2;
    CHECK(isk::full_pipeline(even_g0).kind == ModelKind::K2_8);

    IskAction even_then_base = even_g0;
    even_then_base.base = BaseGroup::C2;
    even_then_base.fiber_fix = {{true, true}};
    CHECK(isk::full_pipeline(even_then_base).kind == ModelKind::K2AtLeast5);

    IskAction odd_then_gb;
    odd_then_gb.g0_order = 3;
    odd_then_gb.gb_nontrivial = true;
    CHECK(isk::full_pipeline(odd_then_gb).kind == ModelKind::K2_8);

    IskAction minimal_cb;
    minimal_cb.base = BaseGroup::C2;
    minimal_cb.fiber_fix = {{true, true}};
    CHECK(isk::full_pipeline(minimal_cb).kind == ModelKind::MinimalConicBundleK4);

    IskAction s3;
    s3.base = BaseGroup::Other;
    s3.base_order_other = 6;
    CHECK(isk::full_pipeline(s3).kind == ModelKind::K2AtLeast5);
}

TEST_CASE("no verdict below 4, over the full enumeration") {
    for (const auto& a : enumerate_actions(8)) {
        auto v = isk::full_pipeline(a);
        CHECK(v.k2_bound >= 4);
        switch (v.kind) {
            case ModelKind::K2_8: CHECK(v.k2_bound == 8); break;
            case ModelKind::IskovskikhAgain: CHECK(v.k2_bound == 4); break;
            case ModelKind::MinimalConicBundleK4: CHECK(v.k2_bound == 4); break;
            case ModelKind::K2AtLeast5: CHECK(v.k2_bound >= 5); break;
        }
    }
}

TEST_CASE("two-groups with a fixed-curve element always reach 5") {
    int checked = 0;
    for (const auto& a : enumerate_actions(8)) {
        if (!is_power_of_two(a.group_order())) continue;
        if (!has_fixed_curve_element(a)) continue;
        auto v = isk::full_pipeline(a);
        CHECK(v.k2_bound >= 5);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("inserting trivial stages never changes the verdict") {
    for (const auto& a : enumerate_actions(6)) {
        auto v = isk::full_pipeline(a);
        IskAction padded = a;  // g0 = 1 and gb absent are the trivial stages
        if (a.g0_order == 1 && !a.gb_nontrivial) {
            auto direct = isk::base_quotient(a.base, a.fiber_fix);
            CHECK(direct.kind == v.kind);
        }
        (void)padded;
    }
}
