#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dp2/picard.hpp"

#include <algorithm>
#include <set>

using namespace dp2;
using pic::Coeffs;

namespace {

Coeffs cls(const std::string& label) {
    auto l = pic::parse_line_label(label);
    REQUIRE(l.has_value());
    return pic::lines()[*pic::line_index_of_label(*l)].cls;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<Coeffs>& v) {
    std::set<std::vector<std::int64_t>> s;
    for (const auto& c : v) s.insert({c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]});
    return s;
}

}  // namespace

TEST_CASE("intersection form basics") {
    CHECK(pic::intersect(cls("E1"), cls("C1")) == 2);
    CHECK(pic::intersect(pic::canonical_class(), pic::canonical_class()) == 2);
    CHECK(pic::intersect(cls("L12"), cls("Q13")) == 1);
    CHECK(pic::intersect(cls("E1"), cls("E2")) == 0);
}

TEST_CASE("full product table from the closed forms") {
    // every case of the pairwise product table, with i, j, k, l distinct
    CHECK(pic::intersect(cls("E1"), cls("L12")) == 1);
    CHECK(pic::intersect(cls("E1"), cls("L23")) == 0);
    CHECK(pic::intersect(cls("E1"), cls("Q12")) == 0);
    CHECK(pic::intersect(cls("E1"), cls("Q23")) == 1);
    CHECK(pic::intersect(cls("E1"), cls("C2")) == 1);
    CHECK(pic::intersect(cls("L12"), cls("L13")) == 0);
    CHECK(pic::intersect(cls("L12"), cls("L34")) == 1);
    CHECK(pic::intersect(cls("L12"), cls("Q12")) == 2);
    CHECK(pic::intersect(cls("L12"), cls("Q34")) == 0);
    CHECK(pic::intersect(cls("L12"), cls("C1")) == 0);
    CHECK(pic::intersect(cls("L12"), cls("C3")) == 1);
    CHECK(pic::intersect(cls("Q12"), cls("Q13")) == 0);
    CHECK(pic::intersect(cls("Q12"), cls("Q34")) == 1);
    CHECK(pic::intersect(cls("Q12"), cls("C1")) == 1);
    CHECK(pic::intersect(cls("Q12"), cls("C3")) == 0);
    CHECK(pic::intersect(cls("C1"), cls("C2")) == 0);
}

TEST_CASE("enumerate lines") {
    const auto& all = pic::lines();
    CHECK(all.size() == 56);
    int e = 0, l = 0, q = 0, c = 0;
    for (const auto& line : all) {
        CHECK(pic::intersect(line.cls, line.cls) == -1);
        CHECK(pic::intersect(line.cls, pic::canonical_class()) == -1);
        switch (line.label.kind) {
            case pic::LineKind::E: ++e; break;
            case pic::LineKind::L: ++l; break;
            case pic::LineKind::Q: ++q; break;
            case pic::LineKind::C: ++c; break;
        }
    }
    CHECK(e == 7);
    CHECK(l == 21);
    CHECK(q == 21);
    CHECK(c == 7);
}

TEST_CASE("bounded brute-force search finds exactly the 56 lines") {
    auto found = pic::search_lines_bounded();
    CHECK(found.size() == 56);
    std::vector<Coeffs> catalog;
    for (const auto& line : pic::lines()) catalog.push_back(line.cls);
    CHECK(as_set(found) == as_set(catalog));
}

TEST_CASE("line pair products and Geiser pairing") {
    const auto& prod = pic::line_products();
    for (int i = 0; i < 56; ++i) {
        int partner = pic::geiser_partner(i);
        CHECK(partner != i);
        CHECK(pic::geiser_partner(partner) == i);
        for (int j = 0; j < 56; ++j) {
            if (i == j) continue;
            CHECK(prod[i][j] >= -1);
            CHECK(prod[i][j] <= 2);
            CHECK((prod[i][j] == 2) == (j == partner));
        }
    }
    // the Geiser pairing is the unique fixed-point-free involution with D.i(D) = 2
    // (equivalent form: each line has exactly one product-2 partner, checked above)
}

TEST_CASE("sum of all 56 line classes is -28K") {
    Coeffs sum = Coeffs::Zero();
    for (const auto& line : pic::lines()) sum += line.cls;
    Coeffs expect = -28 * pic::canonical_class();
    CHECK(sum == expect);
}

TEST_CASE("contraction ledger") {
    pic::ContractedModel fresh;
    CHECK(fresh.k_squared() == 2);
    CHECK(fresh.residual_lines().size() == 56);

    auto dp3 = fresh.contract({cls("E7")});
    CHECK(dp3.k_squared() == 3);
    CHECK(dp3.residual_lines().size() == 27);

    std::vector<Coeffs> seven;
    for (int i = 1; i <= 7; ++i) seven.push_back(pic::e_class(i));
    auto plane = fresh.contract(seven);
    CHECK(plane.k_squared() == 9);
    CHECK(plane.residual_lines().empty());

    CHECK_THROWS_AS(fresh.contract({cls("E1"), cls("L12")}), pic::ContractionError);
    CHECK_THROWS_AS(fresh.contract({pic::canonical_class()}), pic::ContractionError);
}

TEST_CASE("residual line counts down a full chain") {
    // degrees 2..9 give line counts 56, 27, 16, 10, 6, 3, 1, 0
    const int expected[] = {56, 27, 16, 10, 6, 3, 1, 0};
    pic::ContractedModel m;
    for (int k = 0; k <= 7; ++k) {
        CHECK(m.k_squared() == 2 + k);
        CHECK((int)m.residual_lines().size() == expected[k]);
        if (k < 7) m = m.contract({pic::e_class(7 - k)});
    }
}

TEST_CASE("serialization round trip") {
    CHECK(pic::class_to_string(cls("Q12")) == "2L-E3-E4-E5-E6-E7");
    CHECK(pic::class_to_string(cls("E3")) == "E3");
    CHECK(pic::class_to_string(pic::canonical_class()) == "-3L+E1+E2+E3+E4+E5+E6+E7");
    for (const auto& line : pic::lines()) {
        auto back = pic::parse_class(pic::class_to_string(line.cls));
        REQUIRE(back.has_value());
        CHECK(*back == line.cls);
        auto label = pic::parse_line_label(line.label.str());
        REQUIRE(label.has_value());
        CHECK(*pic::line_index_of_label(*label) == *pic::line_index(line.cls));
    }
}
