#include "dp2/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dp2::cls {

using weyl::Isometry;
using weyl::LinePerm;
using weyl::SubgroupClosure;

std::optional<AbstractType> parse_abstract_type(const std::string& s) {
    std::string n;
    for (char c : s) n += (char)tolower((unsigned char)c);
    if (n == "trivial" || n == "1" || n == "id") return AbstractType::Trivial;
    if (n == "c2") return AbstractType::C2;
    if (n == "c3") return AbstractType::C3;
    if (n == "c4") return AbstractType::C4;
    if (n == "c2xc2" || n == "c2^2" || n == "v4") return AbstractType::C2xC2;
    if (n == "s3") return AbstractType::S3;
    if (n == "d8") return AbstractType::D8;
    if (n == "q8") return AbstractType::Q8;
    if (!n.empty()) return AbstractType::Other;
    return std::nullopt;
}

std::string abstract_type_name(AbstractType t) {
    switch (t) {
        case AbstractType::Trivial: return "trivial";
        case AbstractType::C2: return "C2";
        case AbstractType::C3: return "C3";
        case AbstractType::C4: return "C4";
        case AbstractType::C2xC2: return "C2xC2";
        case AbstractType::S3: return "S3";
        case AbstractType::D8: return "D8";
        case AbstractType::Q8: return "Q8";
        case AbstractType::Other: return "other";
    }
    return {};
}

std::optional<ElementClass> parse_element_class(const std::string& s) {
    std::string n;
    for (char c : s) n += (char)tolower((unsigned char)c);
    if (n == "0") return ElementClass::Type0;
    if (n == "1") return ElementClass::Type1;
    if (n == "2") return ElementClass::Type2;
    if (n == "3") return ElementClass::Type3;
    if (n == "4") return ElementClass::Type4;
    if (n == "5") return ElementClass::Type5;
    if (n == "4+" || n == "plus" || n == "order4+") return ElementClass::Order4PlusT;
    if (n == "4-" || n == "minus" || n == "order4-") return ElementClass::Order4MinusT;
    return std::nullopt;
}

namespace {

int element_order(ElementClass c) {
    switch (c) {
        case ElementClass::Type0:
        case ElementClass::Type1:
        case ElementClass::Type2: return 2;
        case ElementClass::Type3:
        case ElementClass::Type4: return 3;
        case ElementClass::Type5: return 7;
        case ElementClass::Order4PlusT:
        case ElementClass::Order4MinusT: return 4;
        case ElementClass::Other: return 0;
    }
    return 0;
}

bool all_of_class(const std::vector<ElementClass>& v, ElementClass c) {
    if (v.empty()) return false;
    return std::all_of(v.begin(), v.end(), [&](ElementClass x) { return x == c; });
}

bool contains_class(const std::vector<ElementClass>& v, ElementClass c) {
    return std::find(v.begin(), v.end(), c) != v.end();
}

void check_orders(const GroupDescriptor& g) {
    std::set<int> allowed;
    switch (g.type) {
        case AbstractType::Trivial: allowed = {}; break;
        case AbstractType::C2: allowed = {2}; break;
        case AbstractType::C3: allowed = {3}; break;
        case AbstractType::C4: allowed = {4}; break;
        case AbstractType::C2xC2: allowed = {2}; break;
        case AbstractType::S3: allowed = {2, 3}; break;
        case AbstractType::D8: allowed = {2, 4}; break;
        case AbstractType::Q8: allowed = {2, 4}; break;
        case AbstractType::Other: return;
    }
    for (auto c : g.generator_classes) {
        int o = element_order(c);
        if (o == 0 || !allowed.count(o))
            throw std::invalid_argument("element class inconsistent with the group type");
    }
}

}  // namespace

Verdict quotient_taxonomy(const GroupDescriptor& g) {
    check_orders(g);
    const auto& cls = g.generator_classes;

    if (g.contains_geiser || contains_class(cls, ElementClass::Type0))
        return {VerdictKind::AlwaysRational, 0, {"deck-involution-plane-quotient"}};

    switch (g.type) {
        case AbstractType::Trivial:
            return {VerdictKind::PotentiallyNonRational, 1, {"minimal-degree2-criterion"}};
        case AbstractType::C2:
            if (all_of_class(cls, ElementClass::Type1))
                return {VerdictKind::PotentiallyNonRational, 2, {"iskovskikh-model"}};
            if (all_of_class(cls, ElementClass::Type2))
                return {VerdictKind::PotentiallyNonRational, 3, {"degree2-image-model"}};
            break;
        case AbstractType::C3:
            if (all_of_class(cls, ElementClass::Type4))
                return {VerdictKind::PotentiallyNonRational, 4, {"degree4-image-model"}};
            if (all_of_class(cls, ElementClass::Type3))
                return {VerdictKind::AlwaysRational, 0, {"order3-fixed-curve-quotient"}};
            break;
        case AbstractType::C4:
            if (all_of_class(cls, ElementClass::Order4PlusT))
                return {VerdictKind::PotentiallyNonRational, 5, {"iskovskikh-model"}};
            if (contains_class(cls, ElementClass::Order4MinusT))
                return {VerdictKind::PotentiallyNonRational, 6, {"iskovskikh-model"}};
            break;
        case AbstractType::C2xC2:
            if (all_of_class(cls, ElementClass::Type2))
                return {VerdictKind::PotentiallyNonRational, 7, {"iskovskikh-model"}};
            if (contains_class(cls, ElementClass::Type1) &&
                !contains_class(cls, ElementClass::Type2))
                return {VerdictKind::AlwaysRational, 0, {"smooth-v4-quotient"}};
            break;
        case AbstractType::S3:
            if (contains_class(cls, ElementClass::Type2) &&
                !contains_class(cls, ElementClass::Type1) &&
                !contains_class(cls, ElementClass::Type3))
                return {VerdictKind::PotentiallyNonRational, 8, {"degree4-image-model"}};
            if (contains_class(cls, ElementClass::Type1))
                return {VerdictKind::AlwaysRational, 0, {"s3-type1-reduction"}};
            if (contains_class(cls, ElementClass::Type3))
                return {VerdictKind::AlwaysRational, 0, {"order3-fixed-curve-quotient"}};
            break;
        case AbstractType::D8:
            if (all_of_class(cls, ElementClass::Type2))
                return {VerdictKind::PotentiallyNonRational, 9, {"iskovskikh-model"}};
            break;
        case AbstractType::Q8:
            if (all_of_class(cls, ElementClass::Order4PlusT))
                return {VerdictKind::PotentiallyNonRational, 10, {"iskovskikh-model"}};
            if (contains_class(cls, ElementClass::Order4MinusT))
                return {VerdictKind::PotentiallyNonRational, 11, {"iskovskikh-model"}};
            break;
        case AbstractType::Other:
            break;
    }

    // discharge rules for everything else
    std::vector<std::string> why;
    if (contains_class(cls, ElementClass::Type5))
        why.push_back("order7-resolution-chain");
    else if (contains_class(cls, ElementClass::Type3))
        why.push_back("order3-fixed-curve-quotient");
    else if (g.type == AbstractType::Other)
        why.push_back("large-group-reduction");
    else if (contains_class(cls, ElementClass::Type1))
        why.push_back("iskovskikh-fixed-curve-chain");
    else
        why.push_back("two-group-reduction");
    return {VerdictKind::AlwaysRational, 0, why};
}

Type2Certificate type2_nonrationality_certificate(const Isometry& g,
                                                  const SubgroupClosure& gal) {
    Type2Certificate cert;
    if (weyl::compose(g, g) != weyl::identity() || g == weyl::identity()) {
        cert.reason = "element is not an involution";
        return cert;
    }
    auto gg = weyl::compose(g, weyl::geiser());
    // eigenspace dimensions on K-perp: the fixed space of g contains K, so
    // dim V^g on K-perp is invariant_rank - 1
    cert.plus_dim = weyl::invariant_rank(std::vector<pic::Mat8>{g.matrix}) - 1;
    cert.minus_dim = weyl::invariant_rank(std::vector<pic::Mat8>{gg.matrix}) - 1;
    if (cert.plus_dim + cert.minus_dim != 7) {
        cert.reason = "eigenspace dimensions do not fill K-perp";
        return cert;
    }
    std::vector<pic::Mat8> combined{g.matrix};
    for (const auto& p : gal.generators()) combined.push_back(weyl::lift(p).matrix);
    if (weyl::invariant_rank(combined) != 1) {
        cert.reason = "combined invariant rank is not 1";
        return cert;
    }
    // the Galois-fixed space must lie in the fixed space of g.geiser
    auto gal_mats = std::vector<pic::Mat8>{};
    for (const auto& p : gal.generators()) gal_mats.push_back(weyl::lift(p).matrix);
    for (const auto& v : weyl::fixed_space_basis(gal_mats)) {
        if (gg.matrix * v != v && pic::intersect(v, pic::canonical_class()) == 0) {
            cert.reason = "a Galois-fixed class escapes the expected eigenspace";
            return cert;
        }
    }
    cert.issued = true;
    cert.reason = "certified";
    return cert;
}

std::string minimal_model_from_root_pattern(RootPattern p) {
    switch (p) {
        case RootPattern::Transitive4: return "degree-2 image with invariant rank 1";
        case RootPattern::TwoOrbits2: return "minimal conic bundle";
        case RootPattern::OneRational: return "minimal cubic surface";
        case RootPattern::TwoRational: return "minimal degree-4 del Pezzo, invariant rank 1";
        case RootPattern::AllRational:
            return "minimal degree-4 del Pezzo with a minimal conic bundle structure";
    }
    return {};
}

bool gamma_classification_for_type4(const SubgroupClosure& candidate) {
    auto ab = weyl::compose(weyl::gen_a(), weyl::gen_b());
    for (const auto& p : candidate.generators())
        if (weyl::compose(p, ab.perm) != weyl::compose(ab.perm, p))
            throw std::invalid_argument("candidate does not commute with the order-3 group");
    std::vector<pic::Mat8> mats{ab.matrix};
    for (const auto& p : candidate.generators()) mats.push_back(weyl::lift(p).matrix);
    if (weyl::invariant_rank(mats) != 1) return false;
    return weyl::minimal_model_search(candidate, 5).max_k2 >= 5;
}

weyl::SubgroupClosure standard_centralizer() {
    auto cs = weyl::compose(weyl::gen_c(), weyl::gen_s());
    return SubgroupClosure::generate(
        {weyl::gen_a(), weyl::gen_b(), cs, weyl::gen_r(), weyl::gen_s(), weyl::geiser()});
}

namespace {

using Bits = std::array<std::uint64_t, 4>;

struct BitsHash {
    size_t operator()(const Bits& b) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : b) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return (size_t)h;
    }
};

bool bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set_bit(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }

struct SmallGroup {
    int n = 0;
    int id_index = -1;
    std::vector<LinePerm> elems;
    std::vector<std::vector<std::uint16_t>> mul;
    std::vector<std::uint16_t> inv;

    explicit SmallGroup(const SubgroupClosure& g) {
        n = (int)g.order();
        if (n > 256) throw std::invalid_argument("small-group machinery capped at order 256");
        elems = g.elements();
        std::unordered_map<std::uint64_t, int> index;
        for (int i = 0; i < n; ++i) index[weyl::perm_key(elems[i])] = i;
        mul.assign(n, std::vector<std::uint16_t>(n));
        inv.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto it = index.find(weyl::perm_key(weyl::compose(elems[i], elems[j])));
                if (it == index.end())
                    throw std::invalid_argument("element set is not closed under composition");
                mul[i][j] = (std::uint16_t)it->second;
            }
            inv[i] = (std::uint16_t)index.at(weyl::perm_key(weyl::inverse(elems[i])));
        }
        id_index = index.at(weyl::perm_key(weyl::identity_perm()));
    }

    Bits close(const std::vector<std::uint16_t>& gens) const {
        Bits b{};
        std::vector<std::uint16_t> frontier{(std::uint16_t)id_index};
        set_bit(b, id_index);
        size_t head = 0;
        while (head < frontier.size()) {
            std::uint16_t e = frontier[head++];
            for (auto g : gens) {
                std::uint16_t x = mul[e][g];
                if (!bit(b, x)) {
                    set_bit(b, x);
                    frontier.push_back(x);
                }
            }
        }
        return b;
    }

    Bits conjugate(const Bits& h, int w) const {
        Bits out{};
        for (int x = 0; x < n; ++x)
            if (bit(h, x)) set_bit(out, mul[mul[w][x]][inv[w]]);
        return out;
    }
};

}  // namespace

GammaClassification classify_gamma_subgroups(const SubgroupClosure& centralizer) {
    SmallGroup g(centralizer);
    // enumerate all subgroups by cyclic extension
    std::unordered_map<Bits, std::vector<std::uint16_t>, BitsHash> known;
    Bits trivial{};
    set_bit(trivial, g.id_index);
    known.emplace(trivial, std::vector<std::uint16_t>{});
    std::vector<Bits> queue{trivial};
    for (size_t head = 0; head < queue.size(); ++head) {
        Bits h = queue[head];
        auto gens = known.at(h);
        for (int x = 0; x < g.n; ++x) {
            if (bit(h, x)) continue;
            auto more = gens;
            more.push_back((std::uint16_t)x);
            Bits bigger = g.close(more);
            if (known.emplace(bigger, more).second) queue.push_back(bigger);
        }
    }

    GammaClassification out;
    out.subgroups_scanned = known.size();
    std::vector<Bits> satisfying_bits;
    for (const auto& [bits, gens] : known) {
        std::vector<LinePerm> elems;
        for (int x = 0; x < g.n; ++x)
            if (bit(bits, x)) elems.push_back(g.elems[x]);
        auto sub = SubgroupClosure::from_elements(std::move(elems));
        if (gamma_classification_for_type4(sub)) {
            satisfying_bits.push_back(bits);
            out.satisfying.push_back(sub.elements());
        }
    }
    // conjugacy classes under the centralizer action
    out.class_of.assign(satisfying_bits.size(), -1);
    int classes = 0;
    for (size_t i = 0; i < satisfying_bits.size(); ++i) {
        if (out.class_of[i] >= 0) continue;
        int id = classes++;
        out.class_of[i] = id;
        for (int w = 0; w < g.n; ++w) {
            Bits conj = g.conjugate(satisfying_bits[i], w);
            for (size_t j = 0; j < satisfying_bits.size(); ++j)
                if (out.class_of[j] < 0 && satisfying_bits[j] == conj) out.class_of[j] = id;
        }
    }
    out.class_count = classes;
    return out;
}

}  // namespace dp2::cls
