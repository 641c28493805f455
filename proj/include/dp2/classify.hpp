#pragma once

#include "dp2/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dp2::cls {

enum class AbstractType { Trivial, C2, C3, C4, C2xC2, S3, D8, Q8, Other };

// Geometric classes of the elements generating the group: the fixed-point
// types 0..5 of prime-order elements, or the two order-4 action shapes
// diag(i, -i, 1, 1) and diag(i, -i, 1, -1).
enum class ElementClass {
    Type0,          // the anticanonical deck involution
    Type1,          // involution with a pointwise fixed -K curve
    Type2,          // involution with four isolated fixed points
    Type3,          // order 3 with a fixed curve
    Type4,          // order 3 with only isolated fixed points
    Type5,          // order 7
    Order4PlusT,    // conjugate to (ix : -iy : z : t)
    Order4MinusT,   // conjugate to (ix : -iy : z : -t)
    Other
};

std::optional<AbstractType> parse_abstract_type(const std::string&);
std::optional<ElementClass> parse_element_class(const std::string&);
std::string abstract_type_name(AbstractType);

struct GroupDescriptor {
    AbstractType type = AbstractType::Trivial;
    std::vector<ElementClass> generator_classes;
    bool contains_geiser = false;
    std::string other_name;
};

enum class VerdictKind { AlwaysRational, PotentiallyNonRational, NonRationalCertified };

struct Verdict {
    VerdictKind kind = VerdictKind::AlwaysRational;
    int case_index = 0;  // 1..11 when PotentiallyNonRational
    std::vector<std::string> citations;
};

// The quotient decision procedure over group descriptors: the eleven
// potentially non-rational shapes, everything else rational with the
// discharging rule cited.
Verdict quotient_taxonomy(const GroupDescriptor& g);

struct Type2Certificate {
    bool issued = false;
    int plus_dim = 0;   // dim of the g-fixed part of K-perp
    int minus_dim = 0;  // dim of the (g.geiser)-fixed part of K-perp
    std::string reason;
};

// Certifies non-rationality of the surface from an involution g whose
// combined invariant rank with the Galois image is 1: the Galois-fixed part
// of K-perp must land in the (g.geiser)-fixed eigenspace.
Type2Certificate type2_nonrationality_certificate(const weyl::Isometry& g,
                                                  const weyl::SubgroupClosure& gal);

// Galois orbit pattern of the four branch-quartic roots.
enum class RootPattern { Transitive4, TwoOrbits2, OneRational, TwoRational, AllRational };

std::string minimal_model_from_root_pattern(RootPattern p);

// Whether the candidate Galois image admits both a combined invariant rank 1
// with the order-3 group <ab> and a contraction to K^2 >= 5.
bool gamma_classification_for_type4(const weyl::SubgroupClosure& candidate);

struct GammaClassification {
    std::uint64_t subgroups_scanned = 0;
    std::vector<std::vector<weyl::LinePerm>> satisfying;  // element lists
    std::vector<int> class_of;                            // conjugacy class ids
    int class_count = 0;
};

// Exhaustive scan over all subgroups of the order-216 centralizer, grouping
// the subgroups that satisfy gamma_classification_for_type4 into conjugacy
// classes under the centralizer action.
GammaClassification classify_gamma_subgroups(const weyl::SubgroupClosure& centralizer);

// The centralizer of <ab> built directly from its stated generators
// a, b, cs, r, s, geiser.
weyl::SubgroupClosure standard_centralizer();

}  // namespace dp2::cls
