#pragma once

#include "dp2/picard.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp2::weyl {

// An element of W(E7) acts faithfully on the 56 lines (the Geiser involution
// moves every line), so the line permutation is the canonical element key.
using LinePerm = std::array<std::uint8_t, 56>;

LinePerm identity_perm();
LinePerm compose(const LinePerm& f, const LinePerm& g);  // (f.g)(x) = f(g(x))
LinePerm inverse(const LinePerm& f);

// Images of the seven E-lines determine the whole matrix; 7 indices of 6 bits
// pack into one word.
std::uint64_t perm_key(const LinePerm& p);

// Sorted cycle lengths of the 56-point action.
std::vector<int> cycle_type(const LinePerm& p);

struct Isometry {
    pic::Mat8 matrix;
    LinePerm perm;

    bool operator==(const Isometry& o) const { return perm == o.perm; }
    bool operator!=(const Isometry& o) const { return perm != o.perm; }
};

Isometry identity();
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);

// Rebuild the matrix of a line permutation (images of E1..E7 plus K-fixing
// determine it).
Isometry lift(const LinePerm& p);

// Validates that m preserves the intersection form, fixes K and permutes the
// 56 line classes; throws std::invalid_argument otherwise.
Isometry from_matrix(const pic::Mat8& m);

// Builds the isometry with the given images of E1..E7 (as line indices),
// solving the image of L from K-fixing. Throws if that fails to be integral
// or the result is not an isometry.
Isometry from_e_images(const std::array<int, 7>& e_images);

// sigma is 1-based: E_i -> E_{sigma[i-1]}.
Isometry perm_generator(const std::array<int, 7>& sigma);
Isometry geiser();
// x -> x + (x.root) root; requires root^2 = -2, root.K = 0.
Isometry root_reflection(const pic::Coeffs& root);

// The standard commuting-frame elements: a = (123), b = (456),
// c = (14)(25)(36), and the order-3 / order-2 elements r, s pinned by their
// line images (r(E_i) = Q_i7 for i <= 3, r(E_i) = L_jk for {i,j,k} = {4,5,6};
// s(E_i) = Q_i7 for i <= 6; both fix E7).
Isometry gen_a();
Isometry gen_b();
Isometry gen_c();
Isometry gen_r();
Isometry gen_s();

struct CapExceeded {
    std::uint64_t cap;
};

class SubgroupClosure {
public:
    // Breadth-first closure of the generated subgroup; throws CapExceeded if
    // more than `cap` elements appear.
    static SubgroupClosure generate(const std::vector<Isometry>& gens,
                                    std::uint64_t cap = 3'000'000);

    // Wraps a set already closed under composition (checked only for small
    // sets); generators are reduced greedily.
    static SubgroupClosure from_elements(std::vector<LinePerm> elements);

    std::uint64_t order() const { return elements_.size(); }
    const std::vector<LinePerm>& elements() const { return elements_; }
    const std::vector<LinePerm>& generators() const { return generators_; }
    std::vector<Isometry> generator_isometries() const;

    bool contains(const LinePerm& p) const;
    bool is_subgroup_of(const SubgroupClosure& g) const;

private:
    std::vector<LinePerm> elements_;      // discovery order, identity first
    std::vector<std::uint64_t> sorted_keys_;
    std::vector<LinePerm> generators_;
};

// Rank over Q of the fixed sublattice of Pic (kernel of stacked (M_g - I)),
// computed exactly.
int invariant_rank(const std::vector<pic::Mat8>& generator_matrices);
int invariant_rank(const SubgroupClosure& group);

// Primitive integer basis of the fixed subspace.
std::vector<pic::Coeffs> fixed_space_basis(const std::vector<pic::Mat8>& generator_matrices);

// Elements of `ambient` commuting with every generator of `g`.
SubgroupClosure centralizer(const SubgroupClosure& g, const SubgroupClosure& ambient);

// Elements of `ambient` commuting with every generator of `ambient` itself.
std::vector<LinePerm> center(const SubgroupClosure& ambient);

// A witness w with w g w^-1 = h, or nullopt. Scans `ambient` with a
// cycle-type / trace precheck.
std::optional<Isometry> conjugate_in(const Isometry& g, const Isometry& h,
                                     const SubgroupClosure& ambient);

// Partition of the given line indices under the group action.
std::vector<std::vector<int>> orbits(const SubgroupClosure& group, const std::vector<int>& points);

// Fixed points of one element among the given line indices.
std::vector<int> fixed_lines(const LinePerm& p);

struct ContractionStep {
    std::vector<int> orbit;  // line indices contracted at this step
};

struct MinimalModelResult {
    int max_k2 = 2;
    std::vector<ContractionStep> chain;  // a witness chain reaching max_k2
};

// Depth-first search over Galois-invariant pairwise-disjoint line sets:
// contracts whole orbits and recurses on the residual model. Stops early once
// `target` is reached.
MinimalModelResult minimal_model_search(const SubgroupClosure& gal, int target = 9);

}  // namespace dp2::weyl
