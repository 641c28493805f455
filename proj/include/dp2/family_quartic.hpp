#pragma once

#include "dp2/picard.hpp"
#include "dp2/weyl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dp2::quartic {

// The family A x^4 + 2B x^2 y^2 + A y^4 + C z^4 = t^2 with
// A = w^2 eta = u^2 sigma + v^2 tau, B = u^2 sigma - v^2 tau, C = q^2 sigma tau eta,
// over a field containing i. Automorphisms come from the coordinate maps
//   alpha: x -> ix, beta: y -> iy, delta: x <-> y, gamma: t -> -t,
// and the 56 lines split into四 labeled families:
// 8 theta-lines, 16 eta-lines, 16 sigma-lines, 16 tau-lines.

// --- coordinate automorphisms -------------------------------------------------

// gamma^t . diag(i^a, i^b) . swap^s as a projective map of (x : y : z : t).
struct Aut {
    int a = 0;  // mod 4
    int b = 0;  // mod 4
    bool swap = false;
    bool tneg = false;

    bool operator==(const Aut&) const = default;
};

Aut compose(const Aut& f, const Aut& g);  // f after g
Aut inverse(const Aut& e);
int order(const Aut& e);
bool is_identity(const Aut& e);
std::string aut_name(const Aut& e);

inline Aut aut_alpha() { return {1, 0, false, false}; }
inline Aut aut_beta() { return {0, 1, false, false}; }
inline Aut aut_delta() { return {0, 0, true, false}; }
inline Aut aut_gamma() { return {0, 0, false, true}; }
inline Aut aut_n() { return {2, 2, false, false}; }  // alpha^2 beta^2

// parses words like "a3b", "a2d", "dg", "a3bg", "b2dg" (a, b, d, g with powers)
std::optional<Aut> parse_aut(const std::string& word);

std::vector<Aut> generate(std::vector<Aut> gens);

// Lattice image of a coordinate automorphism.
weyl::Isometry lattice(const Aut& e);

// lattice images of the four generators (the dictionary)
const weyl::Isometry& lat_alpha();
const weyl::Isometry& lat_beta();
const weyl::Isometry& lat_delta();
const weyl::Isometry& lat_gamma();

// --- labeled line catalog -----------------------------------------------------

enum class Family { Theta, Eta, Sigma, Tau };

struct LabeledLine {
    Family family;
    int index;  // position within the family
    int line;   // canonical 56-line index
};

const std::array<LabeledLine, 56>& catalog();
const std::vector<int>& family_lines(Family f);
Family family_of_line(int line);
std::string family_name(Family f);

// --- presets ------------------------------------------------------------------

enum class QChoice { UVW, UVWSTE, UVWST };  // q = uvw, uvw*s*t*e, uvw*s*t

// square class of a parameter in the declared multiquadratic extension
enum class ClassSym { One, Mu, Nu, MuNu };

struct QuarticPreset {
    QChoice q = QChoice::UVW;
    ClassSym sigma = ClassSym::One;
    ClassSym tau = ClassSym::One;
    ClassSym eta = ClassSym::One;
    int galois_rank = 0;   // 0 trivial, 1 = C2 (mu), 2 = C2xC2 (mu, nu)
    bool conic_point = true;

    std::string str() const;
};

struct UnsupportedRegime {
    std::string message;
};

// the nine worked examples, 1-based in order of appearance
QuarticPreset example_preset(int k);

// --- Galois action model --------------------------------------------------------

// subgroup of {1, n, n.gamma, gamma} acting on one line family, where n is
// the lattice image of alpha^2 beta^2
enum class FamilyAction { Id, N, NGamma, Gamma, Full };

std::string family_action_name(FamilyAction a);

struct GaloisModel {
    FamilyAction eta = FamilyAction::Id;
    FamilyAction sigma = FamilyAction::Id;
    FamilyAction tau = FamilyAction::Id;
    std::vector<std::vector<int>> theta_orbits;   // partition of the 8 theta lines
    std::vector<weyl::LinePerm> generators;       // stitched 56-line actions
};

// Derives the Galois action on the line set from the square classes and the
// q-choice; every stitched generator is validated to preserve the
// intersection form. Throws UnsupportedRegime on inconsistent presets.
GaloisModel galois_model(const QuarticPreset& preset);

// --- minimality and verdicts -----------------------------------------------------

struct MinimalityReport {
    bool eta_minimal = false;
    bool sigma_minimal = false;
    bool tau_minimal = false;
    bool g_minimal = false;  // all three, i.e. invariant rank 1
    int combined_rank = 8;   // rank of the fixed lattice of <G, Galois>
};

// A set of lines is G-minimal when every combined G x Galois orbit inside it
// has class -nK; invariant rank 1 is equivalent to all three families being
// minimal. The report carries the lattice rank cross-check.
MinimalityReport g_minimality(const std::vector<Aut>& group, const QuarticPreset& preset);

enum class Verdict { Rational, NonRational };

std::string verdict_name(Verdict v);

// X / G for a group containing alpha^2 beta^2 (or the trivial / single
// type-2-involution branches): not rational exactly when the two isolated
// fixed points of alpha^2 beta^2 are fused into one combined orbit and every
// other element's fixed-point pairs on its invariant pencil members are fused
// as well.
Verdict quotient_verdict(const std::vector<Aut>& group, const QuarticPreset& preset);

// Rationality of X itself over the preset field.
Verdict x_rationality(const QuarticPreset& preset);

// --- the example table ------------------------------------------------------------

struct TableCell {
    enum class Kind { Impossible, Quartic, Cubic } kind = Kind::Impossible;
    std::string impossible_reason;
    int example = 0;                 // quartic: 1..9; cubic: 15..18
    std::vector<Aut> group;          // quartic cells
    Verdict x_expected = Verdict::Rational;
    Verdict quotient_expected = Verdict::Rational;
};

// Row = the eleven group types, column = the four (X, X/G) rationality
// combinations: 1 = (rat, rat), 2 = (rat, non), 3 = (non, rat), 4 = (non, non).
TableCell table4(int row, int column);

}  // namespace dp2::quartic
