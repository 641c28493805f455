#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp2::pic {

// Divisor classes are raw coordinate vectors in the basis (L, E1..E7) of the
// rank-8 Picard lattice of a degree-2 del Pezzo surface. The intersection
// form is diag(1, -1, ..., -1).
using Coeffs = Eigen::Matrix<std::int64_t, 8, 1>;
using Mat8 = Eigen::Matrix<std::int64_t, 8, 8>;

inline std::int64_t intersect(const Coeffs& a, const Coeffs& b) {
    std::int64_t s = a[0] * b[0];
    for (int i = 1; i < 8; ++i) s -= a[i] * b[i];
    return s;
}

// K = -3L + E1 + ... + E7, so -K ~ 3L - sum E_i and K^2 = 2.
inline Coeffs canonical_class() {
    Coeffs k;
    k << -3, 1, 1, 1, 1, 1, 1, 1;
    return k;
}

inline bool is_line_class(const Coeffs& d) {
    return intersect(d, d) == -1 && intersect(d, canonical_class()) == -1;
}

enum class LineKind : std::uint8_t { E, L, Q, C };

// E(i): exceptional curve; L(i,j): line through two blown-up points;
// Q(i,j): conic through the other five; C(i): singular cubic through all.
struct LineLabel {
    LineKind kind;
    int i = 0;  // 1-based
    int j = 0;  // 1-based, used by L and Q only, i < j

    std::string str() const;
};

struct Line {
    LineLabel label;
    Coeffs cls;
};

inline Coeffs e_class(int i) {
    Coeffs c = Coeffs::Zero();
    c[i] = 1;
    return c;
}

inline Coeffs l_class(int i, int j) {
    Coeffs c = Coeffs::Zero();
    c[0] = 1;
    c[i] = -1;
    c[j] = -1;
    return c;
}

inline Coeffs q_class(int i, int j) {
    Coeffs c;
    c << 2, -1, -1, -1, -1, -1, -1, -1;
    c[i] = 0;
    c[j] = 0;
    return c;
}

inline Coeffs c_class(int i) {
    Coeffs c;
    c << 3, -1, -1, -1, -1, -1, -1, -1;
    c[i] = -2;
    return c;
}

// The 56 lines in canonical order: E1..E7, L12..L67, Q12..Q67, C1..C7.
const std::array<Line, 56>& lines();

// Index of a line class in the canonical order, or nullopt.
std::optional<int> line_index(const Coeffs& d);
std::optional<int> line_index_of_label(const LineLabel& l);
std::optional<LineLabel> parse_line_label(const std::string& s);

// Cached pairwise products of the 56 lines.
const std::array<std::array<std::int8_t, 56>, 56>& line_products();

// Geiser pairing on line indices: E_i <-> C_i, L_ij <-> Q_ij.
int geiser_partner(int line);

// Exhaustive search for classes with D^2 = -1, D.K = -1 within the stated
// coefficient bounds (|a| <= 3, |b_i| <= 2); the closed-form catalog shows the
// bounds are sufficient.
std::vector<Coeffs> search_lines_bounded();

// Text form "aL-b1E1-...-b7E7" with zero terms omitted (class = aL - sum b_i E_i).
std::string class_to_string(const Coeffs& d);
std::optional<Coeffs> parse_class(const std::string& s);

struct ContractionError {
    std::string message;
};

// Lattice-level state of a chain of blow-downs. `contracted` holds pairwise
// orthogonal (-1)-classes; current_k = K - sum of contracted classes.
class ContractedModel {
public:
    ContractedModel() : current_k_(canonical_class()) {}

    const std::vector<Coeffs>& contracted() const { return contracted_; }
    const Coeffs& current_k() const { return current_k_; }
    std::int64_t k_squared() const { return intersect(current_k_, current_k_); }

    // Contract a set of disjoint (-1)-classes of the current model. Throws
    // ContractionError naming the offending pair on invalid input.
    ContractedModel contract(const std::vector<Coeffs>& sigma) const;

    // Classes D with D^2 = -1, D.currentK = -1, D orthogonal to everything
    // contracted, found by bounded exhaustive search.
    std::vector<Coeffs> residual_lines() const;

private:
    std::vector<Coeffs> contracted_;
    Coeffs current_k_;
};

}  // namespace dp2::pic
