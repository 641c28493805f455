#pragma once

#include "dp2/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp2::nf {

// Signed squarefree part s of a nonzero rational r, so that r / s is a
// rational square. Throws on zero; throws std::overflow_error when the value
// is too large to factor within the trial-division budget.
std::int64_t squarefree_part(const Rational& r);

// Q(sqrt(d1), ..., sqrt(dn)) with the d_i signed squarefree integers, reduced
// so they are multiplicatively independent modulo squares. "w" in the string
// form is an alias for -3 (adjoining a primitive cube root of unity).
class SquareClassField {
public:
    static SquareClassField rationals() { return {}; }
    static std::optional<SquareClassField> parse(const std::string& descriptor);

    SquareClassField adjoin(std::int64_t d) const;

    const std::vector<std::int64_t>& adjoined() const { return adjoined_; }
    bool extends(const SquareClassField& other) const;
    std::string str() const;

private:
    std::vector<std::int64_t> adjoined_;
};

// Whether r is a square in k: some subset product of the adjoined classes
// matches the square class of r.
bool is_square_in(const Rational& r, const SquareClassField& k);

// Whether a and b lie in the same square class of k.
bool same_class_in(const Rational& a, const Rational& b, const SquareClassField& k);

// Dense rational polynomial, low degree. coeffs[i] multiplies x^i.
struct RationalPoly {
    std::vector<Rational> coeffs;

    int degree() const;
    Rational eval(const Rational& x) const;
    Rational lead() const { return coeffs.at(degree()); }
    std::string str(const std::string& var = "x") const;
};

// All rational roots, found exactly via the rational root theorem. Throws
// std::overflow_error if the coefficient factorizations exceed the budget.
std::vector<Rational> rational_roots(const RationalPoly& p);

struct CubicAnalysis {
    bool has_root_in_k = false;
    std::int64_t discriminant_class = 1;
    bool galois_order_even = false;
};

// Root-in-k search (rational roots plus a + b sqrt(d) coefficient matching
// over the quadratic subfields of k), discriminant class, and parity of the
// Galois group order. Throws on repeated roots.
CubicAnalysis cubic_analysis(const RationalPoly& cubic, const SquareClassField& k);

enum class Transitivity { Transitive, NotTransitive, Inconclusive };

// Whether the Galois group of a separable quartic permutes its roots
// transitively over k, i.e. whether the quartic is irreducible over k.
// Decided by the rational-root test plus the resolvent-cubic criterion for
// quadratic factorizations; Inconclusive only on factorization budget
// exhaustion.
Transitivity quartic_transitive_over(const RationalPoly& quartic, const SquareClassField& k);

}  // namespace dp2::nf
