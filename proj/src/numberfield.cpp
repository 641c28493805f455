#include "dp2/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dp2::nf {

namespace {

constexpr std::int64_t kTrialCap = 100000;
constexpr std::int64_t kMagnitudeCap = 1000000000000000LL;  // 10^15

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    std::int64_t r = (std::int64_t)std::sqrt((double)v);
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_perfect_square(std::int64_t v) {
    if (v < 0) return false;
    std::int64_t r = isqrt64(v);
    return r * r == v;
}

// squarefree part of a nonzero integer
std::int64_t squarefree_int(std::int64_t n) {
    if (n == 0) throw std::domain_error("squarefree part of zero");
    std::int64_t sign = n < 0 ? -1 : 1;
    std::int64_t v = n < 0 ? -n : n;
    if (v > kMagnitudeCap) throw std::overflow_error("squarefree: value too large to factor");
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= v && p <= kTrialCap; p += (p == 2 ? 1 : 2)) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (e & 1) out *= p;
    }
    // leftover v has no prime factor <= min(sqrt(v), cap); with the magnitude
    // cap it is 1, a prime, a product of two distinct primes, or a prime square
    if (v > 1) {
        if (is_perfect_square(v)) { /* square, drop */ }
        else out *= v;
    }
    return sign * out;
}

}  // namespace

std::int64_t squarefree_part(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("squarefree part of zero");
    // p/q and p*q differ by the square q^2
    __int128 prod = (__int128)r.num() * r.den();
    if (prod > kMagnitudeCap || prod < -(__int128)kMagnitudeCap)
        throw std::overflow_error("squarefree: value too large to factor");
    return squarefree_int((std::int64_t)prod);
}

std::optional<SquareClassField> SquareClassField::parse(const std::string& descriptor) {
    SquareClassField k;
    std::string tok;
    std::istringstream in(descriptor);
    while (std::getline(in, tok, ',')) {
        // trim
        while (!tok.empty() && isspace((unsigned char)tok.front())) tok.erase(tok.begin());
        while (!tok.empty() && isspace((unsigned char)tok.back())) tok.pop_back();
        if (tok.empty()) continue;
        std::int64_t d;
        if (tok == "w" || tok == "W") {
            d = -3;
        } else {
            try {
                size_t pos = 0;
                d = std::stoll(tok, &pos);
                if (pos != tok.size()) return std::nullopt;
            } catch (...) {
                return std::nullopt;
            }
        }
        if (d == 0) return std::nullopt;
        k = k.adjoin(d);
    }
    return k;
}

SquareClassField SquareClassField::adjoin(std::int64_t d) const {
    std::int64_t s = squarefree_int(d);
    if (s == 1) return *this;
    if (is_square_in(Rational(s), *this)) return *this;
    SquareClassField k = *this;
    k.adjoined_.push_back(s);
    return k;
}

bool SquareClassField::extends(const SquareClassField& other) const {
    for (auto d : other.adjoined_)
        if (!is_square_in(Rational(d), *this)) return false;
    return true;
}

std::string SquareClassField::str() const {
    if (adjoined_.empty()) return "Q";
    std::string s = "Q(";
    for (size_t i = 0; i < adjoined_.size(); ++i) {
        if (i) s += ",";
        s += "sqrt(" + std::to_string(adjoined_[i]) + ")";
    }
    return s + ")";
}

bool is_square_in(const Rational& r, const SquareClassField& k) {
    std::int64_t target = squarefree_part(r);
    const auto& d = k.adjoined();
    size_t n = d.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::int64_t prod = target;
        for (size_t i = 0; i < n; ++i) {
            if (!(mask & (size_t(1) << i))) continue;
            __int128 wide = (__int128)prod * d[i];
            if (wide > kMagnitudeCap || wide < -(__int128)kMagnitudeCap)
                throw std::overflow_error("square class product too large");
            prod = squarefree_int((std::int64_t)wide);
        }
        if (prod == 1) return true;
    }
    return false;
}

bool same_class_in(const Rational& a, const Rational& b, const SquareClassField& k) {
    return is_square_in(a * b, k);
}

int RationalPoly::degree() const {
    for (int i = (int)coeffs.size() - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational v(0);
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) v = v * x + coeffs[i];
    return v;
}

std::string RationalPoly::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << (coeffs[i] > Rational(0) ? " + " : " - ");
        else if (coeffs[i] < Rational(0)) os << "-";
        Rational mag = coeffs[i] < Rational(0) ? -coeffs[i] : coeffs[i];
        bool unit = (mag == Rational(1)) && i > 0;
        if (!unit) os << mag;
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
    n = n < 0 ? -n : n;
    if (n == 0) throw std::domain_error("divisors of zero");
    if (n > kMagnitudeCap) throw std::overflow_error("divisor enumeration: value too large");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// integer-coefficient version of p with content removed
std::vector<std::int64_t> integer_model(const RationalPoly& p) {
    std::int64_t lcm = 1;
    for (const auto& c : p.coeffs) lcm = std::lcm(lcm, c.den());
    std::vector<std::int64_t> v;
    for (const auto& c : p.coeffs) v.push_back(c.num() * (lcm / c.den()));
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

}  // namespace

namespace {

// exact sign of sum v_i n^i d^(deg-i) for the coefficient slice v[low..deg],
// via checked 128-bit Horner
bool is_root_checked(const std::vector<std::int64_t>& v, int low, int deg, std::int64_t n,
                     std::int64_t d) {
    auto mul = [](__int128 a, __int128 b) {
        __int128 r = a * b;
        if (a != 0 && (r / a != b))
            throw std::overflow_error("root test: intermediate value too large");
        constexpr __int128 lim = ((__int128)1) << 120;
        if (r > lim || r < -lim) throw std::overflow_error("root test: value too large");
        return r;
    };
    __int128 acc = v[deg];
    __int128 dpow = 1;
    for (int i = deg - 1; i >= low; --i) {
        dpow = mul(dpow, d);
        acc = mul(acc, n) + mul(v[i], dpow);
    }
    return acc == 0;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPoly& p) {
    int deg = p.degree();
    if (deg < 0) throw std::domain_error("zero polynomial");
    auto v = integer_model(p);
    v.resize(deg + 1);
    std::vector<Rational> roots;
    // strip factors of x
    int low = 0;
    while (low <= deg && v[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low > deg) return roots;
    // Cauchy bound: no root exceeds 1 + max |v_i| / |lead|
    std::int64_t maxc = 0;
    for (int i = low; i <= deg; ++i) maxc = std::max(maxc, v[i] < 0 ? -v[i] : v[i]);
    std::int64_t lead = v[deg] < 0 ? -v[deg] : v[deg];
    Rational bound = Rational(1) + Rational(maxc, lead);
    for (std::int64_t pn : positive_divisors(v[low]))
        for (std::int64_t qd : positive_divisors(v[deg])) {
            if (Rational(pn, qd) > bound) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * pn, qd);
                if (is_root_checked(v, low, deg, cand.num(), cand.den()) &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Nontrivial square classes of k: squarefree parts of all subset products.
std::vector<std::int64_t> nontrivial_classes(const SquareClassField& k) {
    const auto& d = k.adjoined();
    std::vector<std::int64_t> out;
    size_t n = d.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::int64_t prod = 1;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) prod = squarefree_int(prod * d[i]);
        out.push_back(prod);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool rational_is_square(const Rational& r, Rational* root = nullptr) {
    if (r < Rational(0)) return false;
    if (r.is_zero()) {
        if (root) *root = Rational(0);
        return true;
    }
    std::int64_t n = isqrt64(r.num()), d = isqrt64(r.den());
    if (n < 0 || d < 0 || n * n != r.num() || d * d != r.den()) return false;
    if (root) *root = Rational(n, d);
    return true;
}

}  // namespace

CubicAnalysis cubic_analysis(const RationalPoly& cubic, const SquareClassField& k) {
    if (cubic.degree() != 3) throw std::invalid_argument("cubic_analysis needs degree 3");
    Rational a = cubic.coeffs[3], b = cubic.coeffs.size() > 2 ? cubic.coeffs[2] : Rational(0),
             c = cubic.coeffs.size() > 1 ? cubic.coeffs[1] : Rational(0),
             d = cubic.coeffs.size() > 0 ? cubic.coeffs[0] : Rational(0);
    Rational disc = Rational(18) * a * b * c * d - Rational(4) * b * b * b * d +
                    b * b * c * c - Rational(4) * a * c * c * c -
                    Rational(27) * a * a * d * d;
    if (disc.is_zero()) throw std::invalid_argument("cubic has a repeated root");

    CubicAnalysis out;
    out.discriminant_class = squarefree_part(disc);
    out.galois_order_even = !is_square_in(disc, k);
    out.has_root_in_k = !rational_roots(cubic).empty();

    if (!out.has_root_in_k) {
        // roots x = s + t sqrt(e), t != 0: the irrational part forces
        // T := t^2 e = -(3a s^2 + 2b s + c) / a, and eliminating T from the
        // rational part leaves -8a^2 s^3 - 8ab s^2 - 2(ac + b^2) s + (ad - bc) = 0.
        RationalPoly sp;
        sp.coeffs = {a * d - b * c, Rational(-2) * (a * c + b * b), Rational(-8) * a * b,
                     Rational(-8) * a * a};
        for (const auto& s : rational_roots(sp)) {
            Rational t2e = -(Rational(3) * a * s * s + Rational(2) * b * s + c) / a;
            if (t2e.is_zero()) continue;
            for (std::int64_t e : nontrivial_classes(k)) {
                Rational t2 = t2e / Rational(e);
                if (!t2.is_zero() && rational_is_square(t2)) {
                    out.has_root_in_k = true;
                    break;
                }
            }
            if (out.has_root_in_k) break;
        }
    }
    return out;
}

Transitivity quartic_transitive_over(const RationalPoly& quartic, const SquareClassField& k) {
    if (quartic.degree() != 4) throw std::invalid_argument("quartic_transitive_over needs degree 4");
    try {
        if (!rational_roots(quartic).empty()) return Transitivity::NotTransitive;

        // depress: monic in y with x = y - c3/(4 c4)
        Rational c4 = quartic.coeffs[4], c3 = quartic.coeffs[3], c2 = quartic.coeffs[2],
                 c1 = quartic.coeffs[1], c0 = quartic.coeffs[0];
        Rational a3 = c3 / c4, a2 = c2 / c4, a1 = c1 / c4, a0 = c0 / c4;
        Rational sh = a3 / Rational(4);
        // y^4 + p y^2 + q y + r
        Rational p = a2 - Rational(6) * sh * sh;
        Rational q = a1 - Rational(2) * a2 * sh + Rational(8) * sh * sh * sh;
        Rational r = a0 - a1 * sh + a2 * sh * sh - Rational(3) * sh * sh * sh * sh;

        // A factorization into two quadratics (y^2 + uy + v)(y^2 - uy + w)
        // over k forces U = u^2 to be a rational root of the resolvent
        // U^3 + 2p U^2 + (p^2 - 4r) U - q^2 (rational because a cubic cannot
        // acquire roots in a multiquadratic extension), with sqrt(U) in k.
        RationalPoly resolvent;
        resolvent.coeffs = {-(q * q), p * p - Rational(4) * r, Rational(2) * p, Rational(1)};
        for (const auto& u2 : rational_roots(resolvent)) {
            if (u2.is_zero()) {
                if (q.is_zero() && is_square_in(p * p - Rational(4) * r, k))
                    return Transitivity::NotTransitive;
                continue;
            }
            if (is_square_in(u2, k)) return Transitivity::NotTransitive;
        }
        return Transitivity::Transitive;
    } catch (const std::overflow_error&) {
        return Transitivity::Inconclusive;
    }
}

}  // namespace dp2::nf
