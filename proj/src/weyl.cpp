#include "dp2/weyl.hpp"

#include "dp2/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dp2::weyl {

using pic::Coeffs;
using pic::Mat8;

LinePerm identity_perm() {
    LinePerm p;
    for (int i = 0; i < 56; ++i) p[i] = (std::uint8_t)i;
    return p;
}

LinePerm compose(const LinePerm& f, const LinePerm& g) {
    LinePerm r;
    for (int i = 0; i < 56; ++i) r[i] = f[g[i]];
    return r;
}

LinePerm inverse(const LinePerm& f) {
    LinePerm r;
    for (int i = 0; i < 56; ++i) r[f[i]] = (std::uint8_t)i;
    return r;
}

std::uint64_t perm_key(const LinePerm& p) {
    std::uint64_t k = 0;
    for (int i = 0; i < 7; ++i) k |= (std::uint64_t)p[i] << (6 * i);
    return k;
}

std::vector<int> cycle_type(const LinePerm& p) {
    std::array<bool, 56> seen{};
    std::vector<int> lengths;
    for (int i = 0; i < 56; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

Isometry identity() {
    return {Mat8::Identity(), identity_perm()};
}

Isometry compose(const Isometry& a, const Isometry& b) {
    return {a.matrix * b.matrix, compose(a.perm, b.perm)};
}

Isometry inverse(const Isometry& a) {
    Isometry r;
    r.perm = inverse(a.perm);
    r.matrix = lift(r.perm).matrix;
    return r;
}

Isometry lift(const LinePerm& p) {
    Mat8 m;
    // columns for E1..E7 are the images of lines 0..6
    for (int i = 0; i < 7; ++i) m.col(i + 1) = pic::lines()[p[i]].cls;
    // L = L12 + E1 + E2
    const int l12 = *pic::line_index_of_label({pic::LineKind::L, 1, 2});
    m.col(0) = pic::lines()[p[l12]].cls + m.col(1) + m.col(2);
    return {m, p};
}

namespace {

bool preserves_form(const Mat8& m) {
    Mat8 j = Mat8::Identity();
    for (int i = 1; i < 8; ++i) j(i, i) = -1;
    return (m.transpose() * j * m) == j;
}

}  // namespace

Isometry from_matrix(const Mat8& m) {
    if (!preserves_form(m))
        throw std::invalid_argument("matrix does not preserve the intersection form");
    if ((m * pic::canonical_class()) != pic::canonical_class())
        throw std::invalid_argument("matrix does not fix the canonical class");
    LinePerm p;
    std::array<bool, 56> hit{};
    for (int i = 0; i < 56; ++i) {
        Coeffs img = m * pic::lines()[i].cls;
        auto idx = pic::line_index(img);
        if (!idx) throw std::invalid_argument("matrix does not permute the 56 lines");
        p[i] = (std::uint8_t)*idx;
        hit[*idx] = true;
    }
    for (bool h : hit)
        if (!h) throw std::invalid_argument("line action is not a bijection");
    return {m, p};
}

Isometry from_e_images(const std::array<int, 7>& e_images) {
    Mat8 m;
    Coeffs sum = Coeffs::Zero();
    for (int i = 0; i < 7; ++i) {
        m.col(i + 1) = pic::lines()[e_images[i]].cls;
        sum += m.col(i + 1);
    }
    // K-fixing: 3 m(L) = 3L - sum E_i + sum of images
    Coeffs three_l = -pic::canonical_class() + sum;
    for (int i = 0; i < 8; ++i) {
        if (three_l[i] % 3 != 0)
            throw std::invalid_argument("stated images do not extend to an isometry");
        three_l[i] /= 3;
    }
    m.col(0) = three_l;
    return from_matrix(m);
}

Isometry perm_generator(const std::array<int, 7>& sigma) {
    std::array<bool, 8> hit{};
    for (int v : sigma) {
        if (v < 1 || v > 7 || hit[v]) throw std::invalid_argument("not a permutation of 1..7");
        hit[v] = true;
    }
    Mat8 m = Mat8::Zero();
    m(0, 0) = 1;
    for (int i = 1; i <= 7; ++i) m(sigma[i - 1], i) = 1;
    return from_matrix(m);
}

Isometry geiser() {
    std::array<int, 7> imgs;
    for (int i = 1; i <= 7; ++i) imgs[i - 1] = *pic::line_index(pic::c_class(i));
    return from_e_images(imgs);
}

Isometry root_reflection(const Coeffs& root) {
    if (pic::intersect(root, root) != -2)
        throw std::invalid_argument("reflection root must have self-intersection -2");
    if (pic::intersect(root, pic::canonical_class()) != 0)
        throw std::invalid_argument("reflection root must be orthogonal to K");
    Mat8 m = Mat8::Identity();
    // x -> x + (x.root) root
    for (int c = 0; c < 8; ++c) {
        Coeffs basis = Coeffs::Zero();
        basis[c] = 1;
        m.col(c) = basis + pic::intersect(basis, root) * root;
    }
    return from_matrix(m);
}

Isometry gen_a() { return perm_generator({2, 3, 1, 4, 5, 6, 7}); }
Isometry gen_b() { return perm_generator({1, 2, 3, 5, 6, 4, 7}); }
Isometry gen_c() { return perm_generator({4, 5, 6, 1, 2, 3, 7}); }

Isometry gen_s() {
    std::array<int, 7> imgs;
    for (int i = 1; i <= 6; ++i) imgs[i - 1] = *pic::line_index(pic::q_class(i, 7));
    imgs[6] = *pic::line_index(pic::e_class(7));
    return from_e_images(imgs);
}

Isometry gen_r() {
    std::array<int, 7> imgs;
    for (int i = 1; i <= 3; ++i) imgs[i - 1] = *pic::line_index(pic::q_class(i, 7));
    imgs[3] = *pic::line_index(pic::l_class(5, 6));
    imgs[4] = *pic::line_index(pic::l_class(4, 6));
    imgs[5] = *pic::line_index(pic::l_class(4, 5));
    imgs[6] = *pic::line_index(pic::e_class(7));
    return from_e_images(imgs);
}

SubgroupClosure SubgroupClosure::generate(const std::vector<Isometry>& gens, std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("closure cap must be at least 1");
    SubgroupClosure g;
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(1 << 16);
    auto push = [&](const LinePerm& p) {
        if (keys.insert(perm_key(p)).second) {
            if (keys.size() > cap) throw CapExceeded{cap};
            g.elements_.push_back(p);
            return true;
        }
        return false;
    };
    push(identity_perm());
    for (const auto& gen : gens) {
        g.generators_.push_back(gen.perm);
        push(gen.perm);
    }
    for (size_t head = 0; head < g.elements_.size(); ++head) {
        LinePerm e = g.elements_[head];
        for (const auto& gen : g.generators_) push(compose(e, gen));
    }
    g.sorted_keys_.assign(keys.begin(), keys.end());
    std::sort(g.sorted_keys_.begin(), g.sorted_keys_.end());
    return g;
}

SubgroupClosure SubgroupClosure::from_elements(std::vector<LinePerm> elements) {
    SubgroupClosure g;
    g.elements_ = std::move(elements);
    if (g.elements_.empty()) g.elements_.push_back(identity_perm());
    g.sorted_keys_.reserve(g.elements_.size());
    for (const auto& p : g.elements_) g.sorted_keys_.push_back(perm_key(p));
    std::sort(g.sorted_keys_.begin(), g.sorted_keys_.end());
    // greedy generator reduction
    std::unordered_set<std::uint64_t> have;
    std::vector<LinePerm> closed;
    auto close_over = [&](const std::vector<LinePerm>& gens) {
        have.clear();
        closed.clear();
        closed.push_back(identity_perm());
        have.insert(perm_key(closed[0]));
        for (size_t head = 0; head < closed.size(); ++head)
            for (const auto& gen : gens) {
                LinePerm n = compose(closed[head], gen);
                if (have.insert(perm_key(n)).second) closed.push_back(n);
            }
    };
    for (const auto& p : g.elements_) {
        if (have.count(perm_key(p))) continue;
        g.generators_.push_back(p);
        close_over(g.generators_);
    }
    if (closed.size() != g.elements_.size() && g.elements_.size() <= 100000)
        throw std::invalid_argument("element set is not closed under composition");
    return g;
}

std::vector<Isometry> SubgroupClosure::generator_isometries() const {
    std::vector<Isometry> out;
    out.reserve(generators_.size());
    for (const auto& p : generators_) out.push_back(lift(p));
    return out;
}

bool SubgroupClosure::contains(const LinePerm& p) const {
    return std::binary_search(sorted_keys_.begin(), sorted_keys_.end(), perm_key(p));
}

bool SubgroupClosure::is_subgroup_of(const SubgroupClosure& g) const {
    for (const auto& e : elements_)
        if (!g.contains(e)) return false;
    return true;
}

namespace {

// Exact reduced row echelon form over Q; returns rank, matrix is modified.
int rref(std::vector<std::array<Rational, 8>>& rows) {
    int rank = 0;
    for (int col = 0; col < 8 && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (!rows[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (int c = 0; c < 8; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (int c = 0; c < 8; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::array<Rational, 8>> stack_fixed_system(const std::vector<Mat8>& gens) {
    std::vector<std::array<Rational, 8>> rows;
    for (const auto& m : gens) {
        Mat8 d = m - Mat8::Identity();
        for (int r = 0; r < 8; ++r) {
            std::array<Rational, 8> row;
            bool nonzero = false;
            for (int c = 0; c < 8; ++c) {
                row[c] = Rational(d(r, c));
                nonzero = nonzero || d(r, c) != 0;
            }
            if (nonzero) rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace

int invariant_rank(const std::vector<Mat8>& generator_matrices) {
    auto rows = stack_fixed_system(generator_matrices);
    if (rows.empty()) return 8;
    int r = rref(rows);
    return 8 - r;
}

int invariant_rank(const SubgroupClosure& group) {
    std::vector<Mat8> mats;
    for (const auto& p : group.generators()) mats.push_back(lift(p).matrix);
    return invariant_rank(mats);
}

std::vector<Coeffs> fixed_space_basis(const std::vector<Mat8>& generator_matrices) {
    auto rows = stack_fixed_system(generator_matrices);
    int rank = rows.empty() ? 0 : rref(rows);
    rows.resize(rank);
    // identify pivot columns
    std::array<int, 8> pivot_row;
    pivot_row.fill(-1);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < 8; ++c)
            if (!rows[r][c].is_zero()) { pivot_row[c] = r; break; }
    std::vector<Coeffs> basis;
    for (int free = 0; free < 8; ++free) {
        if (pivot_row[free] >= 0) continue;
        std::array<Rational, 8> v{};
        v[free] = Rational(1);
        for (int c = 0; c < 8; ++c) {
            int r = pivot_row[c];
            if (r >= 0) v[c] = -rows[r][free];
        }
        // clear denominators, divide by content
        std::int64_t lcm = 1;
        for (const auto& x : v) lcm = std::lcm(lcm, x.den());
        Coeffs w;
        for (int c = 0; c < 8; ++c) w[c] = v[c].num() * (lcm / v[c].den());
        std::int64_t g = 0;
        for (int c = 0; c < 8; ++c) g = std::gcd(g, w[c] < 0 ? -w[c] : w[c]);
        if (g > 1) w /= g;
        basis.push_back(w);
    }
    return basis;
}

SubgroupClosure centralizer(const SubgroupClosure& g, const SubgroupClosure& ambient) {
    std::vector<LinePerm> picked;
    for (const auto& h : ambient.elements()) {
        bool commutes = true;
        for (const auto& k : g.generators())
            if (compose(h, k) != compose(k, h)) { commutes = false; break; }
        if (commutes) picked.push_back(h);
    }
    return SubgroupClosure::from_elements(std::move(picked));
}

std::vector<LinePerm> center(const SubgroupClosure& ambient) {
    std::vector<LinePerm> out;
    for (const auto& h : ambient.elements()) {
        bool commutes = true;
        for (const auto& k : ambient.generators())
            if (compose(h, k) != compose(k, h)) { commutes = false; break; }
        if (commutes) out.push_back(h);
    }
    return out;
}

std::optional<Isometry> conjugate_in(const Isometry& g, const Isometry& h,
                                     const SubgroupClosure& ambient) {
    if (cycle_type(g.perm) != cycle_type(h.perm)) return std::nullopt;
    if (g.matrix.trace() != h.matrix.trace()) return std::nullopt;
    for (const auto& w : ambient.elements()) {
        // w g w^-1 = h  <=>  w g = h w
        if (compose(w, g.perm) == compose(h.perm, w)) return lift(w);
    }
    return std::nullopt;
}

std::vector<std::vector<int>> orbits(const SubgroupClosure& group, const std::vector<int>& points) {
    std::array<bool, 56> wanted{}, seen{};
    for (int p : points) wanted[p] = true;
    std::vector<std::vector<int>> out;
    for (int p : points) {
        if (seen[p]) continue;
        std::vector<int> orbit{p};
        seen[p] = true;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& gen : group.generators()) {
                int q = gen[orbit[head]];
                if (!seen[q]) {
                    seen[q] = true;
                    orbit.push_back(q);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        for (int q : orbit)
            if (!wanted[q])
                throw std::invalid_argument("group does not preserve the given point set");
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<int> fixed_lines(const LinePerm& p) {
    std::vector<int> out;
    for (int i = 0; i < 56; ++i)
        if (p[i] == i) out.push_back(i);
    return out;
}

namespace {

struct OrbitData {
    std::vector<std::uint64_t> masks;            // one bit per line, per orbit
    std::vector<bool> internally_disjoint;       // orbit lines pairwise product 0
    std::vector<std::uint64_t> kills;            // lines meeting the orbit
    std::vector<int> sizes;
    std::vector<std::vector<int>> members;
};

OrbitData orbit_data(const SubgroupClosure& gal) {
    std::vector<int> all(56);
    for (int i = 0; i < 56; ++i) all[i] = i;
    auto parts = orbits(gal, all);
    OrbitData d;
    const auto& prod = pic::line_products();
    for (const auto& orbit : parts) {
        std::uint64_t mask = 0;
        for (int p : orbit) mask |= (1ULL << p);
        bool disjoint = true;
        for (size_t i = 0; i < orbit.size() && disjoint; ++i)
            for (size_t j = i + 1; j < orbit.size(); ++j)
                if (prod[orbit[i]][orbit[j]] != 0) { disjoint = false; break; }
        std::uint64_t kill = 0;
        for (int q = 0; q < 56; ++q)
            for (int p : orbit)
                if (prod[q][p] != 0) { kill |= (1ULL << q); break; }
        d.masks.push_back(mask);
        d.internally_disjoint.push_back(disjoint);
        d.kills.push_back(kill);
        d.sizes.push_back((int)orbit.size());
        d.members.push_back(orbit);
    }
    return d;
}

// Memoized DFS over residual line sets. Each memo entry records the best K^2
// gain from that state together with the first orbit of a chain realizing it,
// so a witness chain can be replayed afterwards. Once some chain reaches
// `target`, remaining branches are cut; the recorded gains stay mutually
// consistent and the result is then a sound lower bound that has met the
// target (exact whenever the cut never fires).
struct SearchState {
    const OrbitData* d;
    int target;
    bool done = false;
    std::unordered_map<std::uint64_t, std::pair<int, int>> memo;  // mask -> (gain, first orbit)

    int run(std::uint64_t available) {
        auto it = memo.find(available);
        if (it != memo.end()) return it->second.first;
        int best = 0, best_orbit = -1;
        if (!done) {
            for (size_t o = 0; o < d->masks.size(); ++o) {
                if (!d->internally_disjoint[o]) continue;
                std::uint64_t m = d->masks[o];
                if ((available & m) != m) continue;
                std::uint64_t next = available & ~d->kills[o] & ~m;
                int sub = d->sizes[o] + run(next);
                if (sub > best) {
                    best = sub;
                    best_orbit = (int)o;
                }
                if (2 + best >= target) {
                    done = true;
                    break;
                }
                if (done) break;
            }
        }
        memo.emplace(available, std::make_pair(best, best_orbit));
        return best;
    }
};

}  // namespace

MinimalModelResult minimal_model_search(const SubgroupClosure& gal, int target) {
    OrbitData d = orbit_data(gal);
    SearchState s;
    s.d = &d;
    s.target = target;
    const std::uint64_t all = (1ULL << 56) - 1;
    int gain = s.run(all);
    MinimalModelResult r;
    r.max_k2 = 2 + gain;
    std::uint64_t mask = all;
    while (true) {
        auto it = s.memo.find(mask);
        if (it == s.memo.end() || it->second.second < 0) break;
        int o = it->second.second;
        r.chain.push_back({d.members[o]});
        mask = mask & ~d.kills[o] & ~d.masks[o];
    }
    return r;
}

}  // namespace dp2::weyl
