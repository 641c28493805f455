#include "dp2/picard.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dp2::pic {

std::string LineLabel::str() const {
    switch (kind) {
        case LineKind::E: return "E" + std::to_string(i);
        case LineKind::L: return "L" + std::to_string(i) + std::to_string(j);
        case LineKind::Q: return "Q" + std::to_string(i) + std::to_string(j);
        case LineKind::C: return "C" + std::to_string(i);
    }
    return {};
}

namespace {

std::array<Line, 56> build_lines() {
    std::array<Line, 56> out;
    int n = 0;
    for (int i = 1; i <= 7; ++i) out[n++] = {{LineKind::E, i, 0}, e_class(i)};
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) out[n++] = {{LineKind::L, i, j}, l_class(i, j)};
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) out[n++] = {{LineKind::Q, i, j}, q_class(i, j)};
    for (int i = 1; i <= 7; ++i) out[n++] = {{LineKind::C, i, 0}, c_class(i)};
    return out;
}

struct CoeffsLess {
    bool operator()(const Coeffs& a, const Coeffs& b) const {
        for (int i = 0; i < 8; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

}  // namespace

const std::array<Line, 56>& lines() {
    static const std::array<Line, 56> table = build_lines();
    return table;
}

std::optional<int> line_index(const Coeffs& d) {
    static const std::map<Coeffs, int, CoeffsLess> index = [] {
        std::map<Coeffs, int, CoeffsLess> m;
        for (int i = 0; i < 56; ++i) m.emplace(lines()[i].cls, i);
        return m;
    }();
    auto it = index.find(d);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::optional<int> line_index_of_label(const LineLabel& l) {
    switch (l.kind) {
        case LineKind::E: return line_index(e_class(l.i));
        case LineKind::L: return line_index(l_class(l.i, l.j));
        case LineKind::Q: return line_index(q_class(l.i, l.j));
        case LineKind::C: return line_index(c_class(l.i));
    }
    return std::nullopt;
}

std::optional<LineLabel> parse_line_label(const std::string& s) {
    if (s.size() < 2) return std::nullopt;
    LineKind k;
    switch (s[0]) {
        case 'E': k = LineKind::E; break;
        case 'L': k = LineKind::L; break;
        case 'Q': k = LineKind::Q; break;
        case 'C': k = LineKind::C; break;
        default: return std::nullopt;
    }
    auto digit = [](char c) { return c >= '1' && c <= '7'; };
    if (k == LineKind::E || k == LineKind::C) {
        if (s.size() != 2 || !digit(s[1])) return std::nullopt;
        return LineLabel{k, s[1] - '0', 0};
    }
    if (s.size() != 3 || !digit(s[1]) || !digit(s[2])) return std::nullopt;
    int i = s[1] - '0', j = s[2] - '0';
    if (i >= j) return std::nullopt;
    return LineLabel{k, i, j};
}

const std::array<std::array<std::int8_t, 56>, 56>& line_products() {
    static const auto table = [] {
        std::array<std::array<std::int8_t, 56>, 56> t{};
        for (int i = 0; i < 56; ++i)
            for (int j = 0; j < 56; ++j)
                t[i][j] = (std::int8_t)intersect(lines()[i].cls, lines()[j].cls);
        return t;
    }();
    return table;
}

int geiser_partner(int line) {
    const auto& l = lines()[line].label;
    LineLabel p = l;
    switch (l.kind) {
        case LineKind::E: p.kind = LineKind::C; break;
        case LineKind::C: p.kind = LineKind::E; break;
        case LineKind::L: p.kind = LineKind::Q; break;
        case LineKind::Q: p.kind = LineKind::L; break;
    }
    return *line_index_of_label(p);
}

std::vector<Coeffs> search_lines_bounded() {
    std::vector<Coeffs> out;
    const Coeffs k = canonical_class();
    Coeffs d;
    for (std::int64_t a = -3; a <= 3; ++a) {
        d[0] = a;
        std::array<std::int64_t, 7> b{};
        // odometer over b_i in [-2, 2]
        for (auto& x : b) x = -2;
        while (true) {
            for (int i = 0; i < 7; ++i) d[i + 1] = -b[i];
            if (intersect(d, d) == -1 && intersect(d, k) == -1) out.push_back(d);
            int pos = 0;
            while (pos < 7 && b[pos] == 2) b[pos++] = -2;
            if (pos == 7) break;
            ++b[pos];
        }
    }
    return out;
}

std::string class_to_string(const Coeffs& d) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](std::int64_t c, const std::string& sym) {
        if (c == 0) return;
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << c;
            first = false;
        } else {
            os << (c > 0 ? "+" : "-");
            if (c != 1 && c != -1) os << (c > 0 ? c : -c);
        }
        os << sym;
    };
    term(d[0], "L");
    for (int i = 1; i <= 7; ++i) term(d[i], "E" + std::to_string(i));
    if (first) return "0";
    return os.str();
}

std::optional<Coeffs> parse_class(const std::string& s) {
    Coeffs d = Coeffs::Zero();
    size_t p = 0;
    if (s.empty()) return std::nullopt;
    while (p < s.size()) {
        std::int64_t sign = 1;
        if (s[p] == '+') ++p;
        else if (s[p] == '-') { sign = -1; ++p; }
        std::int64_t mag = 1;
        bool have_digits = false;
        std::int64_t v = 0;
        while (p < s.size() && isdigit((unsigned char)s[p])) {
            v = v * 10 + (s[p] - '0');
            have_digits = true;
            ++p;
        }
        if (have_digits) mag = v;
        if (p >= s.size()) return std::nullopt;
        if (s[p] == 'L') {
            d[0] += sign * mag;
            ++p;
        } else if (s[p] == 'E') {
            ++p;
            if (p >= s.size() || s[p] < '1' || s[p] > '7') return std::nullopt;
            d[s[p] - '0'] += sign * mag;
            ++p;
        } else {
            return std::nullopt;
        }
    }
    return d;
}

ContractedModel ContractedModel::contract(const std::vector<Coeffs>& sigma) const {
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (intersect(sigma[i], sigma[i]) != -1)
            throw ContractionError{"class " + class_to_string(sigma[i]) +
                                   " has self-intersection " +
                                   std::to_string(intersect(sigma[i], sigma[i]))};
        if (intersect(sigma[i], current_k_) != -1)
            throw ContractionError{"class " + class_to_string(sigma[i]) +
                                   " is not a (-1)-curve of the current model"};
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (intersect(sigma[i], sigma[j]) != 0)
                throw ContractionError{"classes " + class_to_string(sigma[i]) + " and " +
                                       class_to_string(sigma[j]) + " meet (product " +
                                       std::to_string(intersect(sigma[i], sigma[j])) + ")"};
        for (const auto& c : contracted_)
            if (intersect(sigma[i], c) != 0)
                throw ContractionError{"class " + class_to_string(sigma[i]) +
                                       " meets previously contracted " + class_to_string(c)};
    }
    ContractedModel next = *this;
    for (const auto& s : sigma) {
        next.contracted_.push_back(s);
        next.current_k_ -= s;
    }
    if (next.k_squared() > 9)
        throw ContractionError{"contraction chain exceeds K^2 = 9"};
    return next;
}

std::vector<Coeffs> ContractedModel::residual_lines() const {
    std::vector<Coeffs> out;
    for (const auto& d : search_lines_bounded()) {
        if (intersect(d, current_k_) != -1) continue;
        bool ok = true;
        for (const auto& c : contracted_)
            if (intersect(d, c) != 0) { ok = false; break; }
        if (ok) out.push_back(d);
    }
    return out;
}

}  // namespace dp2::pic
