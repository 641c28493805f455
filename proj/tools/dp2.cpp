// command-line front end: exact lattice, group and quotient computations for
// degree-2 del Pezzo surfaces
#include "CLI11.hpp"
#include "json.hpp"

#include "dp2/classify.hpp"
#include "dp2/family_cubic.hpp"
#include "dp2/family_quartic.hpp"
#include "dp2/iskovskikh.hpp"
#include "dp2/numberfield.hpp"
#include "dp2/picard.hpp"
#include "dp2/quotient.hpp"
#include "dp2/rational.hpp"
#include "dp2/weyl.hpp"

#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace dp2;

namespace {

struct UsageError {
    std::string message;
};

// --- generator DSL: perm:(1 2 3)(4 5 6), geiser, refl:L-E1-E2-E3, named:a|b|c|r|s,
// --- products joined by '*', generators separated by ','

weyl::Isometry parse_atom(const std::string& atom) {
    if (atom == "geiser") return weyl::geiser();
    if (atom.rfind("named:", 0) == 0) {
        std::string n = atom.substr(6);
        if (n == "a") return weyl::gen_a();
        if (n == "b") return weyl::gen_b();
        if (n == "c") return weyl::gen_c();
        if (n == "r") return weyl::gen_r();
        if (n == "s") return weyl::gen_s();
        throw UsageError{"unknown named generator '" + n + "'"};
    }
    if (atom.rfind("refl:", 0) == 0) {
        auto cls = pic::parse_class(atom.substr(5));
        if (!cls) throw UsageError{"cannot parse root class in '" + atom + "'"};
        return weyl::root_reflection(*cls);
    }
    if (atom.rfind("perm:", 0) == 0) {
        std::array<int, 7> sigma{1, 2, 3, 4, 5, 6, 7};
        std::string body = atom.substr(5);
        size_t p = 0;
        while (p < body.size()) {
            if (body[p] != '(') throw UsageError{"expected '(' in permutation"};
            size_t close = body.find(')', p);
            if (close == std::string::npos) throw UsageError{"unbalanced cycle"};
            std::istringstream cyc(body.substr(p + 1, close - p - 1));
            std::vector<int> pts;
            int v;
            while (cyc >> v) {
                if (v < 1 || v > 7) throw UsageError{"cycle entries must be 1..7"};
                pts.push_back(v);
            }
            for (size_t i = 0; i < pts.size(); ++i)
                sigma[pts[i] - 1] = pts[(i + 1) % pts.size()];
            p = close + 1;
        }
        return weyl::perm_generator(sigma);
    }
    throw UsageError{"cannot parse generator atom '" + atom + "'"};
}

weyl::Isometry parse_word(const std::string& word) {
    weyl::Isometry out = weyl::identity();
    std::string atom;
    std::istringstream in(word);
    bool first = true;
    while (std::getline(in, atom, '*')) {
        if (atom.empty()) continue;
        out = first ? parse_atom(atom) : weyl::compose(out, parse_atom(atom));
        first = false;
    }
    if (first) throw UsageError{"empty generator word"};
    return out;
}

std::vector<weyl::Isometry> parse_gens(const std::string& list) {
    std::vector<weyl::Isometry> out;
    std::string word;
    std::istringstream in(list);
    while (std::getline(in, word, ',')) {
        if (word.empty()) continue;
        out.push_back(parse_word(word));
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (...) {
        throw UsageError{"cannot parse rational '" + s + "'"};
    }
}

const weyl::SubgroupClosure& full_weyl_group(std::uint64_t cap) {
    static std::uint64_t used_cap = 0;
    static std::optional<weyl::SubgroupClosure> w;
    if (!w || used_cap != cap) {
        std::vector<weyl::Isometry> gens;
        for (int i = 1; i < 7; ++i) {
            std::array<int, 7> sig{1, 2, 3, 4, 5, 6, 7};
            std::swap(sig[i - 1], sig[i]);
            gens.push_back(weyl::perm_generator(sig));
        }
        pic::Coeffs root;
        root << 1, -1, -1, -1, 0, 0, 0, 0;
        gens.push_back(weyl::root_reflection(root));
        w = weyl::SubgroupClosure::generate(gens, cap);
        used_cap = cap;
    }
    return *w;
}

json group_report(const weyl::SubgroupClosure& g) {
    std::vector<int> all(56);
    for (int i = 0; i < 56; ++i) all[i] = i;
    std::vector<int> sizes;
    for (const auto& o : weyl::orbits(g, all)) sizes.push_back((int)o.size());
    std::sort(sizes.begin(), sizes.end());
    return json{{"order", g.order()},
                {"fixedRank", weyl::invariant_rank(g)},
                {"orbitSizes", sizes}};
}

json ledger_json(const quot::QuotientLedger& l) {
    json steps = json::array();
    for (const auto& s : l.steps) {
        std::string kind = s.kind == quot::LedgerStep::Kind::Hurwitz ? "hurwitz"
                           : s.kind == quot::LedgerStep::Kind::Resolve ? "resolve"
                                                                       : "contract";
        steps.push_back({{"kind", kind}, {"detail", s.detail}, {"k2", s.k2_after.str()}});
    }
    return json{{"scenario", l.scenario},
                {"groupOrder", l.group_order},
                {"startK2", l.start_k2.str()},
                {"steps", steps},
                {"result", l.result.str()}};
}

std::vector<quartic::Aut> parse_quartic_group(const std::string& name) {
    // named shapes first, explicit generator words otherwise
    auto words = [&](std::initializer_list<const char*> ws) {
        std::vector<quartic::Aut> out;
        for (auto w : ws) out.push_back(*quartic::parse_aut(w));
        return out;
    };
    if (name == "trivial" || name.empty()) return {};
    if (name == "N" || name == "C2") return words({"n"});
    if (name == "C2type3") return words({"dg"});
    if (name == "C4") return words({"a3b"});
    if (name == "C4g") return words({"a3bg"});
    if (name == "C2xC2") return words({"a2g", "b2g"});
    if (name == "D8") return words({"a3b", "dg"});
    if (name == "Q8") return words({"a3b", "a2d"});
    if (name == "Q8g") return words({"a3b", "abdg"});
    std::vector<quartic::Aut> out;
    std::string word;
    std::istringstream in(name);
    while (std::getline(in, word, ',')) {
        auto a = quartic::parse_aut(word);
        if (!a) throw UsageError{"cannot parse automorphism word '" + word + "'"};
        out.push_back(*a);
    }
    return out;
}

json quartic_report(int example, const std::string& group_name) {
    auto preset = quartic::example_preset(example);
    auto group = parse_quartic_group(group_name);
    auto model = quartic::galois_model(preset);
    auto minim = quartic::g_minimality(group, preset);
    json j{{"example", example},
           {"preset", preset.str()},
           {"group", group_name.empty() ? "trivial" : group_name},
           {"xRational", quartic::verdict_name(quartic::x_rationality(preset))},
           {"invariantRank", minim.combined_rank},
           {"gMinimal", minim.g_minimal},
           {"galois",
            {{"eta", quartic::family_action_name(model.eta)},
             {"sigma", quartic::family_action_name(model.sigma)},
             {"tau", quartic::family_action_name(model.tau)}}}};
    j["quotient"] = quartic::verdict_name(quartic::quotient_verdict(group, preset));
    return j;
}

json table4_json() {
    json rows = json::array();
    for (int row = 1; row <= 11; ++row) {
        json cols = json::array();
        for (int col = 1; col <= 4; ++col) {
            auto cell = quartic::table4(row, col);
            switch (cell.kind) {
                case quartic::TableCell::Kind::Impossible:
                    cols.push_back({{"impossible", cell.impossible_reason}});
                    break;
                case quartic::TableCell::Kind::Quartic: {
                    auto preset = quartic::example_preset(cell.example);
                    std::string gname;
                    for (const auto& a : cell.group) {
                        if (!gname.empty()) gname += ",";
                        gname += quartic::aut_name(a);
                    }
                    cols.push_back(
                        {{"example", cell.example},
                         {"group", gname.empty() ? "trivial" : gname},
                         {"x", quartic::verdict_name(quartic::x_rationality(preset))},
                         {"quotient", quartic::verdict_name(
                                          quartic::quotient_verdict(cell.group, preset))}});
                    break;
                }
                case quartic::TableCell::Kind::Cubic: {
                    auto fixture = cubic::evaluate(cubic::example_params(cell.example));
                    cols.push_back({{"example", cell.example},
                                    {"group", row == 4 ? "C3" : "S3"},
                                    {"x", cubic::verdict3_name(fixture.x)},
                                    {"quotient", cubic::verdict3_name(
                                                     row == 4 ? fixture.c3 : fixture.s3)}});
                    break;
                }
            }
        }
        rows.push_back(cols);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quotient-rationality toolkit for degree-2 del Pezzo surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t cap = 3'000'000;
    app.add_option("--cap", cap, "element cap for group closures");
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    // lines
    auto* lines_cmd = app.add_subcommand("lines", "the 56 lines and their classes");
    bool lines_count = false;
    lines_cmd->add_flag("--count", lines_count, "print only the number of lines");

    // group
    auto* group_cmd = app.add_subcommand("group", "closure of a generated subgroup");
    std::string group_gens;
    bool group_order_only = false;
    group_cmd->add_option("--gens", group_gens, "generator list")->required();
    group_cmd->add_flag("--order", group_order_only, "print only the order");

    // invariant-rank
    auto* rank_cmd = app.add_subcommand("invariant-rank", "rank of the fixed sublattice");
    std::string rank_gens;
    rank_cmd->add_option("--gens", rank_gens, "generator list")->required();

    // centralizer
    auto* cent_cmd = app.add_subcommand("centralizer", "centralizer in the full Weyl group");
    std::string cent_of;
    cent_cmd->add_option("--of", cent_of, "generators of the centralized subgroup")->required();

    // conjugate
    auto* conj_cmd = app.add_subcommand("conjugate", "conjugacy witness search");
    std::string conj_g, conj_h;
    conj_cmd->add_option("--g", conj_g, "first element")->required();
    conj_cmd->add_option("--to", conj_h, "second element")->required();

    // minmodel
    auto* mm_cmd = app.add_subcommand("minmodel", "equivariant contraction search");
    std::string mm_gal;
    mm_cmd->add_option("--gal", mm_gal, "Galois image generators (empty = split)");

    // quotient
    auto* quot_cmd = app.add_subcommand("quotient", "quotient scenario ledgers");
    std::string scenario;
    quot_cmd->add_option("--scenario", scenario, "type0..type5, v4, psl2f7")->required();

    // iskovskikh
    auto* isk_cmd = app.add_subcommand("iskovskikh", "conic-bundle quotient pipeline");
    int isk_g0 = 1;
    bool isk_gb = false;
    std::string isk_base = "trivial", isk_fix;
    isk_cmd->add_option("--g0", isk_g0, "order of the fibrewise-trivial cyclic part");
    isk_cmd->add_flag("--gb", isk_gb, "a section-swapping involution is present");
    isk_cmd->add_option("--base", isk_base, "faithful base group: trivial|c2|c2xc2|other:N");
    isk_cmd->add_option("--fix", isk_fix,
                        "per base element: isolated|curve,fused|split joined by ';'");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "group taxonomy and Galois classification");
    std::string cls_group, cls_types, cls_gamma;
    bool cls_geiser = false, cls_scan = false;
    cls_cmd->add_option("--group", cls_group, "abstract type: trivial|C2|C3|C4|C2xC2|S3|D8|Q8");
    cls_cmd->add_option("--types", cls_types, "generator classes, e.g. 2,2 or 4+,4-");
    cls_cmd->add_flag("--geiser", cls_geiser, "the group contains the deck involution");
    cls_cmd->add_option("--gamma", cls_gamma, "test a Galois image for the type-4 criterion");
    cls_cmd->add_flag("--scan", cls_scan, "scan all subgroups of the order-216 centralizer");

    // family
    auto* fam_cmd = app.add_subcommand("family", "the two worked surface families");
    auto* fam_quartic = fam_cmd->add_subcommand("quartic", "A(x^4+y^4)+2Bx^2y^2+Cz^4=t^2");
    int fq_example = 1;
    std::string fq_group;
    bool fq_table = false;
    fam_quartic->add_option("--example", fq_example, "worked example 1..9");
    fam_quartic->add_option("--group", fq_group, "N|C4|C4g|C2xC2|D8|Q8|Q8g or words a3b,dg");
    fam_quartic->add_flag("--table4", fq_table, "emit the full verdict matrix");
    auto* fam_cubic = fam_cmd->add_subcommand("cubic", "(x^3+y^3)z+Ax^2y^2+2Bxyz^2+Cz^4=t^2");
    std::string fc_a = "1", fc_b = "0", fc_c = "1", fc_field = "w";
    int fc_example = 0;
    fam_cubic->add_option("--A", fc_a, "coefficient A");
    fam_cubic->add_option("--B", fc_b, "coefficient B");
    fam_cubic->add_option("--C", fc_c, "coefficient C");
    fam_cubic->add_option("--field", fc_field, "square classes, e.g. \"w,-13\"");
    fam_cubic->add_option("--example", fc_example, "worked example 15..18 (19 = corrected 18)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*lines_cmd) {
            if (lines_count) {
                std::cout << pic::lines().size() << "\n";
            } else if (as_json) {
                json j = json::array();
                for (const auto& l : pic::lines())
                    j.push_back({{"label", l.label.str()},
                                 {"class", pic::class_to_string(l.cls)}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& l : pic::lines())
                    std::cout << l.label.str() << "\t" << pic::class_to_string(l.cls) << "\n";
            }
        } else if (*group_cmd) {
            auto g = weyl::SubgroupClosure::generate(parse_gens(group_gens), cap);
            if (group_order_only) std::cout << g.order() << "\n";
            else std::cout << group_report(g).dump(2) << "\n";
        } else if (*rank_cmd) {
            std::vector<pic::Mat8> mats;
            for (const auto& g : parse_gens(rank_gens)) mats.push_back(g.matrix);
            json j{{"rank", weyl::invariant_rank(mats)}};
            json basis = json::array();
            for (const auto& v : weyl::fixed_space_basis(mats))
                basis.push_back(pic::class_to_string(v));
            j["basis"] = basis;
            if (as_json) std::cout << j.dump(2) << "\n";
            else {
                std::cout << "rank " << j["rank"] << "\n";
                for (const auto& b : basis) std::cout << "  " << b.get<std::string>() << "\n";
            }
        } else if (*cent_cmd) {
            auto sub = weyl::SubgroupClosure::generate(parse_gens(cent_of), cap);
            auto cent = weyl::centralizer(sub, full_weyl_group(cap));
            std::cout << group_report(cent).dump(2) << "\n";
        } else if (*conj_cmd) {
            auto g = parse_word(conj_g);
            auto h = parse_word(conj_h);
            auto w = weyl::conjugate_in(g, h, full_weyl_group(cap));
            json j{{"conjugate", w.has_value()}};
            if (w) {
                json imgs = json::array();
                for (int i = 0; i < 7; ++i)
                    imgs.push_back(pic::lines()[w->perm[i]].label.str());
                j["witnessEImages"] = imgs;
            }
            std::cout << j.dump(2) << "\n";
        } else if (*mm_cmd) {
            auto gal = weyl::SubgroupClosure::generate(
                mm_gal.empty() ? std::vector<weyl::Isometry>{} : parse_gens(mm_gal), cap);
            auto res = weyl::minimal_model_search(gal);
            json chain = json::array();
            for (const auto& step : res.chain) {
                json orbit = json::array();
                for (int l : step.orbit) orbit.push_back(pic::lines()[l].label.str());
                chain.push_back(orbit);
            }
            std::cout << json{{"maxK2", res.max_k2}, {"chain", chain}}.dump(2) << "\n";
        } else if (*quot_cmd) {
            auto s = quot::parse_scenario(scenario);
            if (!s) throw UsageError{"unknown scenario '" + scenario + "'"};
            auto ledger = quot::run_scenario(*s);
            if (as_json) std::cout << ledger_json(ledger).dump(2) << "\n";
            else {
                for (const auto& step : ledger.steps)
                    std::cout << step.detail << " -> K^2 = " << step.k2_after << "\n";
                std::cout << "result " << ledger.result << "\n";
            }
        } else if (*isk_cmd) {
            isk::IskAction a;
            a.g0_order = isk_g0;
            a.gb_nontrivial = isk_gb;
            if (isk_base == "trivial") a.base = isk::BaseGroup::Trivial;
            else if (isk_base == "c2") a.base = isk::BaseGroup::C2;
            else if (isk_base == "c2xc2") a.base = isk::BaseGroup::C2xC2;
            else if (isk_base.rfind("other:", 0) == 0) {
                a.base = isk::BaseGroup::Other;
                a.base_order_other = std::stoi(isk_base.substr(6));
            } else throw UsageError{"unknown base group '" + isk_base + "'"};
            if (!isk_fix.empty()) {
                std::istringstream in(isk_fix);
                std::string item;
                while (std::getline(in, item, ';')) {
                    auto comma = item.find(',');
                    if (comma == std::string::npos)
                        throw UsageError{"fix entries look like isolated,fused"};
                    std::string kind = item.substr(0, comma), orbit = item.substr(comma + 1);
                    isk::ElementFix f;
                    if (kind == "isolated") f.isolated_only = true;
                    else if (kind == "curve") f.isolated_only = false;
                    else throw UsageError{"fix kind must be isolated or curve"};
                    if (orbit == "fused") f.pair_fused = true;
                    else if (orbit == "split") f.pair_fused = false;
                    else throw UsageError{"fix orbit must be fused or split"};
                    a.fiber_fix.push_back(f);
                }
            }
            auto v = isk::full_pipeline(a);
            std::cout << json{{"model", v.str()}, {"k2Bound", v.k2_bound}}.dump(2) << "\n";
        } else if (*cls_cmd) {
            if (cls_scan) {
                auto cent = cls::standard_centralizer();
                auto scan = cls::classify_gamma_subgroups(cent);
                json reps = json::array();
                std::set<int> seen;
                for (size_t i = 0; i < scan.satisfying.size(); ++i)
                    if (seen.insert(scan.class_of[i]).second)
                        reps.push_back({{"order", scan.satisfying[i].size()},
                                        {"class", scan.class_of[i]}});
                std::cout << json{{"subgroupsScanned", scan.subgroups_scanned},
                                  {"satisfying", scan.satisfying.size()},
                                  {"conjugacyClasses", scan.class_count},
                                  {"classReps", reps}}
                                 .dump(2)
                          << "\n";
            } else if (!cls_gamma.empty()) {
                auto gal = weyl::SubgroupClosure::generate(parse_gens(cls_gamma), cap);
                bool ok = cls::gamma_classification_for_type4(gal);
                std::cout << json{{"satisfies", ok}, {"order", gal.order()}}.dump(2) << "\n";
            } else {
                auto type = cls::parse_abstract_type(cls_group);
                if (!type) throw UsageError{"unknown group type '" + cls_group + "'"};
                cls::GroupDescriptor d;
                d.type = *type;
                d.contains_geiser = cls_geiser;
                d.other_name = cls_group;
                if (!cls_types.empty()) {
                    std::istringstream in(cls_types);
                    std::string tok;
                    while (std::getline(in, tok, ',')) {
                        auto c = cls::parse_element_class(tok);
                        if (!c) throw UsageError{"unknown element class '" + tok + "'"};
                        d.generator_classes.push_back(*c);
                    }
                }
                auto v = cls::quotient_taxonomy(d);
                json j{{"kind", v.kind == cls::VerdictKind::AlwaysRational
                                    ? "always-rational"
                                    : "potentially-non-rational"},
                       {"citations", v.citations}};
                if (v.kind == cls::VerdictKind::PotentiallyNonRational)
                    j["caseIndex"] = v.case_index;
                std::cout << j.dump(2) << "\n";
            }
        } else if (*fam_quartic) {
            if (fq_table) std::cout << table4_json().dump(2) << "\n";
            else std::cout << quartic_report(fq_example, fq_group).dump(2) << "\n";
        } else if (*fam_cubic) {
            cubic::CubicParams p = fc_example
                                       ? cubic::example_params(fc_example)
                                       : cubic::CubicParams{parse_rational(fc_a),
                                                            parse_rational(fc_b),
                                                            parse_rational(fc_c),
                                                            [&] {
                                                                auto f =
                                                                    nf::SquareClassField::parse(
                                                                        fc_field);
                                                                if (!f)
                                                                    throw UsageError{
                                                                        "bad field descriptor"};
                                                                return *f;
                                                            }()};
            auto fixture = cubic::evaluate(p);
            std::cout << json{{"gamma", cubic::gamma_tag_name(fixture.gamma)},
                              {"xRational", cubic::verdict3_name(fixture.x)},
                              {"c3Quotient", cubic::verdict3_name(fixture.c3)},
                              {"s3Quotient", cubic::verdict3_name(fixture.s3)}}
                             .dump(2)
                      << "\n";
        } else if (*fam_cmd) {
            throw UsageError{"family needs a quartic or cubic subcommand"};
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const quartic::UnsupportedRegime& e) {
        std::cerr << "unsupported: " << e.message << "\n";
        return 1;
    } catch (const pic::ContractionError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 1;
    } catch (const weyl::CapExceeded& e) {
        std::cerr << "error: closure exceeded the cap of " << e.cap
                  << " elements; raise --cap\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
