#include "qhilb/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qhilb/appendix.hpp"
#include "qhilb/betti.hpp"
#include "qhilb/castelnuovo.hpp"
#include "qhilb/json_io.hpp"
#include "qhilb/ktheory.hpp"
#include "qhilb/moduli.hpp"
#include "qhilb/ncalgebra.hpp"
#include "qhilb/quiver.hpp"
#include "qhilb/series.hpp"

#ifndef QHILB_GOLDEN_PATH
#define QHILB_GOLDEN_PATH "data/appendix.golden"
#endif

namespace qhilb {

std::string default_golden_path() { return QHILB_GOLDEN_PATH; }

namespace {

using io::json;

// Raised for results that are well-formed but fail a check (exit code 1).
struct CheckFailure {
    json payload;
};

struct Globals {
    bool json_out = false;
    bool tsv = false;
    std::uint64_t seed = 42;
    std::string field = "q";
};

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "-" reads stdin, an argument starting with '{' or '[' is inline JSON,
// anything else is a file path.
json read_json_arg(const std::string& arg)
{
    std::string text;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        auto b = arg.find_first_not_of(" \t\n");
        text = (b != std::string::npos && (arg[b] == '{' || arg[b] == '[')) ? arg : read_text(arg);
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<long> parse_coeffs(const std::string& text)
{
    auto b = text.find_first_not_of(" \t");
    if (b != std::string::npos && text[b] == '[') return json::parse(text).get<std::vector<long>>();
    std::vector<long> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t pos = 0;
        v.push_back(std::stol(item, &pos));
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw std::invalid_argument("bad coefficient '" + item + "'");
    }
    return v;
}

// one TSV cell; embedded tabs and newlines are escaped
std::string cell(const json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out;
    for (char ch : s) {
        if (ch == '\n') out += "\\n";
        else if (ch == '\t') out += "\\t";
        else out += ch;
    }
    return out;
}

// TSV view: the first array of objects becomes a table; otherwise one
// key/value line per field.
void write_tsv(const json& j, std::ostream& out)
{
    auto table = [&](const json& arr) {
        if (arr.empty()) return;
        std::vector<std::string> keys;
        for (auto it = arr[0].begin(); it != arr[0].end(); ++it) keys.push_back(it.key());
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << keys[i];
        out << "\n";
        for (const auto& row : arr) {
            for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << (row.contains(keys[i]) ? cell(row[keys[i]]) : "");
            out << "\n";
        }
    };
    if (j.is_array() && !j.empty() && j[0].is_object()) return table(j);
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) return table(it.value());
        for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << "\t" << cell(it.value()) << "\n";
        return;
    }
    out << cell(j) << "\n";
}

template <class F>
typename F::Element parse_entry(const F& f, const std::string& s)
{
    return f.parse(s);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

io::AnyField field_of(const json& j, const Globals& g)
{
    if (j.contains("field")) return io::parse_field(j["field"].get<std::string>());
    return io::parse_field(g.field);
}

json castelnuovo_entry(const CastelnuovoPoly& s)
{
    json j = io::to_json(s);
    j["diagram"] = diagram(s);
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations for rank-one ideals over cubic AS-algebras", "qhilb"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "JSON output (default)");
    app.add_flag("--tsv", g.tsv, "tab-separated output");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--field", g.field, "coefficient field: q or fp:<p>")->capture_default_str();

    std::function<json()> action;
    int status = kExitOk;
    bool raw_text = false;  // action already wrote plain text

    // ---------------------------------------------------------------- castelnuovo
    auto* cas = app.add_subcommand("castelnuovo", "Castelnuovo polynomials")->require_subcommand(1);
    long ne = 0, no = 0;
    std::string coeffs;
    int order = 6;
    {
        auto* c = cas->add_subcommand("enumerate", "all polynomials of given weights");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->callback([&] {
            action = [&] {
                json list = json::array();
                for (const auto& s : enumerate(ne, no)) list.push_back(castelnuovo_entry(s));
                return json{{"ne", ne}, {"no", no}, {"in_N", in_N(ne, no)}, {"count", list.size()}, {"polynomials", list}};
            };
        });
        c = cas->add_subcommand("validate", "check the staircase-then-nonincreasing shape");
        c->add_option("coeffs", coeffs, "comma-separated s_0,s_1,...")->required();
        c->callback([&] {
            action = [&] {
                try {
                    return castelnuovo_entry(validate(parse_coeffs(coeffs)));
                } catch (const CastelnuovoError& e) {
                    throw CheckFailure{{{"valid", false}, {"index", e.index()}, {"message", e.what()}}};
                }
            };
        });
        c = cas->add_subcommand("hilbert", "Hilbert series of the ideal through degree T");
        c->add_option("coeffs", coeffs)->required();
        c->add_option("--order", order, "truncation order T")->required();
        c->callback([&] {
            action = [&] {
                auto s = validate(parse_coeffs(coeffs));
                return json{{"s", io::to_json(s)}, {"q", io::to_json(char_poly(s))}, {"h", io::to_json(to_hilbert(s, order))}};
            };
        });
        c = cas->add_subcommand("count", "number of polynomials of given weights");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->callback([&] { action = [&] { return json{{"ne", ne}, {"no", no}, {"count", count(ne, no)}}; }; });
        c = cas->add_subcommand("membership", "position of (n_e,n_o) relative to N");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->callback([&] {
            action = [&] {
                json j{{"ne", ne}, {"no", no}, {"in_N", in_N(ne, no)}};
                if (auto m = n_membership(ne, no)) {
                    j["k"] = m->k;
                    j["l"] = m->l;
                    j["case"] = m->which;
                }
                return j;
            };
        });
        c = cas->add_subcommand("partition", "distinct partition and chessboard weights");
        c->add_option("coeffs", coeffs)->required();
        c->callback([&] {
            action = [&] {
                auto lam = to_partition(validate(parse_coeffs(coeffs)));
                auto w = chess_weights(lam);
                return json{{"parts", lam.parts}, {"ne", w.ne}, {"no", w.no}};
            };
        });
    }
    long k = 0;
    int which = 1;
    {
        auto* c = cas->add_subcommand("extremal", "pure staircase with weights (k^2,k(k+1)) or ((k+1)^2,k(k+1))");
        c->add_option("--k", k)->required();
        c->add_option("--case", which)->check(CLI::IsMember({1, 2}))->required();
        c->callback([&] { action = [&] { return castelnuovo_entry(extremal_castelnuovo(k, which)); }; });
    }

    // ---------------------------------------------------------------- hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert series and characteristic polynomials")->require_subcommand(1);
    std::string poly;
    long n = 0;
    {
        auto* c = hil->add_subcommand("expand", "coefficients of q/((1-t)^2(1-t^2))");
        c->add_option("--q", poly, "polynomial, e.g. \"2t^2 - t^4\" or a JSON object")->required();
        c->add_option("--order", order)->required();
        c->callback([&] { action = [&] { return io::to_json(expand_over_hA(parse_poly(poly), order)); }; });
        c = hil->add_subcommand("gk", "GK-dimension and multiplicity");
        c->add_option("--q", poly)->required();
        c->callback([&] {
            action = [&] {
                auto r = gk_dim_and_multiplicity(parse_poly(poly));
                return json{{"gk", r.gk}, {"e", r.e.get_str()}};
            };
        });
        c = hil->add_subcommand("rank", "rank q(1)");
        c->add_option("--q", poly)->required();
        c->callback([&] { action = [&] { return json{{"rank", rank(parse_poly(poly)).get_str()}}; }; });
        c = hil->add_subcommand("coefficient", "dim A_n");
        c->add_option("--n", n)->required();
        c->callback([&] { action = [&] { return json{{"n", n}, {"dim", hA_coefficient(n).get_str()}}; }; });
    }

    // ---------------------------------------------------------------- ktheory
    auto* kt = app.add_subcommand("ktheory", "Grothendieck group arithmetic")->require_subcommand(1);
    std::string cls1, cls2, betti_arg;
    long long by = 0;
    long m_arg = 0, n_arg = 0;
    {
        auto* c = kt->add_subcommand("class", "class of a module from its resolution or series");
        auto* fr = c->add_option("--from-resolution", betti_arg, "Betti table JSON (file, inline or -)");
        auto* fq = c->add_option("--q", poly, "characteristic polynomial");
        fr->excludes(fq);
        c->callback([&] {
            action = [&] {
                LaurentPoly q;
                if (!betti_arg.empty()) q = char_poly(io::betti_from_json(read_json_arg(betti_arg)));
                else if (!poly.empty()) q = parse_poly(poly);
                else throw std::invalid_argument("class needs --from-resolution or --q");
                K0Class cls = class_from_char_poly(q);
                json j{{"class", io::to_json(cls)}, {"q", io::to_json(q)}};
                if (cls.r == 1) {
                    auto nrm = normalize(cls);
                    j["normalizing_shift"] = nrm.d;
                    if (auto inv = invariants(nrm.cls)) j["invariants"] = io::to_json(*inv);
                }
                return j;
            };
        });
        c = kt->add_subcommand("invariants", "normalize a rank-one class and read off (n_e,n_o)");
        c->add_option("class", cls1, "r,a,b,c")->required();
        c->callback([&] {
            action = [&] {
                auto cls = parse_class(cls1);
                auto nrm = normalize(cls);
                json j{{"class", io::to_json(cls)}, {"shift", nrm.d}, {"normalized", io::to_json(nrm.cls)}};
                auto inv = invariants(nrm.cls);
                if (!inv) throw std::logic_error("normalized class has no invariants");
                j["ne"] = inv->ne;
                j["no"] = inv->no;
                j["in_N"] = in_N(inv->ne, inv->no);
                return j;
            };
        });
        c = kt->add_subcommand("chi", "Euler form chi(x, y)");
        c->add_option("x", cls1)->required();
        c->add_option("y", cls2)->required();
        c->callback([&] { action = [&] { return json{{"chi", euler_chi(parse_class(cls1), parse_class(cls2))}}; }; });
        c = kt->add_subcommand("shift", "class of M(d)");
        c->add_option("class", cls1)->required();
        c->add_option("--by", by, "shift d")->required();
        c->callback([&] { action = [&] { return json{{"class", io::to_json(shift(parse_class(cls1), by))}, {"d", by}}; }; });
        c = kt->add_subcommand("matrices", "shift and Euler-form matrices in both bases");
        c->callback([&] {
            action = [&] {
                const auto& m = matrices();
                return json{{"sh_B", m.sh_B},   {"chi_B", m.chi_B},   {"sh_Bp", m.sh_Bp},
                            {"chi_Bp", m.chi_Bp}, {"base_change", base_change_B_to_Bp()}, {"consistent", check_base_change()}};
            };
        });
        c = kt->add_subcommand("cohomology", "h^1 of I(0), I(-1), I(-2), I(-3) and dim Ext^1");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->callback([&] {
            action = [&] {
                return json{{"h1", cohomology_dims(ne, no)}, {"ext1", ext1_selfdim(ne, no)},
                            {"class", io::to_json(normalized_class(ne, no))}};
            };
        });
        c = kt->add_subcommand("linear", "normalize the line bundle O(m,n)");
        c->add_option("--m", m_arg)->required();
        c->add_option("--n", n_arg)->required();
        c->callback([&] {
            action = [&] {
                auto r = linear_normalize({m_arg, n_arg});
                return json{{"d", r.d}, {"u", r.u}, {"ne", r.inv.ne}, {"no", r.inv.no},
                            {"class", io::to_json(linear_class({m_arg, n_arg}))}};
            };
        });
    }

    // ---------------------------------------------------------------- betti
    auto* bt = app.add_subcommand("betti", "Betti tables of length-one resolutions")->require_subcommand(1);
    std::optional<int> bound;
    {
        auto* c = bt->add_subcommand("enumerate", "all admissible tables for a characteristic polynomial");
        c->add_option("--q", poly)->required();
        c->add_option("--bound", bound, "largest degree allowed in the table");
        c->callback([&] {
            action = [&] {
                json list = json::array();
                for (const auto& t : enumerate_for(parse_poly(poly), bound)) {
                    json j = io::to_json(t);
                    j["resolution"] = resolution_string(t);
                    list.push_back(j);
                }
                return json{{"count", list.size()}, {"tables", list}};
            };
        });
        c = bt->add_subcommand("extremal", "minimal resolution on the boundary of N");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->callback([&] {
            action = [&] {
                auto t = extremal_resolution(ne, no);
                json j = io::to_json(t);
                j["resolution"] = resolution_string(t);
                return j;
            };
        });
        c = bt->add_subcommand("validate", "check the admissibility conditions");
        c->add_option("table", betti_arg, "Betti table JSON")->required();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(betti_arg);
                try {
                    auto t = io::betti_from_json(in);
                    json j = io::to_json(t);
                    j["resolution"] = resolution_string(t);
                    j["q"] = io::to_json(char_poly(t));
                    return j;
                } catch (const BettiError& e) {
                    throw CheckFailure{{{"valid", false}, {"l", e.l()}, {"message", e.what()}}};
                }
            };
        });
        c = bt->add_subcommand("ext1", "graded dim Ext^1(M,M) of the resolved module");
        c->add_option("table", betti_arg)->required();
        c->callback([&] {
            action = [&] {
                auto t = io::betti_from_json(read_json_arg(betti_arg));
                int top = t.a.rbegin()->first;
                if (!t.b.empty()) top = std::max(top, t.b.rbegin()->first);
                auto h = expand_over_hA(char_poly(t), top);
                return json{{"ext1", ext1_graded_dim(t, h).get_str()}};
            };
        });
    }

    // ---------------------------------------------------------------- quiver
    auto* qv = app.add_subcommand("quiver", "representations of the Beilinson quiver")->require_subcommand(1);
    std::string rep_arg, rep_arg2, algebra = "hc", form, points;
    std::uint64_t p_arg = 3;
    {
        auto* c = qv->add_subcommand("check", "do the relations hold");
        c->add_option("rep", rep_arg)->required();
        c->add_option("--algebra", algebra, "hc or typea:a,b,c")->capture_default_str();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(rep_arg);
                auto spec = parse_algebra(algebra);
                return std::visit(
                    [&](const auto& f) {
                        auto r = io::rep_from_json<std::decay_t<decltype(f)>, 4>(in, f);
                        return json{{"relations_hold", check_relations(r, spec)}, {"dims", r.dims}};
                    },
                    field_of(in, g));
            };
        });
        c = qv->add_subcommand("ind", "induce a three-vertex representation");
        c->add_option("rep", rep_arg)->required();
        c->add_option("--algebra", algebra)->capture_default_str();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(rep_arg);
                auto spec = parse_algebra(algebra);
                return std::visit(
                    [&](const auto& f) {
                        using F = std::decay_t<decltype(f)>;
                        QuiverRep0<F> r0 = in.at("dims").size() == 4 ? res(io::rep_from_json<F, 4>(in, f))
                                                                     : io::rep_from_json<F, 3>(in, f);
                        return io::to_json(ind(r0, spec));
                    },
                    field_of(in, g));
            };
        });
        c = qv->add_subcommand("res", "restrict to vertices -3, -2, -1");
        c->add_option("rep", rep_arg)->required();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(rep_arg);
                return std::visit(
                    [&](const auto& f) {
                        return io::to_json(res(io::rep_from_json<std::decay_t<decltype(f)>, 4>(in, f)));
                    },
                    field_of(in, g));
            };
        });
        c = qv->add_subcommand("membership", "C-membership (four vertices) or D-membership / rank condition (three)");
        c->add_option("rep", rep_arg)->required();
        c->add_option("--algebra", algebra)->capture_default_str();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(rep_arg);
                auto spec = parse_algebra(algebra);
                return std::visit(
                    [&](const auto& f) {
                        using F = std::decay_t<decltype(f)>;
                        json j;
                        if (in.at("dims").size() == 4) {
                            if (spec.kind != AlgebraSpec::Kind::Hc)
                                throw std::invalid_argument("C-membership is implemented for hc only");
                            j["C_member"] = membership_C_Hc(io::rep_from_json<F, 4>(in, f));
                        } else {
                            auto r0 = io::rep_from_json<F, 3>(in, f);
                            if (spec.kind == AlgebraSpec::Kind::Hc) {
                                j["D_member"] = membership_D_Hc(r0);
                                j["ind_dim0"] = ind(r0, spec).dims[3];
                            } else {
                                j["rank_condition"] = rank_condition_typeA(r0, spec);
                            }
                        }
                        return j;
                    },
                    field_of(in, g));
            };
        });
        c = qv->add_subcommand("stability", "theta = (-1,0,1) stability by exhaustive subspace scan over F_p");
        c->add_option("rep", rep_arg)->required();
        c->add_option("--p", p_arg, "prime (at most 5)")->capture_default_str();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(rep_arg);
                PrimeField f(p_arg);
                QuiverRep0<PrimeField> r0 = in.at("dims").size() == 4 ? res(io::rep_from_json<PrimeField, 4>(in, f))
                                                                      : io::rep_from_json<PrimeField, 3>(in, f);
                return json{{"stability", to_string(theta_stable_bruteforce(r0))}, {"p", p_arg}};
            };
        });
        c = qv->add_subcommand("hom", "dim Hom(F, G)");
        c->add_option("F", rep_arg)->required();
        c->add_option("G", rep_arg2)->required();
        c->callback([&] {
            action = [&] {
                json a = read_json_arg(rep_arg), b = read_json_arg(rep_arg2);
                return std::visit(
                    [&](const auto& f) {
                        using F = std::decay_t<decltype(f)>;
                        if (a.at("dims").size() != b.at("dims").size())
                            throw std::invalid_argument("representations of different quivers");
                        std::size_t h = a["dims"].size() == 4
                                            ? hom_dim(io::rep_from_json<F, 4>(a, f), io::rep_from_json<F, 4>(b, f))
                                            : hom_dim(io::rep_from_json<F, 3>(a, f), io::rep_from_json<F, 3>(b, f));
                        return json{{"hom", h}};
                    },
                    field_of(a, g));
            };
        });
        auto* build = qv->add_subcommand("build", "point, line and conic representations")->require_subcommand(1);
        auto* bl = build->add_subcommand("line", "A/Au for a linear form u");
        bl->add_option("--form", form, "coefficients of x,y")->required();
        bl->add_option("--algebra", algebra)->capture_default_str();
        auto* bc = build->add_subcommand("conic", "A/Aw for a quadratic form w");
        bc->add_option("--form", form, "coefficients of xx,xy,yx,yy")->required();
        bc->add_option("--algebra", algebra)->capture_default_str();
        auto* bp = build->add_subcommand("point", "point representation from four points a:b");
        bp->add_option("--points", points, "a:b,a:b,a:b,a:b for vertices -3..0")->required();
        auto build_form = [&](bool line) {
            action = [&, line] {
                auto spec = parse_algebra(algebra);
                return std::visit(
                    [&](const auto& f) {
                        std::vector<typename std::decay_t<decltype(f)>::Element> w;
                        for (const auto& s : split(form, ',')) w.push_back(parse_entry(f, s));
                        return io::to_json(line ? line_rep(w, spec, f) : conic_rep(w, spec, f));
                    },
                    io::parse_field(g.field));
            };
        };
        bl->callback([&] { build_form(true); });
        bc->callback([&] { build_form(false); });
        bp->callback([&] {
            action = [&] {
                return std::visit(
                    [&](const auto& f) {
                        using F = std::decay_t<decltype(f)>;
                        auto items = split(points, ',');
                        if (items.size() != 4) throw std::invalid_argument("point needs four a:b pairs");
                        std::array<std::pair<typename F::Element, typename F::Element>, 4> orbit;
                        for (int i = 0; i < 4; ++i) {
                            auto ab = split(items[i], ':');
                            if (ab.size() != 2) throw std::invalid_argument("points are written a:b");
                            orbit[i] = {parse_entry(f, ab[0]), parse_entry(f, ab[1])};
                        }
                        return io::to_json(point_rep(orbit, f));
                    },
                    io::parse_field(g.field));
            };
        });
    }

    // ---------------------------------------------------------------- moduli
    auto* md = app.add_subcommand("moduli", "matrix varieties D(n_e,n_o)")->require_subcommand(1);
    long budget = 100000;
    std::size_t max_points = 16;
    bool serial = false;
    std::string point_arg;
    {
        auto* c = md->add_subcommand("search", "random search for members over F_p");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->add_option("--p", p_arg)->required();
        c->add_option("--budget", budget)->capture_default_str();
        c->add_option("--max-points", max_points)->capture_default_str();
        c->callback([&] {
            action = [&] {
                PrimeField f(p_arg);
                json list = json::array();
                for (const auto& pt : search(ne, no, f, budget, g.seed, max_points)) list.push_back(io::to_json(pt));
                return json{{"ne", ne}, {"no", no}, {"p", p_arg}, {"seed", g.seed}, {"budget", budget}, {"points", list}};
            };
        });
        c = md->add_subcommand("tangent", "Zariski tangent dimension at a member");
        c->add_option("point", point_arg)->required();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(point_arg);
                return std::visit(
                    [&](const auto& f) {
                        auto pt = io::point_from_json(in, f);
                        return json{{"tangent", tangent_dim(pt)},
                                    {"expected", expected_tangent_dim((long)pt.ne, (long)pt.no)}};
                    },
                    field_of(in, g));
            };
        });
        c = md->add_subcommand("check", "membership of a point");
        c->add_option("point", point_arg)->required();
        c->callback([&] {
            action = [&] {
                json in = read_json_arg(point_arg);
                return std::visit(
                    [&](const auto& f) { return json{{"member", membership(io::point_from_json(in, f))}}; },
                    field_of(in, g));
            };
        });
        c = md->add_subcommand("count", "exact number of members over F_p by enumeration");
        c->add_option("--ne", ne)->required();
        c->add_option("--no", no)->required();
        c->add_option("--p", p_arg)->required();
        c->add_flag("--serial", serial, "use the single-threaded reference");
        c->callback([&] {
            action = [&] {
                std::uint64_t cnt = serial ? count_exhaustive_serial(ne, no, p_arg) : count_exhaustive(ne, no, p_arg);
                return json{{"ne", ne}, {"no", no}, {"p", p_arg}, {"count", cnt}};
            };
        });
    }

    // ---------------------------------------------------------------- appendix
    auto* ap = app.add_subcommand("appendix", "regenerate the table of small Hilbert series");
    bool check = false, text = false;
    std::string golden = default_golden_path();
    ap->add_flag("--check", check, "compare with the reference table");
    ap->add_flag("--text", text, "print the table in reference format");
    ap->add_option("--golden", golden, "reference table path")->capture_default_str();
    ap->callback([&] {
        action = [&] {
            auto rows = appendix_regenerate();
            std::string rendered = render_appendix(rows);
            if (check) {
                auto res = check_appendix(read_text(golden), rendered);
                if (!res.ok) {
                    err << res.diff;
                    throw CheckFailure{{{"ok", false}, {"golden", golden}}};
                }
                return json{{"ok", true}, {"rows", rows.size()}, {"golden", golden}};
            }
            if (text) {
                out << rendered;
                raw_text = true;
                return json();
            }
            json list = json::array();
            for (const auto& r : rows) {
                json res = json::array();
                for (const auto& t : r.tables) res.push_back(resolution_string(t));
                std::vector<std::string> h;
                for (const auto& v : r.h) h.push_back(v.get_str());
                list.push_back({{"ne", r.inv.ne}, {"no", r.inv.no}, {"s", to_string(r.s)}, {"h", h},
                                {"ext1", r.ext1}, {"resolutions", res}});
            }
            return list;
        };
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return kExitUsage;
    }
    if (g.json_out && g.tsv) {
        err << json{{"error", "--json and --tsv are exclusive"}, {"kind", "usage"}}.dump() << "\n";
        return kExitUsage;
    }
    auto emit = [&](const json& j) {
        if (g.tsv) write_tsv(j, out);
        else out << j.dump(2) << "\n";
    };
    try {
        json result = action();
        if (!raw_text) emit(result);
    } catch (const CheckFailure& f) {
        emit(f.payload);
        status = kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << "\n";
        status = kExitUsage;
    } catch (const json::exception& e) {
        err << json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << "\n";
        status = kExitUsage;
    } catch (const std::out_of_range& e) {
        err << json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << "\n";
        status = kExitUsage;
    } catch (const std::domain_error& e) {
        err << json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << "\n";
        status = kExitUsage;
    } catch (const std::exception& e) {
        err << json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        status = kExitCheckFailed;
    }
    return status;
}

} // namespace qhilb
