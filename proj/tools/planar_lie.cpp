// planar-lie: exact toolkit for finite-dimensional Lie algebras of planar
// vector fields with rational-function coefficients.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "planarlie/classify.hpp"
#include "planarlie/ratpower.hpp"
#include "planarlie/textio.hpp"

using json = nlohmann::ordered_json;
using namespace planarlie;

namespace {

Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

std::vector<long> parse_int_list(const std::string& s) {
    std::vector<long> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        if (!piece.empty()) out.push_back(std::stol(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json params_json(const CatalogType& t) {
    json p = json::object();
    std::visit(
        [&](const auto& v) {
            using P = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<P, T1> || std::is_same_v<P, T2> || std::is_same_v<P, T6>) {
                p["n"] = v.n;
            } else if constexpr (std::is_same_v<P, T3>) {
                p["n"] = v.n;
                p["lambda"] = v.lambda;
            } else if constexpr (std::is_same_v<P, T4> || std::is_same_v<P, T7>) {
                p["n"] = v.n;
                p["beta"] = rat_str(v.beta);
                p["m"] = v.m;
            } else if constexpr (std::is_same_v<P, T5>) {
                p["n"] = v.n;
                p["beta"] = rat_str(v.beta);
                p["gamma"] = rat_str(v.gamma);
            } else if constexpr (std::is_same_v<P, T8>) {
                p["n"] = v.n;
                p["alpha"] = rat_str(v.alpha);
                p["beta"] = rat_str(v.beta);
            } else if constexpr (std::is_same_v<P, T9>) {
                p["variant"] = v.two_copies ? "sl2+sl2" : "sl2";
            } else if constexpr (std::is_same_v<P, T11> || std::is_same_v<P, T12>) {
                p["m"] = v.m;
            }
        },
        t);
    return p;
}

std::string params_text(const CatalogType& t) {
    json p = params_json(t);
    std::string out;
    for (auto& [k, v] : p.items()) {
        out += " " + k + "=";
        if (v.is_string()) out += v.get<std::string>();
        else if (v.is_array()) {
            out += "[";
            bool first = true;
            for (auto& x : v) {
                if (!first) out += ",";
                out += std::to_string(x.get<long>());
                first = false;
            }
            out += "]";
        } else
            out += std::to_string(v.get<long>());
    }
    return out;
}

json sc_json_of(int dim, const std::vector<std::string>& basis,
                const std::function<const QVec&(int, int)>& sc) {
    json j;
    j["dim"] = dim;
    j["basis"] = basis;
    json entries = json::array();
    for (int i = 0; i < dim; ++i)
        for (int jj = i + 1; jj < dim; ++jj)
            for (int k = 0; k < dim; ++k) {
                const Rat& c = sc(i, jj)[static_cast<std::size_t>(k)];
                if (c != 0) entries.push_back(json::array({i, jj, k, rat_str(c)}));
            }
    j["sc"] = entries;
    return j;
}

json algebra_sc_json(const LieAlgebra& L) {
    std::vector<std::string> basis;
    for (const auto& b : L.basis()) basis.push_back(derivation_str(b));
    return sc_json_of(L.dim(), basis, [&](int i, int j) -> const QVec& { return L.sc(i, j); });
}

void print_subspace(const LieAlgebra& L, const Subspace& s) {
    std::cout << "dim " << s.dim() << "\n";
    for (const auto& v : s.basis()) std::cout << derivation_str(L.element(v)) << "\n";
}

CatalogType catalog_from_flags(const std::string& type, int n, int lambda, const std::string& beta,
                               const std::string& gamma, const std::string& alpha,
                               const std::string& mlist, int m, const std::string& variant) {
    if (type == "T1") return T1{n};
    if (type == "T2") return T2{n};
    if (type == "T3") return T3{n, lambda};
    if (type == "T4") return T4{n, parse_rat(beta), parse_int_list(mlist)};
    if (type == "T5") return T5{n, parse_rat(beta), parse_rat(gamma)};
    if (type == "T6") return T6{n};
    if (type == "T7") return T7{n, parse_rat(beta), parse_int_list(mlist)};
    if (type == "T8") return T8{n, parse_rat(alpha), parse_rat(beta)};
    if (type == "T9") return T9{variant == "sl2sl2" || variant == "sl2+sl2"};
    if (type == "T10") return T10{};
    if (type == "T11") return T11{m};
    if (type == "T12") return T12{m};
    throw BadParameters("unknown catalog type " + type);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie algebras of planar vector fields over Q(x, y)"};
    app.require_subcommand(1);

    std::string arg1, arg2, kind = "derived";
    int cap = LieAlgebra::kDefaultCap;
    bool as_json = false, do_verify = false;
    std::string ctype, cbeta = "1", cgamma = "0", calpha = "0", cm, cvariant = "sl2";
    int cn = 1, clambda = 0, cmod = 0;

    auto add_common = [&](CLI::App* sub, bool with_cap) {
        sub->add_flag("--json", as_json, "emit JSON");
        if (with_cap) sub->add_option("--cap", cap, "closure dimension cap");
    };

    CLI::App* sub_bracket = app.add_subcommand("bracket", "Lie bracket of two vector fields");
    sub_bracket->add_option("D", arg1)->required();
    sub_bracket->add_option("E", arg2)->required();
    add_common(sub_bracket, false);

    CLI::App* sub_apply = app.add_subcommand("apply", "apply a vector field to a function");
    sub_apply->add_option("D", arg1)->required();
    sub_apply->add_option("f", arg2)->required();
    add_common(sub_apply, false);

    CLI::App* sub_closure = app.add_subcommand("closure", "bracket closure of generators");
    sub_closure->add_option("gens", arg1)->required();
    add_common(sub_closure, true);

    CLI::App* sub_classify = app.add_subcommand("classify", "catalog type of the closed span");
    sub_classify->add_option("gens", arg1)->required();
    add_common(sub_classify, true);

    CLI::App* sub_series = app.add_subcommand("series", "derived or lower central series");
    sub_series->add_option("gens", arg1)->required();
    sub_series->add_option("--kind", kind, "derived | lower-central");
    add_common(sub_series, true);

    CLI::App* sub_killing = app.add_subcommand("killing", "Killing form matrix");
    sub_killing->add_option("gens", arg1)->required();
    add_common(sub_killing, true);

    CLI::App* sub_radical = app.add_subcommand("radical", "solvable radical");
    sub_radical->add_option("gens", arg1)->required();
    add_common(sub_radical, true);

    CLI::App* sub_ideals = app.add_subcommand("ideals", "one-dimensional ideals");
    sub_ideals->add_option("gens", arg1)->required();
    add_common(sub_ideals, true);

    CLI::App* sub_rmul = app.add_subcommand("rmul", "rational-multiple ideal of D1");
    sub_rmul->add_option("gens", arg1)->required();
    sub_rmul->add_option("D1", arg2)->required();
    add_common(sub_rmul, true);

    CLI::App* sub_catalog = app.add_subcommand("catalog", "catalog realizations and tables");
    sub_catalog->add_option("--type", ctype, "T1..T12")->required();
    sub_catalog->add_option("--n", cn);
    sub_catalog->add_option("--lambda", clambda);
    sub_catalog->add_option("--beta", cbeta);
    sub_catalog->add_option("--gamma", cgamma);
    sub_catalog->add_option("--alpha", calpha);
    sub_catalog->add_option("--m-list", cm, "comma-separated integers for T4/T7");
    sub_catalog->add_option("--m", cmod, "module parameter for T11/T12");
    sub_catalog->add_option("--variant", cvariant, "sl2 | sl2sl2 for T9");
    sub_catalog->add_flag("--verify", do_verify, "check the realization against the table");
    add_common(sub_catalog, false);

    CLI::App* sub_dec = app.add_subcommand("ratlemma-decompose", "power decomposition of (phi, psi)");
    sub_dec->add_option("phi", arg1)->required();
    sub_dec->add_option("psi", arg2)->required();
    add_common(sub_dec, false);

    CLI::App* sub_obs = app.add_subcommand("ratlemma-obstruct", "logarithmic-derivative witness");
    sub_obs->add_option("phi", arg1)->required();
    add_common(sub_obs, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (*sub_bracket) {
            Derivation d = bracket(parse_derivation(arg1), parse_derivation(arg2));
            if (as_json) std::cout << json{{"result", derivation_str(d)}}.dump() << "\n";
            else std::cout << derivation_str(d) << "\n";
        } else if (*sub_apply) {
            RatFunc f = apply(parse_derivation(arg1), parse_ratfunc(arg2));
            if (as_json) std::cout << json{{"result", ratfunc_str(f)}}.dump() << "\n";
            else std::cout << ratfunc_str(f) << "\n";
        } else if (*sub_closure) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            if (as_json) {
                std::cout << algebra_sc_json(L).dump() << "\n";
            } else {
                std::cout << "dim " << L.dim() << "\n";
                for (const auto& b : L.basis()) std::cout << derivation_str(b) << "\n";
            }
        } else if (*sub_classify) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            Classification c = classify(L);
            if (as_json) {
                json j;
                j["type"] = type_name(c.type);
                j["params"] = params_json(c.type);
                json w = json::object();
                for (std::size_t i = 0; i < c.names.size(); ++i)
                    w[c.names[i]] = derivation_str(L.element(c.witness[i]));
                j["witnesses"] = w;
                j["adjustment"] = "witness basis reproduces the abstract table exactly";
                std::cout << j.dump() << "\n";
            } else {
                std::cout << type_name(c.type) << params_text(c.type) << "\n";
            }
        } else if (*sub_series) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            LieAlgebra::SeriesKind k = kind == "lower-central"
                                           ? LieAlgebra::SeriesKind::LowerCentral
                                           : LieAlgebra::SeriesKind::Derived;
            for (const auto& s : L.series(k)) {
                std::cout << "dim " << s.dim() << ":";
                for (const auto& v : s.basis()) std::cout << " " << derivation_str(L.element(v)) << ";";
                std::cout << "\n";
            }
        } else if (*sub_killing) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            QMatrix k = L.killing_form();
            if (as_json) {
                json rows = json::array();
                for (int i = 0; i < k.rows(); ++i) {
                    json row = json::array();
                    for (int j = 0; j < k.cols(); ++j) row.push_back(rat_str(k.at(i, j)));
                    rows.push_back(row);
                }
                std::cout << rows.dump() << "\n";
            } else {
                for (int i = 0; i < k.rows(); ++i) {
                    for (int j = 0; j < k.cols(); ++j)
                        std::cout << (j ? " " : "") << rat_str(k.at(i, j));
                    std::cout << "\n";
                }
            }
        } else if (*sub_radical) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            print_subspace(L, L.radical());
        } else if (*sub_ideals) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            auto il = L.one_dim_ideals();
            if (il.any_nonsplit && il.lines.empty())
                throw NonRationalSpectrum("no rational one-dimensional ideal; the adjoint spectrum does not split over Q");
            if (il.all_lines) std::cout << "all lines are ideals (abelian)\n";
            if (il.any_nonsplit) std::cout << "note: nonrational adjoint spectrum; rational lines only\n";
            std::cout << "count " << il.lines.size() << "\n";
            for (const auto& line : il.lines)
                std::cout << derivation_str(L.element(line.basis()[0])) << "\n";
        } else if (*sub_rmul) {
            LieAlgebra L = LieAlgebra::close(parse_generators(arg1), cap);
            print_subspace(L, L.r_multiple_ideal(parse_derivation(arg2)));
        } else if (*sub_catalog) {
            CatalogType t = catalog_from_flags(ctype, cn, clambda, cbeta, cgamma, calpha, cm,
                                               cmod, cvariant);
            if (do_verify) {
                VerifyReport rep = verify_realization(t);
                if (!rep.matched) {
                    std::cerr << "NoMatchWithinFamily: " << rep.note << "\n";
                    std::cerr << "abstract:  " << sc_json_of(rep.abstract_sc.dim, rep.abstract_sc.names,
                                                             [&](int i, int j) -> const QVec& {
                                                                 return rep.abstract_sc.at(i, j);
                                                             }).dump()
                              << "\n";
                    std::cerr << "realized:  " << sc_json_of(rep.realized_sc.dim, rep.realized_sc.names,
                                                             [&](int i, int j) -> const QVec& {
                                                                 return rep.realized_sc.at(i, j);
                                                             }).dump()
                              << "\n";
                    return 2;
                }
                if (as_json) {
                    json j;
                    j["type"] = type_name(t);
                    j["matched"] = true;
                    json sc = json::object();
                    for (std::size_t i = 0; i < rep.scaling.size(); ++i)
                        sc[rep.abstract_sc.names[i]] = rat_str(rep.scaling[i]);
                    j["adjustment"] = sc;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "matched\n";
                    for (std::size_t i = 0; i < rep.scaling.size(); ++i)
                        std::cout << rep.abstract_sc.names[i] << " *= " << rat_str(rep.scaling[i])
                                  << "\n";
                }
            } else if (as_json) {
                SCTable table = abstract_table(t);
                std::cout << sc_json_of(table.dim, table.names,
                                        [&](int i, int j) -> const QVec& { return table.at(i, j); })
                                 .dump()
                          << "\n";
            } else {
                for (const auto& d : realize(t)) std::cout << derivation_str(d) << "\n";
            }
        } else if (*sub_dec) {
            DecomposeResult d = power_decompose(parse_ratfunc_t(arg1), parse_ratfunc_t(arg2));
            if (as_json) {
                json j;
                j["theta"] = ratfunc_str_t(d.theta);
                j["s"] = d.s;
                j["t"] = d.t;
                j["c1"] = rat_str(d.c1);
                j["c2"] = rat_str(d.c2);
                j["mu"] = rat_str(d.mu);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "theta = " << ratfunc_str_t(d.theta) << "\n"
                          << "s = " << d.s << "\n"
                          << "t = " << d.t << "\n"
                          << "c1 = " << rat_str(d.c1) << "\n"
                          << "c2 = " << rat_str(d.c2) << "\n"
                          << "mu = " << rat_str(d.mu) << "\n";
            }
        } else if (*sub_obs) {
            auto [p, o] = log_derivative_obstruction(parse_ratfunc_t(arg1));
            if (as_json) {
                std::cout << json{{"p", poly_str_t(p)}, {"ord", o}}.dump() << "\n";
            } else {
                std::cout << "p = " << poly_str_t(p) << "\n"
                          << "ord = " << o << "\n";
            }
        }
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << e.name() << "\n";
        return 2;
    }
    return 0;
}
