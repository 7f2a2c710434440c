#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "waring/apolarity.hpp"
#include "waring/bivargcd.hpp"
#include "waring/binaryforms.hpp"
#include "waring/frontend.hpp"
#include "waring/monomials.hpp"
#include "waring/oracle.hpp"
#include "waring/planecubics.hpp"
#include "waring/plot.hpp"
#include "waring/quadrics.hpp"
#include "waring/splitforms.hpp"

using namespace waring;

namespace {

// exit codes: 0 exact/certified, 2 numeric or non-certified, 1 error
constexpr int kExact = 0;
constexpr int kNumeric = 2;
constexpr int kError = 1;

struct Common {
    std::string expr;
    std::string vars_csv;
    std::string format = "text";
    double tol = 1e-9;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("expr", c.expr, "polynomial expression")->required();
    cmd->add_option("--vars", c.vars_csv, "comma-separated variable order");
    cmd->add_option("--format", c.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tol", c.tol, "numeric tolerance");
    cmd->add_option("--seed", c.seed, "RNG seed for randomized choices");
}

ParsedPoly parse_input(const Common& c) {
    std::optional<std::vector<std::string>> vars;
    if (!c.vars_csv.empty()) {
        std::vector<std::string> v;
        std::string cur;
        for (char ch : c.vars_csv) {
            if (ch == ',') {
                v.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        if (!cur.empty()) v.push_back(cur);
        vars = v;
    }
    ParsedPoly pp = parse_poly(c.expr, vars);
    require_homogeneous_input(pp.poly, pp.vars);
    return pp;
}

/// Decomposition router used by the `decompose` subcommand.
std::pair<Decomposition, bool> decompose_any(const Poly& F,
                                             const std::vector<ProjPoint>& through,
                                             std::uint64_t seed, double tol) {
    EssentialVariables ev = essential_variables(F);
    const Poly& G = ev.restricted;
    int d = G.degree();
    auto lift = [&](const Decomposition& dec) { return lift_decomposition(dec, ev); };
    auto reduce_point = [&](const ProjPoint& P) {
        if (!P.exact)
            throw std::invalid_argument("prescribed points must be exact");
        VectorXq w = ev.change.transpose() * P.q;
        for (int i = ev.count; i < F.nvars(); ++i)
            if (!w[i].is_zero())
                throw ForbiddenPointError(
                    P, "essential-variable reduction",
                    "prescribed point " + P.to_string() +
                        " lies outside the essential subspace and is forbidden");
        VectorXq sub(ev.count);
        for (int i = 0; i < ev.count; ++i) sub[i] = w[i];
        return ProjPoint::from_exact(std::move(sub));
    };

    if (ev.count == 1 || d == 1) {
        RankResult r = waring_rank(F);
        return {*r.witness, true};
    }
    if (d == 2) {
        if (!through.empty())
            throw std::invalid_argument("prescribed points are not supported for quadrics");
        return {lift(quadric_decompose(G)), true};
    }
    if (G.term_count() == 1) {
        ProjPoint P = through.empty() ? all_ones_point(ev.count) : reduce_point(through[0]);
        if (through.size() > 1)
            throw std::invalid_argument("monomials take a single prescribed point");
        auto [pts, dec] = monomial_decompose_through_point(G, P, tol);
        return {lift(dec), dec.exact};
    }
    if (ev.count == 2) {
        if (!through.empty()) {
            std::vector<ProjPoint> reduced;
            for (const auto& p : through) reduced.push_back(reduce_point(p));
            Decomposition dec = binary_decompose_greedy(G, reduced, seed, tol);
            return {lift(dec), dec.exact};
        }
        auto [pts, dec] = binary_decompose(G, seed, tol);
        return {lift(dec), dec.exact};
    }
    SplitDecomposition sd = split_detect(G);
    if (sd.blocks.size() >= 2) {
        if (!through.empty())
            throw std::invalid_argument(
                "prescribed points for split forms are not supported here; decompose "
                "the owning block instead");
        // concatenate block decompositions, embedded into the ambient variables
        Decomposition out;
        out.degree = d;
        out.exact = true;
        std::vector<Decomposition> parts;
        for (const auto& blk : sd.blocks) {
            auto [dec, cert] = decompose_any(blk.form, {}, seed, tol);
            parts.push_back(dec);
            out.exact = out.exact && dec.exact;
        }
        for (std::size_t b = 0; b < sd.blocks.size(); ++b) {
            const auto& blk = sd.blocks[b];
            if (out.exact) {
                for (const auto& t : parts[b].terms) {
                    VectorXq L(ev.count);
                    for (int i = 0; i < ev.count; ++i) L[i] = GaussRat(0);
                    for (std::size_t i = 0; i < blk.vars.size(); ++i)
                        L[blk.vars[i]] = t.L[static_cast<int>(i)];
                    out.terms.push_back({t.c, std::move(L)});
                }
            } else {
                auto embed_num = [&](std::complex<double> c, const Eigen::VectorXcd& L) {
                    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(ev.count);
                    for (std::size_t i = 0; i < blk.vars.size(); ++i)
                        full[blk.vars[i]] = L[static_cast<int>(i)];
                    out.num_terms.push_back({c, std::move(full)});
                };
                if (parts[b].exact) {
                    for (const auto& t : parts[b].terms) {
                        Eigen::VectorXcd L(t.L.size());
                        for (int i = 0; i < t.L.size(); ++i) L[i] = to_complex(t.L[i]);
                        embed_num(to_complex(t.c), L);
                    }
                } else {
                    for (const auto& t : parts[b].num_terms) embed_num(t.c, t.L);
                }
            }
        }
        double res = 0;
        if (!out.exact) {
            CPoly diff = out.reconstruct_numeric(ev.count) - poly_to<std::complex<double>>(G);
            res = coeff_norm(diff) / std::max(1.0, coeff_norm(poly_to<std::complex<double>>(G)));
        }
        out.residual = res;
        return {lift(out), out.exact};
    }
    // plane cubics and unsupported families: numeric oracle witness
    RankResult r = waring_rank(F);
    FitConfig cfg;
    cfg.seed = seed;
    FitResult fit = oracle_fit(G, r.rank, cfg);
    Decomposition dec = fit.decomposition;
    return {dec, false};
}

int emit_rank(const Common& c) {
    ParsedPoly pp = parse_input(c);
    RankResult r = waring_rank(pp.poly);
    if (c.format == "json") {
        std::cout << rank_to_json(r, pp.vars) << "\n";
    } else {
        std::cout << "rank " << r.rank << "  method " << rank_method_name(r.method)
                  << (r.certified ? "  (certified exact)" : "  (not certified)")
                  << "  lower bound " << r.lower_bound << "\n";
        if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
        if (r.witness) {
            std::cout << "witness:\n";
            for (const auto& t : r.witness->terms)
                std::cout << "  " << to_string(t.c) << " * ("
                          << print_poly(Poly::linear_form(t.L), pp.vars) << ")^"
                          << r.witness->degree << "\n";
        }
    }
    return r.certified ? kExact : kNumeric;
}

int emit_apolar(const Common& c, std::vector<int> degrees) {
    ParsedPoly pp = parse_input(c);
    int d = pp.poly.degree();
    if (degrees.empty())
        for (int k = 1; k <= d; ++k) degrees.push_back(k);
    auto duals = dual_var_names(pp.vars);
    bool json = c.format == "json";
    if (json) std::cout << "{\n";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        int k = degrees[i];
        ApolarSlice s = apolar_slice(pp.poly, k);
        if (json) {
            std::cout << "  \"" << k << "\": [";
            for (std::size_t j = 0; j < s.basis.size(); ++j)
                std::cout << (j ? ", " : "") << "\"" << print_poly(s.basis[j], duals) << "\"";
            std::cout << "]" << (i + 1 < degrees.size() ? "," : "") << "\n";
        } else {
            std::cout << "(F^perp)_" << k << ": dim " << s.dim() << "\n";
            for (const auto& b : s.basis) std::cout << "  " << print_poly(b, duals) << "\n";
        }
    }
    if (json) std::cout << "}\n";
    return kExact;
}

int emit_decompose(const Common& c, const std::vector<std::string>& through_str) {
    ParsedPoly pp = parse_input(c);
    std::vector<ProjPoint> through;
    for (const auto& s : through_str) through.push_back(parse_point(s));
    auto [dec, exact] = decompose_any(pp.poly, through, c.seed, c.tol);
    if (c.format == "json") {
        std::cout << decomposition_to_json(dec, pp.vars) << "\n";
    } else {
        std::cout << (dec.exact ? "exact decomposition" : "numeric decomposition") << " with "
                  << dec.size() << " terms";
        if (!dec.exact) std::cout << ", residual " << dec.residual;
        std::cout << ":\n";
        if (dec.exact) {
            for (const auto& t : dec.terms)
                std::cout << "  " << to_string(t.c) << " * ("
                          << print_poly(Poly::linear_form(t.L), pp.vars) << ")^" << dec.degree
                          << "\n";
        } else {
            for (const auto& t : dec.num_terms) {
                std::cout << "  (" << t.c.real() << (t.c.imag() < 0 ? "" : "+") << t.c.imag()
                          << "i) * (";
                for (int i = 0; i < t.L.size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << t.L[i].real() << (t.L[i].imag() < 0 ? "" : "+")
                              << t.L[i].imag() << "i";
                }
                std::cout << ")^" << dec.degree << "\n";
            }
        }
    }
    return exact ? kExact : kNumeric;
}

void print_locus_text(const LocusDescription& l, const std::vector<std::string>& duals,
                      int indent = 0) {
    std::string pad(indent, ' ');
    std::cout << pad << (l.which == LocusDescription::Which::Waring ? "Waring locus"
                                                                    : "forbidden locus")
              << " [" << locus_kind_name(l.kind) << "]"
              << (l.certified ? "" : " (not certified)") << "\n";
    for (const auto& e : l.equations)
        std::cout << pad << "  V( " << print_poly(e, duals) << " )\n";
    for (const auto& p : l.points) std::cout << pad << "  " << p.to_string() << "\n";
    for (const auto& ln : l.lines)
        std::cout << pad << "  line through " << ln[0].to_string() << " and "
                  << ln[1].to_string() << "\n";
    if (!l.note.empty()) std::cout << pad << "  note: " << l.note << "\n";
    for (const auto& comp : l.components) {
        std::cout << pad << "  component on variables {";
        for (std::size_t i = 0; i < comp.block_variables.size(); ++i)
            std::cout << (i ? "," : "") << comp.block_variables[i];
        std::cout << "}:\n";
        print_locus_text(comp, duals, indent + 4);
    }
}

int emit_locus(const Common& c, const std::string& point_str, bool equation_only,
               bool enumerate) {
    ParsedPoly pp = parse_input(c);
    auto duals = dual_var_names(pp.vars);
    if (!point_str.empty()) {
        ProjPoint P = parse_point(point_str);
        Membership m = waring_membership(pp.poly, P);
        bool in_w = m == Membership::InWaring;
        if (c.format == "json")
            std::cout << "{\"point\": \"" << P.to_string() << "\", \"member_of\": \""
                      << (in_w ? "waring" : "forbidden") << "\"}\n";
        else
            std::cout << P.to_string() << (in_w ? " is in the Waring locus"
                                                : " is forbidden") << "\n";
        return kExact;
    }
    LocusDescription loc = waring_locus(pp.poly);
    if (equation_only) {
        if (loc.equations.empty())
            throw std::runtime_error("locus has no defining equations (kind " +
                                     std::string(locus_kind_name(loc.kind)) + ")");
        for (const auto& e : loc.equations) std::cout << print_poly(e, duals) << "\n";
        return loc.certified ? kExact : kNumeric;
    }
    if (enumerate) {
        if (loc.kind != LocusDescription::Kind::FinitePoints)
            throw std::runtime_error("locus is not a finite point list");
        for (const auto& p : loc.points) std::cout << p.to_string() << "\n";
        return loc.certified ? kExact : kNumeric;
    }
    if (c.format == "json")
        std::cout << locus_to_json(loc, duals) << "\n";
    else
        print_locus_text(loc, duals);
    return loc.certified ? kExact : kNumeric;
}

int emit_classify(const Common& c) {
    ParsedPoly pp = parse_input(c);
    Poly F = pp.poly;
    if (F.nvars() < 3) {
        // pad with unused variables to the ternary ring
        Poly G(3);
        for (const auto& [e, coef] : F.terms()) {
            ExpVec f(3, 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i];
            G.add_term(f, coef);
        }
        F = G;
        while (pp.vars.size() < 3) pp.vars.push_back("z");
    }
    CubicClassification cc = classify_cubic(F);
    if (c.format == "json") {
        std::cout << "{\"type\": " << cc.type << ", \"rank\": " << cc.rank
                  << ", \"certified\": " << (cc.certified ? "true" : "false")
                  << ", \"essential_variables\": " << cc.essential << ", \"aronhold_S\": \""
                  << to_string(cc.S) << "\", \"aronhold_T\": \"" << to_string(cc.T)
                  << "\", \"singular_points\": [";
        for (std::size_t i = 0; i < cc.singular_points.size(); ++i)
            std::cout << (i ? ", " : "") << "\"" << cc.singular_points[i].to_string() << "\"";
        std::cout << "]}\n";
    } else {
        std::cout << "type (" << cc.type << "), rank " << cc.rank
                  << (cc.certified ? "" : " (not certified)") << "\n";
        std::cout << "essential variables: " << cc.essential << ", Aronhold S = "
                  << to_string(cc.S) << ", T = " << to_string(cc.T) << "\n";
        for (const auto& p : cc.singular_points)
            std::cout << "singular point " << p.to_string() << "\n";
        if (!cc.note.empty()) std::cout << "note: " << cc.note << "\n";
    }
    return cc.certified ? kExact : kNumeric;
}

int emit_plot(const Common& c, const std::string& chart, int grid, double window,
              const std::string& out_path) {
    ParsedPoly pp = parse_input(c);
    LocusDescription loc = waring_locus(pp.poly);
    if (loc.equations.empty())
        throw std::runtime_error("plot: the locus has no defining equations");
    if (pp.poly.nvars() != 3 && pp.vars.size() != 3)
        throw std::runtime_error("plot: ternary loci only");

    // split variable factors off each equation so components get their own
    // stroke class
    PlotSpec spec;
    for (const auto& eq : loc.equations) {
        Poly rest = eq;
        for (int v = 0; v < 3; ++v) {
            auto [k, q] = split_var_power(rest, v);
            if (k > 0) {
                spec.factors.push_back(Poly::variable(3, v));
                rest = q;
            }
        }
        if (rest.degree() >= 1) spec.factors.push_back(rest);
    }

    // parse chart "z=1"
    std::string name = chart;
    auto eqpos = name.find('=');
    if (eqpos != std::string::npos) {
        std::string val = name.substr(eqpos + 1);
        if (val != "1") throw std::runtime_error("plot: only charts of the form var=1");
        name = name.substr(0, eqpos);
    }
    int chart_var = -1;
    auto duals = dual_var_names(pp.vars);
    for (std::size_t i = 0; i < pp.vars.size(); ++i)
        if (pp.vars[i] == name || duals[i] == name) chart_var = static_cast<int>(i);
    if (chart_var < 0) throw std::runtime_error("plot: unknown chart variable " + name);
    spec.chart_var = chart_var;
    spec.grid = grid;
    spec.window = window;
    for (int v = 0; v < 3; ++v)
        if (v != chart_var) spec.axis_labels.push_back(duals[v]);

    std::string svg = render_locus_svg(spec);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(out_path);
        f << svg;
        std::cout << "wrote " << out_path << " (" << spec.factors.size() << " factors)\n";
    }
    return loc.certified ? kExact : kNumeric;
}

int emit_strassen(const Common& c) {
    ParsedPoly pp = parse_input(c);
    SplitDecomposition sd = split_detect(pp.poly);
    RankResult r = split_rank_impl(pp.poly, sd);
    int sum = 0;
    bool json = c.format == "json";
    if (json) std::cout << "{\"blocks\": [";
    for (std::size_t b = 0; b < sd.blocks.size(); ++b) {
        const auto& blk = sd.blocks[b];
        if (json) {
            std::cout << (b ? ", " : "") << "{\"variables\": [";
            for (std::size_t i = 0; i < blk.vars.size(); ++i)
                std::cout << (i ? "," : "") << blk.vars[i];
            std::cout << "], \"family\": \"" << block_family_name(blk.family)
                      << "\", \"rank\": " << blk.rank << "}";
        } else {
            std::cout << "block {";
            for (std::size_t i = 0; i < blk.vars.size(); ++i)
                std::cout << (i ? "," : "") << pp.vars[blk.vars[i]];
            std::cout << "}: family " << block_family_name(blk.family) << ", rank "
                      << blk.rank << "\n";
        }
        if (blk.rank > 0) sum += blk.rank;
    }
    if (json) {
        std::cout << "], \"rank\": " << r.rank << ", \"lower_bound\": " << r.lower_bound
                  << ", \"certified\": " << (r.certified ? "true" : "false") << ", \"note\": \""
                  << r.note << "\"}\n";
    } else {
        std::cout << "catalecticant lower bound " << r.lower_bound << ", block sum " << sum
                  << "\n"
                  << (r.certified ? "additivity certified: " : "not certified: ") << r.note
                  << "\n";
    }
    return r.certified ? kExact : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"waring: exact Waring ranks, decompositions and Waring/forbidden loci"};
    app.require_subcommand(1);

    Common c_rank, c_apolar, c_dec, c_locus, c_classify, c_plot, c_strassen;
    std::vector<int> degrees;
    std::vector<std::string> through;
    std::string point_str, chart = "z=1", out_path;
    bool eq_only = false, enumerate = false;
    int grid = 400;
    double window = 5.0;

    add_common(app.add_subcommand("rank", "Waring rank with certificate"), c_rank);
    auto* ap = app.add_subcommand("apolar", "graded slices of the apolar ideal");
    add_common(ap, c_apolar);
    ap->add_option("--degree", degrees, "slice degrees (default 1..d)");
    auto* de = app.add_subcommand("decompose", "minimal Waring decomposition");
    add_common(de, c_dec);
    de->add_option("--through", through, "prescribed point(s) [a:b:...]");
    auto* lo = app.add_subcommand("locus", "Waring / forbidden locus");
    add_common(lo, c_locus);
    lo->add_option("--point", point_str, "membership test for a point");
    lo->add_flag("--equation", eq_only, "print defining equations only");
    lo->add_flag("--enumerate", enumerate, "print a finite locus as points");
    add_common(app.add_subcommand("classify", "plane cubic classification"), c_classify);
    auto* pl = app.add_subcommand("plot", "SVG plot of the forbidden locus");
    add_common(pl, c_plot);
    pl->add_option("--chart", chart, "affine chart, e.g. z=1");
    pl->add_option("--grid", grid, "grid resolution");
    pl->add_option("--window", window, "half-width of the plot window");
    pl->add_option("--out", out_path, "output SVG path");
    add_common(app.add_subcommand("strassen-check", "additivity certificate for a split form"),
               c_strassen);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("rank")) return emit_rank(c_rank);
        if (app.got_subcommand("apolar")) return emit_apolar(c_apolar, degrees);
        if (app.got_subcommand("decompose")) return emit_decompose(c_dec, through);
        if (app.got_subcommand("locus"))
            return emit_locus(c_locus, point_str, eq_only, enumerate);
        if (app.got_subcommand("classify")) return emit_classify(c_classify);
        if (app.got_subcommand("plot"))
            return emit_plot(c_plot, chart, grid, window, out_path);
        if (app.got_subcommand("strassen-check")) return emit_strassen(c_strassen);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
