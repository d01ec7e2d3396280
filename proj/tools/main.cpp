#include <jantzen/algebraic.hpp>
#include <jantzen/dmodules.hpp>
#include <jantzen/filtration.hpp>
#include <jantzen/render.hpp>
#include <jantzen/weyl.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

using json = nlohmann::json;
using namespace jantzen;

namespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 internal invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

Monomial parse_monomial(const std::string& text) {
    long k, l, m;
    if (std::sscanf(text.c_str(), "%ld,%ld,%ld", &k, &l, &m) != 3)
        throw CLI::ValidationError("--monomial", "expected k,l,m");
    return {k, l, m};
}

struct Relation {
    std::string name;
    WeylOp lhs;
    WeylOp rhs;
    bool ok() const { return lhs == rhs; }
};

std::vector<Relation> commutation_relations() {
    WeylOp e = embed_L_e(), f = embed_L_f(), h = embed_L_h(), rh = embed_R_h();
    WeylOp zero = WeylOp::zero();
    return {
        {"[Le,Lf]", commutator(e, f), h},
        {"[Le,Lh]", commutator(e, h), e * Rational(-2)},
        {"[Lf,Lh]", commutator(f, h), f * Rational(2)},
        {"[Le,Rh]", commutator(e, rh), zero},
        {"[Lf,Rh]", commutator(f, rh), zero},
        {"[Lh,Rh]", commutator(h, rh), zero},
    };
}

int run_verify(bool relations, bool resolutions, bool stabilization,
               bool as_json) {
    bool ok = true;
    json out;
    if (relations) {
        json sec = json::array();
        for (const Relation& r : commutation_relations()) {
            sec.push_back({{"name", r.name},
                           {"value", r.lhs.str()},
                           {"expected", r.rhs.str()},
                           {"ok", r.ok()}});
            ok = ok && r.ok();
            if (!as_json)
                std::cout << r.name << " = " << r.lhs.str() << "  "
                          << (r.ok() ? "ok" : "MISMATCH, expected " +
                                                  r.rhs.str())
                          << "\n";
        }
        CasimirReport cas = casimir_identity_check();
        sec.push_back({{"name", "L(Omega)"},
                       {"value", cas.l_omega.str()},
                       {"expected", cas.displayed.str()},
                       {"ok", cas.ok}});
        ok = ok && cas.ok;
        if (!as_json)
            std::cout << "L(Omega) = " << cas.l_omega.str() << "  "
                      << (cas.ok ? "ok" : "MISMATCH") << "\n";
        out["relations"] = sec;
    }
    if (resolutions) {
        ResolutionReport rep = check_resolution_complexes();
        ok = ok && rep.ok;
        out["resolutions"] = {
            {"undeformed_composition", rep.undeformed_composition.str()},
            {"deformed_composition", rep.deformed_composition.str()},
            {"ok", rep.ok}};
        if (!as_json)
            std::cout << "d0.d1 (plain)    = "
                      << rep.undeformed_composition.str() << "\n"
                      << "d0.d1 (deformed) = "
                      << rep.deformed_composition.str() << "\n"
                      << "resolutions " << (rep.ok ? "ok" : "FAILED") << "\n";
    }
    if (stabilization) {
        json sec = json::array();
        for (long slice = -2; slice <= 3; ++slice) {
            StabilizationReport rep = stabilization_check(
                slice, slice - 12, slice, {2, 3, 4});
            ok = ok && rep.all_stable;
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"weight", row.weight},
                                {"coker_dims", row.coker_dims},
                                {"stable", row.stable}});
            sec.push_back({{"slice", slice},
                           {"rows", rows},
                           {"all_stable", rep.all_stable}});
            if (!as_json)
                std::cout << "slice " << slice << ": coker s1(n) "
                          << (rep.all_stable ? "stable for n=2,3,4"
                                             : "NOT STABLE")
                          << "\n";
        }
        out["stabilization"] = sec;
    }
    out["ok"] = ok;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int run_act(const std::string& family_name, const std::string& op_name_arg,
            const std::string& monomial_text, int n, bool as_json) {
    ModuleFamily family = parse_family(family_name, n);
    Monomial mono = parse_monomial(monomial_text);
    Element v = Element::monomial(family, mono);
    Element result = [&] {
        if (op_name_arg == "can") return can(v);
        if (op_name_arg == "s1n") return s1n(v);
        if (op_name_arg == "canbar") return canbar(v);
        return act(parse_op(op_name_arg), v);
    }();
    if (as_json)
        std::cout << json({{"family", result.family().str()},
                           {"terms", json::parse(result.json())}})
                         .dump(2)
                  << "\n";
    else
        std::cout << result.str() << "\n";
    return kExitOk;
}

int run_weights(const std::string& family_name, long slice, long wmin,
                long wmax, int n, bool as_json) {
    ModuleFamily family = parse_family(family_name, n);
    json rows = json::array();
    for (long w = wmax; w >= wmin; --w) {
        auto basis = weight_space_basis(family, slice, w);
        if (basis.empty())
            continue;
        json labels = json::array();
        std::string line;
        for (const auto& mono : basis) {
            labels.push_back({{"k", mono.k}, {"l", mono.l}, {"m", mono.m}});
            line += (line.empty() ? "" : ", ") + mono.str(family);
        }
        rows.push_back({{"weight", w}, {"basis", labels}});
        if (!as_json)
            std::cout << "weight " << w << ": " << line << "\n";
    }
    if (as_json)
        std::cout << json({{"family", family.str()},
                           {"slice", slice},
                           {"weights", rows}})
                         .dump(2)
                  << "\n";
    return kExitOk;
}

int run_monodromy(long slice, long wmin, long wmax, bool as_json) {
    MonodromyProfile profile = maxext_monodromy_profile(slice, wmin, wmax);
    json rows = json::array();
    for (const auto& row : profile.rows) {
        json grs = json::array();
        std::string line;
        for (auto [r, dim] : row.gr_dims) {
            grs.push_back({{"r", r}, {"dim", dim}});
            line += (line.empty() ? "" : ", ") + std::string("gr^") +
                    std::to_string(r) + "=" + std::to_string(dim);
        }
        rows.push_back({{"weight", row.weight},
                        {"gr", grs},
                        {"verified", row.verified}});
        if (!as_json)
            std::cout << "weight " << row.weight << ": " << line << "  "
                      << (row.verified ? "ok" : "FAILED") << "\n";
    }
    if (as_json)
        std::cout << json({{"slice", slice},
                           {"rows", rows},
                           {"all_verified", profile.all_verified}})
                         .dump(2)
                  << "\n";
    return profile.all_verified ? kExitOk : kExitCheckFailed;
}

int run_jantzen(long slice, int n, long wmin, long wmax, bool compare,
                bool sum_formula, bool composition, bool as_json) {
    bool ok = true;
    json out;
    AlgebraicJantzen aj = algebraic_jantzen(slice, n, wmin, wmax);
    out["slice"] = slice;
    out["n"] = n;
    out["shift"] = aj.shift;
    json weights = json::array();
    for (const auto& wc : aj.weights) {
        json dims = json::array(), ndims = json::array();
        for (const auto& layer : wc.layers)
            dims.push_back(layer.dim());
        for (const auto& layer : wc.normalized)
            ndims.push_back(layer.dim());
        weights.push_back({{"weight", wc.weight},
                           {"dims", dims},
                           {"normalized_dims", ndims}});
        if (!as_json) {
            std::cout << "weight " << wc.weight << ": dims";
            for (const auto& layer : wc.layers)
                std::cout << " " << layer.dim();
            std::cout << "\n";
        }
    }
    out["weights"] = weights;
    if (!as_json)
        std::cout << "shift " << aj.shift << "\n";
    if (compare) {
        ComparisonReport rep = compare_filtrations(slice, n, wmin, wmax);
        ok = ok && rep.aligned;
        json rows = json::array();
        for (const auto& v : rep.weights) {
            rows.push_back({{"weight", v.weight},
                            {"layers_match", v.layers_match},
                            {"image_is_kernel", v.image_is_kernel},
                            {"algebraic_dims", v.algebraic_dims},
                            {"geometric_dims", v.geometric_dims}});
            if (!as_json)
                std::cout << "weight " << v.weight << ": "
                          << (v.layers_match && v.image_is_kernel
                                  ? "aligned"
                                  : "MISALIGNED")
                          << "\n";
        }
        out["compare"] = {{"aligned", rep.aligned}, {"rows", rows}};
    }
    if (sum_formula) {
        SumFormulaReport rep = sum_formula_check(slice, n, wmin, wmax);
        ok = ok && rep.ok;
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"weight", row.weight},
                            {"observed", row.observed},
                            {"expected", row.expected},
                            {"ok", row.ok}});
        out["sum_formula"] = {{"ok", rep.ok}, {"rows", rows}};
        if (!as_json)
            std::cout << "sum formula " << (rep.ok ? "ok" : "FAILED") << "\n";
    }
    if (composition) {
        CompositionSeriesReport rep =
            composition_series_check(slice, wmin, wmax, n);
        ok = ok && rep.ok;
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"weight", row.weight},
                            {"gr0", row.gr0},
                            {"gr1", row.gr1},
                            {"gr2", row.gr2},
                            {"ok", row.ok}});
        out["composition"] = {{"ok", rep.ok}, {"rows", rows}};
        if (!as_json)
            std::cout << "composition series " << (rep.ok ? "ok" : "FAILED")
                      << "\n";
    }
    out["ok"] = ok;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int run_figure(const std::string& which, long smin, long smax, long wmin,
               long wmax, int n, const std::string& format,
               const std::string& out_path) {
    DiagramSpec spec;
    spec.kind = parse_diagram_kind(which);
    spec.slice_min = smin;
    spec.slice_max = smax;
    spec.wmin = wmin;
    spec.wmax = wmax;
    spec.n = n;
    std::string text = emit(build_diagram(spec), parse_diagram_format(format));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot open " + out_path);
        f << text;
    }
    return kExitOk;
}

int run_op(const std::string& expr, int order, bool localized) {
    std::cout << parse_weyl_expr(expr, order, localized).str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jantzen filtration computations for sl2 D-modules "
                 "on base affine space"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    bool v_all = false, v_rel = false, v_res = false, v_stab = false;
    verify->add_flag("--all", v_all);
    verify->add_flag("--relations", v_rel);
    verify->add_flag("--resolutions", v_res);
    verify->add_flag("--stabilization", v_stab);

    auto* act_cmd = app.add_subcommand("act", "apply one operator");
    std::string a_family = "plus", a_op, a_monomial;
    int a_n = 4;
    act_cmd->add_option("--family", a_family);
    act_cmd->add_option("--op", a_op)->required();
    act_cmd->add_option("--monomial", a_monomial)->required();
    act_cmd->add_option("--n", a_n);

    auto* weights = app.add_subcommand("weights", "list weight-space bases");
    std::string w_family = "plus";
    long w_slice = 0, w_wmin = -12, w_wmax = 0;
    int w_n = 4;
    weights->add_option("--family", w_family);
    weights->add_option("--slice", w_slice);
    weights->add_option("--wmin", w_wmin);
    weights->add_option("--wmax", w_wmax);
    weights->add_option("--n", w_n);

    auto* monodromy = app.add_subcommand(
        "monodromy", "monodromy filtration of the maximal extension");
    long m_slice = 0, m_wmin = -12, m_wmax = 0;
    monodromy->add_option("--slice", m_slice);
    monodromy->add_option("--wmin", m_wmin);
    monodromy->add_option("--wmax", m_wmax);

    auto* jz = app.add_subcommand("jantzen", "algebraic Jantzen filtration");
    long j_slice = 0, j_wmin = -12, j_wmax = 0;
    int j_n = 4;
    bool j_compare = false, j_sum = false, j_comp = false;
    jz->add_option("--slice", j_slice);
    jz->add_option("--n", j_n);
    jz->add_option("--wmin", j_wmin);
    jz->add_option("--wmax", j_wmax);
    jz->add_flag("--compare", j_compare);
    jz->add_flag("--sum-formula", j_sum);
    jz->add_flag("--composition", j_comp);

    auto* figure = app.add_subcommand("figure", "emit a module diagram");
    std::string f_which, f_format = "dot", f_out;
    long f_slice = 0, f_smin = 0, f_smax = 0, f_wmin = -6, f_wmax = 0;
    int f_n = 2;
    figure->add_option("--which", f_which)->required();
    auto* f_slice_opt = figure->add_option("--slice", f_slice);
    figure->add_option("--smin", f_smin);
    figure->add_option("--smax", f_smax);
    figure->add_option("--wmin", f_wmin);
    figure->add_option("--wmax", f_wmax);
    figure->add_option("--n", f_n);
    figure->add_option("--format", f_format);
    figure->add_option("--out", f_out);

    auto* op_cmd =
        app.add_subcommand("op", "normal-order a Weyl algebra expression");
    std::string o_expr;
    int o_order = 1;
    bool o_localized = false;
    op_cmd->add_option("--expr", o_expr)->required();
    op_cmd->add_option("--order", o_order);
    op_cmd->add_flag("--localized", o_localized);

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            if (!(v_all || v_rel || v_res || v_stab))
                v_all = true;
            return run_verify(v_all || v_rel, v_all || v_res,
                              v_all || v_stab, as_json);
        }
        if (*act_cmd)
            return run_act(a_family, a_op, a_monomial, a_n, as_json);
        if (*weights)
            return run_weights(w_family, w_slice, w_wmin, w_wmax, w_n,
                               as_json);
        if (*monodromy)
            return run_monodromy(m_slice, m_wmin, m_wmax, as_json);
        if (*jz)
            return run_jantzen(j_slice, j_n, j_wmin, j_wmax, j_compare, j_sum,
                               j_comp, as_json);
        if (*figure) {
            if (f_slice_opt->count()) {
                f_smin = f_slice;
                f_smax = f_slice;
            }
            return run_figure(f_which, f_smin, f_smax, f_wmin, f_wmax, f_n,
                              f_format, f_out);
        }
        if (*op_cmd)
            return run_op(o_expr, o_order, o_localized);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
