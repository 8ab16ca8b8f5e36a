// affsym: symbolic verification, warped-product construction, numeric
// certification and pointwise-symmetry classification of 3d indefinite
// affine hyperspheres.
//
// Exit codes: 0 success, 1 symbolic verification failure, 2 numeric
// certification failure, 64 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "affsym/certify.hpp"
#include "affsym/conditions.hpp"
#include "affsym/reports.hpp"
#include "affsym/symbolic_verifier.hpp"

using namespace affsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSymbolic = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

struct Range {
    double lo = 0, hi = 1;
    int count = 1;
};

// grid syntax start:end:count, inclusive on both ends
Range parse_range(const std::string& s) {
    Range r;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' || c2 != ':' || r.count < 1 ||
        !is.eof())
        throw CLI::ValidationError("range", "expected start:end:count, got '" + s + "'");
    return r;
}

void emit(const json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path);
        out << doc.dump(2) << "\n";
    }
}

struct BuildOptions {
    std::string family;
    std::string base;
    std::string curve;
    double c = 1.0;
    double H = 0.0;
    std::string t_range = "1.05:1.95:20";
    std::string vw_range;
    std::string v_range;
    std::string w_range;
    bool synthesize = false;
    std::string gamma1 = "t";
    double seed_g2 = -1.0, seed_g2p = 0.4;
    double synth_from = std::numeric_limits<double>::quiet_NaN();
    double synth_to = std::numeric_limits<double>::quiet_NaN();
    int steps = 10000;
    std::string branch = "minus";
    int threads = 0;
};

void add_family_options(CLI::App* cmd, BuildOptions& o) {
    cmd->add_option("--family", o.family, "family name (c1-proper, c1-improper, c2, c3a, c3b, "
                                          "c1t8-proper, c1t8-improper, c2t8, c3t8a, c3t8b)")
        ->required();
    cmd->add_option("--base", o.base,
                    "base surface (sphere, two-sheeted, one-sheeted, elliptic-paraboloid, "
                    "hyperbolic-paraboloid, titeica)")
        ->required();
    cmd->add_option("--curve", o.curve,
                    "built-in curve: cosh,sinh | sinh,cosh | cos,sin | t,exp | c2-exact");
    cmd->add_flag("--synthesize", o.synthesize, "integrate the curve condition for gamma2");
    cmd->add_option("--gamma1", o.gamma1, "synthesis gamma1: t | cosh");
    cmd->add_option("--seed-g2", o.seed_g2, "synthesis initial gamma2");
    cmd->add_option("--seed-g2p", o.seed_g2p, "synthesis initial gamma2'");
    cmd->add_option("--synth-from", o.synth_from,
                    "synthesis start (seeds apply here; default: just before the grid; "
                    "start earlier to keep the stiff initial stretch outside the grid)");
    cmd->add_option("--synth-to", o.synth_to, "synthesis end (default: just after the grid)");
    cmd->add_option("--steps", o.steps, "synthesis RK4 steps");
    cmd->add_option("--branch", o.branch, "synthesis sign branch for t8 families: plus | minus");
    cmd->add_option("--c", o.c, "constant c > 0 (c3 families)");
    cmd->add_option("--H", o.H, "force the mean curvature sign (+1/-1); default: auto");
    cmd->add_option("--t", o.t_range, "t grid start:end:count");
    cmd->add_option("--vw", o.vw_range, "v and w grid start:end:count");
    cmd->add_option("--v", o.v_range, "v grid start:end:count");
    cmd->add_option("--w", o.w_range, "w grid start:end:count");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
}

GridSpec make_grid(const BuildOptions& o, const BaseSurface& base) {
    Range t = parse_range(o.t_range);
    Range v{-1, 1, 12}, w{-1, 1, 12};
    if (base.kind() == BaseKind::Titeica) {
        v = {0.6, 1.8, 12};
        w = {0.6, 1.8, 12};
    } else if (base.kind() == BaseKind::Sphere) {
        v = {-0.5, 0.5, 12};
        w = {-0.5, 0.5, 12};
    }
    if (!o.vw_range.empty()) v = w = parse_range(o.vw_range);
    if (!o.v_range.empty()) v = parse_range(o.v_range);
    if (!o.w_range.empty()) w = parse_range(o.w_range);
    GridSpec g;
    g.t0 = t.lo; g.t1 = t.hi; g.nt = t.count;
    g.v0 = v.lo; g.v1 = v.hi; g.nv = v.count;
    g.w0 = w.lo; g.w1 = w.hi; g.nw = w.count;
    return g;
}

FamilyInstance make_instance(const BuildOptions& o, const GridSpec& grid) {
    FamilyKind kind = family_from_name(o.family);
    BaseSurface base = BaseSurface::from_name(o.base);
    std::shared_ptr<const Curve> curve;
    if (family_uses_curve(kind)) {
        if (o.synthesize) {
            SynthesisSpec s;
            s.family = kind;
            if (o.gamma1 == "t")
                s.gamma1 = Gamma1Kind::Identity;
            else if (o.gamma1 == "cosh")
                s.gamma1 = Gamma1Kind::Cosh;
            else
                throw CLI::ValidationError("--gamma1", "expected t or cosh");
            s.t0 = std::isnan(o.synth_from) ? grid.t0 - 0.02 * (grid.t1 - grid.t0) - 1e-6
                                            : o.synth_from;
            s.t_end = std::isnan(o.synth_to) ? grid.t1 + 0.02 * (grid.t1 - grid.t0) + 1e-6
                                             : o.synth_to;
            if (s.t0 > grid.t0 || s.t_end < grid.t1)
                throw CLI::ValidationError("--synth-from/--synth-to",
                                           "synthesis interval must cover the t grid");
            s.steps = int(o.steps * std::max(1.0, (s.t_end - s.t0) / (grid.t1 - grid.t0)));
            s.g2_0 = o.seed_g2;
            s.g2p_0 = o.seed_g2p;
            s.eps1 = base.is_proper() ? base.eps1() : -1;
            s.branch = o.branch == "plus" ? SignBranch::Plus : SignBranch::Minus;
            curve = synthesize_curve(s);
        } else if (!o.curve.empty()) {
            curve = make_builtin_curve(o.curve);
        } else {
            throw CLI::ValidationError("--curve", "curve families need --curve or --synthesize");
        }
    }
    FamilySpec spec{kind, std::move(base), std::move(curve), o.c, o.H};
    auto mid = grid.midpoint();
    return FamilyInstance::create(std::move(spec), mid[0], mid[1], mid[2]);
}

std::vector<std::pair<double, ConditionResult>> run_conditions(const FamilyInstance& inst,
                                                               const GridSpec& grid,
                                                               double tol) {
    std::vector<std::pair<double, ConditionResult>> out;
    if (!family_uses_curve(inst.spec().family)) return out;
    for (int i = 0; i < grid.nt; ++i) {
        double t = grid.t_at(i);
        out.emplace_back(t, check_family_condition(inst.spec(), t, tol));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine hypersphere toolkit: verify, build, certify, classify"};
    app.require_subcommand(1);

    // ---- verify-identities -------------------------------------------------
    std::string verify_case_name = "all";
    bool show_equations = false;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand(
        "verify-identities", "reproduce the frame constraint systems exactly");
    verify->add_option("--case", verify_case_name, "so2 | s3 | z3 | z3-degenerate | all");
    verify->add_flag("--show-equations", show_equations, "include normalized display equations");
    verify->add_option("--out", verify_out, "write the JSON report here");

    // ---- build / certify / classify ----------------------------------------
    BuildOptions bopt, copt, kopt;
    std::string mesh_out, mesh_json_out, build_report_out;
    CLI::App* build = app.add_subcommand("build", "sample an immersion and check its curve "
                                                  "condition");
    add_family_options(build, bopt);
    build->add_option("--out", mesh_out, "CSV mesh output path");
    build->add_option("--json", mesh_json_out, "JSON mesh output path");
    build->add_option("--report", build_report_out, "condition report path (default stdout)");

    std::string certify_out;
    bool force = false, per_point = false;
    CLI::App* certify = app.add_subcommand("certify", "certify the affine-hypersphere "
                                                      "properties on a grid");
    add_family_options(certify, copt);
    certify->add_flag("--force", force, "certify even if the curve condition fails");
    certify->add_flag("--per-point", per_point,
                      "include per-point records (with classification) in the report");
    certify->add_option("--out", certify_out, "JSON report path (default stdout)");

    std::string classify_out = "classification.csv";
    double classify_step = 0;
    CLI::App* classify = app.add_subcommand("classify", "classify the pointwise symmetry "
                                                        "group per grid point");
    add_family_options(classify, kopt);
    classify->add_option("--step", classify_step, "measurement step (default 1e-2)");
    classify->add_option("--out", classify_out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) {
            std::vector<SymmetryCase> cases;
            if (verify_case_name == "all")
                cases = {SymmetryCase::SO2, SymmetryCase::S3, SymmetryCase::Z3,
                         SymmetryCase::Z3Degenerate};
            else if (verify_case_name == "so2")
                cases = {SymmetryCase::SO2};
            else if (verify_case_name == "s3")
                cases = {SymmetryCase::S3};
            else if (verify_case_name == "z3")
                cases = {SymmetryCase::Z3};
            else if (verify_case_name == "z3-degenerate")
                cases = {SymmetryCase::Z3Degenerate};
            else
                throw CLI::ValidationError("--case", "unknown case " + verify_case_name);
            json rep = verification_report(cases, show_equations);
            emit(rep, verify_out);
            if (!verification_passed(rep)) {
                for (const auto& c : rep.at("cases"))
                    if (!c.at("all_zero").get<bool>())
                        for (const auto& comp : c.at("components"))
                            if (!comp.at("zero").get<bool>())
                                std::cerr << "nonzero residual in " << c.at("case") << " "
                                          << comp.at("triple") << ": " << comp.at("reduced")
                                          << "\n";
                return kExitSymbolic;
            }
            return kExitOk;
        }

        Tolerances tol;
        if (*build) {
            GridSpec grid = make_grid(bopt, BaseSurface::from_name(bopt.base));
            FamilyInstance inst = make_instance(bopt, grid);
            if (!mesh_out.empty()) write_mesh_csv(mesh_out, inst, grid);
            if (!mesh_json_out.empty()) emit(mesh_json(inst, grid), mesh_json_out);
            auto conds = run_conditions(inst, grid, tol.condition);
            json rep = condition_report(inst, grid, tol, conds);
            emit(rep, build_report_out);
            return rep.at("pass").get<bool>() ? kExitOk : kExitNumeric;
        }

        if (*certify) {
            GridSpec grid = make_grid(copt, BaseSurface::from_name(copt.base));
            FamilyInstance inst = make_instance(copt, grid);
            auto conds = run_conditions(inst, grid, tol.condition);
            size_t cond_failures = 0;
            for (const auto& [t, r] : conds)
                if (!r.pass) ++cond_failures;
            if (cond_failures > 0 && !force) {
                json rep = condition_report(inst, grid, tol, conds);
                emit(rep, certify_out);
                std::cerr << "curve condition failed at " << cond_failures
                          << " t-values; pass --force to certify anyway\n";
                return kExitNumeric;
            }
            std::vector<PointRecord> pts;
            CertifySummary s = certify_grid(inst, grid, tol, copt.threads,
                                            per_point ? &pts : nullptr, per_point);
            json rep = certify_report(inst, grid, tol, s, per_point ? &pts : nullptr);
            if (cond_failures > 0) rep["condition_failures"] = cond_failures;
            emit(rep, certify_out);
            return s.pass && cond_failures == 0 ? kExitOk : kExitNumeric;
        }

        if (*classify) {
            GridSpec grid = make_grid(kopt, BaseSurface::from_name(kopt.base));
            FamilyInstance inst = make_instance(kopt, grid);
            if (classify_step > 0) tol.classify_step = classify_step;
            auto recs = classify_grid(inst, grid, tol, kopt.threads);
            write_classification_csv(classify_out, recs);
            size_t unknown = 0;
            for (const auto& r : recs)
                if (r.cls == SymClass::Unknown || !r.error.empty()) ++unknown;
            std::cout << "classified " << recs.size() << " points, " << unknown
                      << " unknown; table written to " << classify_out << "\n";
            return unknown == 0 ? kExitOk : kExitNumeric;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
