#include "affsym/reports.hpp"
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace affsym {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

json tool_info() {
    return {{"tool", "affsym"}, {"version", AFFSYM_VERSION}};
}

json tolerances_json(const Tolerances& tol) {
    return {{"shape", tol.shape},
            {"tangentiality", tol.tangentiality},
            {"blaschke", tol.blaschke},
            {"blaschke_fraction", tol.blaschke_fraction},
            {"condition", tol.condition},
            {"class_threshold", tol.class_threshold},
            {"class_residual", tol.class_residual},
            {"nu", tol.nu},
            {"classify_step", tol.classify_step}};
}

json grid_json(const GridSpec& g) {
    return {{"t", {g.t0, g.t1, g.nt}}, {"v", {g.v0, g.v1, g.nv}}, {"w", {g.w0, g.w1, g.nw}}};
}

json family_json(const FamilyInstance& inst) {
    const FamilySpec& s = inst.spec();
    json j{{"family", family_name(s.family)},
           {"base", s.base.name()},
           {"chart", s.base.chart_description()},
           {"H", inst.H()}};
    if (family_uses_curve(s.family))
        j["curve"] = s.curve->name();
    else
        j["c"] = s.c;
    if (!inst.proper()) j["normal_scale"] = inst.normal_scale();
    if (s.base.kind() == BaseKind::Titeica) j["titeica_scale"] = s.base.titeica_scale();
    return j;
}

json verification_report(const std::vector<SymmetryCase>& cases, bool show_equations) {
    json rep = tool_info();
    rep["kind"] = "verify-identities";

    json match;
    CodazziMatchReport m = match_codazzi_system();
    match["components"] = json::array();
    for (const auto& cm : m.components)
        match["components"].push_back({{"triple", cm.triple},
                                       {"component", cm.component},
                                       {"equation", cm.equation},
                                       {"polynomial", cm.poly},
                                       {"matched", cm.matched}});
    match["unmatched_equations"] = m.unmatched_equations;
    match["complete"] = m.complete;
    rep["codazzi_match"] = match;

    std::vector<std::string> log;
    rep["elimination_identities_ok"] = check_elimination_identities(&log);
    rep["elimination_identities"] = log;

    rep["cases"] = json::array();
    for (SymmetryCase c : cases) {
        CaseReport cr = verify_case(c);
        json cj{{"case", case_name(c)}, {"all_zero", cr.all_zero}};
        cj["components"] = json::array();
        for (const auto& cc : cr.components)
            cj["components"].push_back({{"triple", cc.triple},
                                        {"component", cc.component},
                                        {"reduced", cc.reduced},
                                        {"zero", cc.zero}});
        if (c == SymmetryCase::Z3Degenerate) {
            cj["gauss_contradiction_flagged"] = cr.gauss_contradiction_flagged;
            cj["contradiction_polynomial"] = cr.contradiction_poly;
        }
        rep["cases"].push_back(cj);
    }

    Polynomial contradiction = derive_z3_degenerate_contradiction();
    Polynomial twelve_a4sq =
        Rational(12) * (Polynomial::symbol(sym::a4) * Polynomial::symbol(sym::a4));
    rep["contradiction"] = {{"polynomial", contradiction.str()},
                            {"nonzero", !contradiction.is_zero()},
                            {"equals_12_a4_squared", structurally_equal(contradiction, twelve_a4sq)}};

    if (show_equations) {
        json eqs = json::array();
        for (const auto& e : codazzi_display_equations())
            eqs.push_back({{"id", e.id}, {"normal_form", e.poly.normal_form().str()}});
        rep["equations"] = eqs;
    }
    return rep;
}

bool verification_passed(const json& report) {
    if (!report.at("codazzi_match").at("complete").get<bool>()) return false;
    if (!report.at("elimination_identities_ok").get<bool>()) return false;
    for (const auto& c : report.at("cases"))
        if (!c.at("all_zero").get<bool>()) return false;
    if (report.contains("contradiction")) {
        if (!report.at("contradiction").at("nonzero").get<bool>()) return false;
        if (!report.at("contradiction").at("equals_12_a4_squared").get<bool>()) return false;
    }
    return true;
}

json certify_report(const FamilyInstance& inst, const GridSpec& grid, const Tolerances& tol,
                    const CertifySummary& s, const std::vector<PointRecord>* points) {
    json rep = tool_info();
    rep["kind"] = "certify";
    rep["config"] = {{"family", family_json(inst)}, {"grid", grid_json(grid)}};
    rep["tolerances"] = tolerances_json(tol);
    rep["summary"] = {{"total", s.total},
                      {"transversal", s.transversal},
                      {"lorentz", s.lorentz},
                      {"blaschke_ok", s.blaschke_ok},
                      {"blaschke_fraction", s.blaschke_fraction},
                      {"max_S_residual", s.max_S_residual},
                      {"max_blaschke", s.max_blaschke},
                      {"max_decomposition", s.max_decomposition},
                      {"max_tangentiality", s.max_tangentiality},
                      {"pass", s.pass},
                      {"fail_reason", s.fail_reason}};
    if (points) {
        json arr = json::array();
        for (const auto& p : *points) {
            json pj{{"t", p.t},         {"v", p.v},
                    {"w", p.w},         {"transversal", p.transversal},
                    {"S_residual", p.S_residual}, {"blaschke", p.blaschke},
                    {"signature", signature_name(p.sig)}};
            if (p.classified) {
                pj["a4"] = p.a4;
                pj["a6"] = p.a6;
                pj["b4"] = p.b4;
                pj["class"] = sym_class_name(p.cls);
                pj["nu"] = p.nu;
                pj["case"] = p.nu_case;
            }
            if (!p.classify_error.empty()) pj["classify_error"] = p.classify_error;
            if (!p.error.empty()) pj["error"] = p.error;
            arr.push_back(pj);
        }
        rep["points"] = arr;
    }
    return rep;
}

json condition_report(const FamilyInstance& inst, const GridSpec& grid, const Tolerances& tol,
                      const std::vector<std::pair<double, ConditionResult>>& results) {
    json rep = tool_info();
    rep["kind"] = "curve-condition";
    rep["config"] = {{"family", family_json(inst)}, {"grid", grid_json(grid)}};
    rep["tolerances"] = tolerances_json(tol);
    json arr = json::array();
    size_t failures = 0;
    for (const auto& [t, r] : results) {
        json rj{{"t", t},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"residual", r.residual},
                {"pass", r.pass}};
        if (!r.reason.empty()) rj["reason"] = r.reason;
        if (!r.pass) ++failures;
        arr.push_back(rj);
    }
    rep["per_t"] = arr;
    rep["failures"] = failures;
    rep["pass"] = failures == 0;
    return rep;
}

void write_mesh_csv(const std::string& path, const FamilyInstance& inst, const GridSpec& grid) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "t,v,w,x0,x1,x2,x3\n";
    for (int it = 0; it < grid.nt; ++it)
        for (int iv = 0; iv < grid.nv; ++iv)
            for (int iw = 0; iw < grid.nw; ++iw) {
                double t = grid.t_at(it), v = grid.v_at(iv), w = grid.w_at(iw);
                Jet2Point j = inst.jet(t, v, w);
                out << fmt17(t) << ',' << fmt17(v) << ',' << fmt17(w) << ',' << fmt17(j.x[0])
                    << ',' << fmt17(j.x[1]) << ',' << fmt17(j.x[2]) << ',' << fmt17(j.x[3])
                    << '\n';
            }
}

json mesh_json(const FamilyInstance& inst, const GridSpec& grid) {
    json rep = tool_info();
    rep["kind"] = "mesh";
    rep["family"] = family_json(inst);
    rep["grid"] = grid_json(grid);
    json pts = json::array();
    for (int it = 0; it < grid.nt; ++it)
        for (int iv = 0; iv < grid.nv; ++iv)
            for (int iw = 0; iw < grid.nw; ++iw) {
                double t = grid.t_at(it), v = grid.v_at(iv), w = grid.w_at(iw);
                Jet2Point j = inst.jet(t, v, w);
                pts.push_back({j.x[0], j.x[1], j.x[2], j.x[3]});
            }
    rep["points"] = pts;
    return rep;
}

void write_classification_csv(const std::string& path,
                              const std::vector<ClassifyRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "t,v,w,a4,a6,b4,residual,class\n";
    for (const auto& r : records)
        out << fmt17(r.t) << ',' << fmt17(r.v) << ',' << fmt17(r.w) << ',' << fmt17(r.a4) << ','
            << fmt17(r.a6) << ',' << fmt17(r.b4) << ',' << fmt17(r.residual) << ','
            << sym_class_name(r.cls) << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
}

} // namespace affsym
