// Python bindings for the main operations: exact frame algebra, symbolic
// verification, family construction, certification and classification.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affsym/certify.hpp"
#include "affsym/conditions.hpp"
#include "affsym/measure.hpp"
#include "affsym/reports.hpp"
#include "affsym/symbolic_verifier.hpp"
#include "affsym/tensor_core.hpp"

namespace py = pybind11;
using namespace affsym;

namespace {

using DVec = FrameVec3<double>;
using DK = CanonicalK<double>;

FrameSignature sig_from(const std::string& s) {
    if (s == "orthonormal") return FrameSignature::Orthonormal;
    if (s == "lightcone") return FrameSignature::Lightcone;
    throw std::invalid_argument("signature must be 'orthonormal' or 'lightcone'");
}

DVec vec_from(const std::vector<double>& v) {
    if (v.size() != 3) throw std::invalid_argument("frame vectors have 3 components");
    return {v[0], v[1], v[2]};
}

std::vector<double> vec_to(const DVec& v) { return {v.c1, v.c2, v.c3}; }

DK k_ortho(double a4, double a6) { return DK::ortho(a4, a6); }
DK k_light(double b4) { return DK::light(b4); }

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

std::shared_ptr<const Curve> resolve_curve(const std::string& name) {
    return make_builtin_curve(name);
}

FamilyInstance make_instance(const std::string& family, const std::string& base,
                             std::shared_ptr<const Curve> curve, double c, double H) {
    FamilyKind kind = family_from_name(family);
    FamilySpec spec{kind, BaseSurface::from_name(base), std::move(curve), c, H};
    return FamilyInstance::create(std::move(spec));
}

py::dict jet_to_py(const Jet2Point& j) {
    py::dict d;
    d["x"] = std::vector<double>(j.x.begin(), j.x.end());
    py::list d1, d2;
    for (const auto& v : j.d1) d1.append(std::vector<double>(v.begin(), v.end()));
    for (const auto& v : j.d2) d2.append(std::vector<double>(v.begin(), v.end()));
    d["d1"] = d1;
    d["d2"] = d2;
    return d;
}

py::dict condition_to_py(const ConditionResult& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["residual"] = r.residual;
    d["pass"] = r.pass;
    d["reason"] = r.reason;
    return d;
}

} // namespace

PYBIND11_MODULE(affsym_core, m) {
    m.doc() = "indefinite affine hyperspheres with pointwise symmetry: frame algebra, "
              "symbolic verification, warped-product constructions, certification";
    m.attr("__version__") = AFFSYM_VERSION;

    // ---- frame-level tensor algebra (double mode) --------------------------
    py::class_<DK>(m, "CanonicalK", "canonical difference tensor (a4,a6) or (b4)");
    m.def("ortho_form", &k_ortho, py::arg("a4"), py::arg("a6"));
    m.def("light_form", &k_light, py::arg("b4"));

    m.def(
        "metric_eval",
        [](const std::vector<double>& x, const std::vector<double>& y, const std::string& sig) {
            return metric_eval(vec_from(x), vec_from(y), sig_from(sig));
        },
        py::arg("x"), py::arg("y"), py::arg("signature") = "orthonormal");

    m.def(
        "difference_tensor_eval",
        [](const DK& k, const std::vector<double>& x, const std::vector<double>& y) {
            return vec_to(difference_tensor_eval(k, vec_from(x), vec_from(y)));
        },
        py::arg("k"), py::arg("x"), py::arg("y"));

    m.def(
        "trace_K",
        [](const DK& k, const std::vector<double>& x, const std::string& sig) {
            return trace_K(k, vec_from(x), sig_from(sig));
        },
        py::arg("k"), py::arg("x"), py::arg("signature") = "orthonormal");

    m.def(
        "curvature_LC",
        [](double H, const DK& k, const std::vector<double>& x, const std::vector<double>& y,
           const std::vector<double>& z) {
            CurvatureContext<double> ctx{H, k};
            return vec_to(curvature_LC(ctx, vec_from(x), vec_from(y), vec_from(z)));
        },
        py::arg("H"), py::arg("k"), py::arg("x"), py::arg("y"), py::arg("z"));

    m.def(
        "ricci",
        [](double H, const DK& k, const std::vector<double>& x, const std::vector<double>& y) {
            CurvatureContext<double> ctx{H, k};
            return ricci(ctx, vec_from(x), vec_from(y));
        },
        py::arg("H"), py::arg("k"), py::arg("x"), py::arg("y"));

    m.def(
        "pick_invariant",
        [](const DK& k, const std::string& sig) { return pick_invariant(k, sig_from(sig)); },
        py::arg("k"), py::arg("signature") = "orthonormal");

    m.def(
        "scalar_curvature",
        [](double H, const DK& k) {
            CurvatureContext<double> ctx{H, k};
            return scalar_curvature(ctx);
        },
        py::arg("H"), py::arg("k"));

    // ---- symbolic verification ----------------------------------------------
    m.def(
        "verify_identities",
        [](bool show_equations) {
            json rep = verification_report({SymmetryCase::SO2, SymmetryCase::S3,
                                            SymmetryCase::Z3, SymmetryCase::Z3Degenerate},
                                           show_equations);
            py::dict out;
            out["report"] = json_to_py(rep);
            out["pass"] = verification_passed(rep);
            return out;
        },
        py::arg("show_equations") = false);

    // ---- curves --------------------------------------------------------------
    py::class_<Curve, std::shared_ptr<Curve>>(m, "Curve")
        .def("eval",
             [](const Curve& c, double t) {
                 CurveJet j = c.eval(t);
                 py::dict d;
                 d["g1"] = j.g1;
                 d["g1p"] = j.g1p;
                 d["g1pp"] = j.g1pp;
                 d["g2"] = j.g2;
                 d["g2p"] = j.g2p;
                 d["g2pp"] = j.g2pp;
                 return d;
             })
        .def_property_readonly("name", &Curve::name);

    m.def("builtin_curve",
          [](const std::string& name) {
              return std::shared_ptr<Curve>(std::const_pointer_cast<Curve>(
                  std::shared_ptr<const Curve>(resolve_curve(name))));
          },
          py::arg("name"));

    m.def(
        "synthesize_curve",
        [](const std::string& family, const std::string& gamma1, double t0, double g2,
           double g2p, double t_end, int steps, int eps1, const std::string& branch) {
            SynthesisSpec s;
            s.family = family_from_name(family);
            if (gamma1 == "t")
                s.gamma1 = Gamma1Kind::Identity;
            else if (gamma1 == "cosh")
                s.gamma1 = Gamma1Kind::Cosh;
            else
                throw std::invalid_argument("gamma1 must be 't' or 'cosh'");
            s.t0 = t0;
            s.g2_0 = g2;
            s.g2p_0 = g2p;
            s.t_end = t_end;
            s.steps = steps;
            s.eps1 = eps1;
            s.branch = branch == "plus" ? SignBranch::Plus : SignBranch::Minus;
            return std::shared_ptr<Curve>(synthesize_curve(s));
        },
        py::arg("family"), py::arg("gamma1"), py::arg("t0"), py::arg("g2"), py::arg("g2p"),
        py::arg("t_end"), py::arg("steps") = 10000, py::arg("eps1") = -1,
        py::arg("branch") = "minus");

    m.def(
        "check_condition",
        [](const std::string& family, std::shared_ptr<Curve> curve, const std::string& base,
           double t) {
            FamilyKind kind = family_from_name(family);
            FamilySpec spec{kind, BaseSurface::from_name(base), curve, 1.0, 0.0};
            return condition_to_py(check_family_condition(spec, t));
        },
        py::arg("family"), py::arg("curve"), py::arg("base"), py::arg("t"));

    // ---- family instances ------------------------------------------------------
    py::class_<FamilyInstance>(m, "Instance")
        .def_property_readonly("H", &FamilyInstance::H)
        .def_property_readonly("proper", &FamilyInstance::proper)
        .def_property_readonly("normal_scale", &FamilyInstance::normal_scale)
        .def("jet",
             [](const FamilyInstance& inst, double t, double v, double w) {
                 return jet_to_py(inst.jet(t, v, w));
             })
        .def("normal",
             [](const FamilyInstance& inst, double t, double v, double w) {
                 Vec4d xi = inst.normal(t, v, w);
                 return std::vector<double>(xi.begin(), xi.end());
             })
        .def(
            "certify",
            [](const FamilyInstance& inst, std::vector<double> t, std::vector<double> v,
               std::vector<double> w, int threads) {
                if (t.size() != 3 || v.size() != 3 || w.size() != 3)
                    throw std::invalid_argument("ranges are [start, end, count]");
                GridSpec g{t[0], t[1], int(t[2]), v[0], v[1], int(v[2]), w[0], w[1], int(w[2])};
                Tolerances tol;
                CertifySummary s = certify_grid(inst, g, tol, threads);
                return json_to_py(certify_report(inst, g, tol, s, nullptr));
            },
            py::arg("t"), py::arg("v"), py::arg("w"), py::arg("threads") = 0)
        .def(
            "classify",
            [](const FamilyInstance& inst, double t, double v, double w, double step) {
                MeasuredK m = measure_difference_tensor(inst, t, v, w, step);
                py::dict d;
                d["frame"] = m.frame_type == MeasuredK::FrameType::Ortho ? "ortho" : "light";
                d["a4"] = m.a4;
                d["a6"] = m.a6;
                d["b4"] = m.b4;
                d["residual"] = m.residual;
                d["class"] = sym_class_name(classify_symmetry(m));
                return d;
            },
            py::arg("t"), py::arg("v"), py::arg("w"), py::arg("step") = 1e-2)
        .def(
            "audit",
            [](const FamilyInstance& inst, double t, double v, double w, double step) {
                AuditResult a = structure_equation_audit(inst, t, v, w, step);
                py::dict d;
                d["a22"] = a.a22;
                d["nu"] = a.nu;
                d["H"] = a.H;
                d["case"] = a.nu_case;
                d["dtt_residual"] = a.dtt_residual;
                d["dxi_residual"] = a.dxi_residual;
                return d;
            },
            py::arg("t"), py::arg("v"), py::arg("w"), py::arg("step") = 1e-3);

    m.def(
        "instance",
        [](const std::string& family, const std::string& base, py::object curve, double c,
           double H) {
            std::shared_ptr<const Curve> cv;
            if (!curve.is_none()) {
                if (py::isinstance<py::str>(curve))
                    cv = resolve_curve(curve.cast<std::string>());
                else
                    cv = curve.cast<std::shared_ptr<Curve>>();
            }
            return make_instance(family, base, cv, c, H);
        },
        py::arg("family"), py::arg("base"), py::arg("curve") = py::none(), py::arg("c") = 1.0,
        py::arg("H") = 0.0);

    m.def("families", [] {
        std::vector<std::string> out;
        for (FamilyKind k : {FamilyKind::C1Proper, FamilyKind::C1Improper, FamilyKind::C2,
                             FamilyKind::C3a, FamilyKind::C3b, FamilyKind::C1t8Proper,
                             FamilyKind::C1t8Improper, FamilyKind::C2t8, FamilyKind::C3t8a,
                             FamilyKind::C3t8b})
            out.push_back(family_name(k));
        return out;
    });
}
