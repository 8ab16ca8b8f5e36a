#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include "affsym/base_surface.hpp"
#include "affsym/conditions.hpp"
#include "affsym/family.hpp"
#include "shipped_instances.hpp"

using namespace affsym;

namespace {
std::mt19937 rng(991);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
} // namespace

TEST_CASE("base jets at reference points") {
    BaseSurface ep(BaseKind::EllipticParaboloid);
    SurfaceJet j = ep.jet(0, 0);
    CHECK(j.x == Vec3d{0, 0, 0});
    GraphJet g = ep.graph_jet(0, 0);
    CHECK(g.fvv == 1.0);
    CHECK(g.fww == 1.0);
    CHECK(g.fvw == 0.0);

    BaseSurface ts(BaseKind::TwoSheetedHyperboloid);
    CHECK(ts.jet(0, 0).x == Vec3d{0, 0, 1});

    // the titeica patch is the graph (1,1)->(1,1,1) up to the global homothety
    BaseSurface ti(BaseKind::Titeica);
    double k = ti.titeica_scale();
    SurfaceJet tj = ti.jet(1, 1);
    CHECK(tj.x[0] == doctest::Approx(k));
    CHECK(tj.x[1] == doctest::Approx(k));
    CHECK(tj.x[2] == doctest::Approx(k));
    // k^6 theta^2 = |det g| at (1,1) gives k = 3^(-1/2)
    CHECK(k == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(ti.jet(-1, 1), std::domain_error);
    CHECK_THROWS_AS(BaseSurface(BaseKind::Sphere).jet(0.9, 0.9), std::domain_error);
}

TEST_CASE("graph bases have unimodular Hessian") {
    for (BaseKind k : {BaseKind::EllipticParaboloid, BaseKind::HyperbolicParaboloid}) {
        BaseSurface b(k);
        for (int i = 0; i < 25; ++i) {
            GraphJet g = b.graph_jet(uniform(-3, 3), uniform(-3, 3));
            CHECK(std::fabs(g.fvv * g.fww - g.fvw * g.fvw) == 1.0);
        }
    }
}

TEST_CASE("proper bases satisfy their Blaschke normalization exactly") {
    struct Probe {
        BaseKind kind;
        double v0, v1, w0, w1;
    };
    for (const Probe& p : {Probe{BaseKind::Sphere, -0.6, 0.6, -0.6, 0.6},
                           Probe{BaseKind::TwoSheetedHyperboloid, -1.5, 1.5, -1.5, 1.5},
                           Probe{BaseKind::OneSheetedHyperboloid, -0.7, 0.7, -1.2, 1.2},
                           Probe{BaseKind::Titeica, 0.4, 2.5, 0.4, 2.5}}) {
        BaseSurface b(p.kind);
        for (int i = 0; i < 20; ++i) {
            double v = uniform(p.v0, p.v1), w = uniform(p.w0, p.w1);
            if (!b.in_domain(v, w)) continue;
            SurfaceJet j = b.jet(v, w);
            Vec3d xi = double(-b.eps1()) * j.x;
            Surface2DInduced d = induce2d(j, xi);
            INFO(b.name(), " at (", v, ",", w, ")");
            CHECK(blaschke_residual2d(d) < 1e-12);
            if (b.definite_metric()) {
                CHECK(d.g_vv > 0);
                CHECK(d.det_g > 0);
            } else {
                CHECK(d.det_g < 0);
            }
        }
    }
}

TEST_CASE("base jets agree with finite differences") {
    const double h = 1e-5;
    for (BaseKind k : {BaseKind::Sphere, BaseKind::OneSheetedHyperboloid, BaseKind::Titeica,
                       BaseKind::TwoSheetedHyperboloid}) {
        BaseSurface b(k);
        auto [vc, wc] = b.default_center();
        double v = vc + 0.2, w = wc + 0.15;
        SurfaceJet j = b.jet(v, w);
        SurfaceJet jp = b.jet(v + h, w), jm = b.jet(v - h, w);
        for (int i = 0; i < 3; ++i) {
            CHECK(j.xv[i] == doctest::Approx((jp.x[i] - jm.x[i]) / (2 * h)).epsilon(1e-7));
            CHECK(j.xvv[i] ==
                  doctest::Approx((jp.x[i] - 2 * j.x[i] + jm.x[i]) / (h * h)).epsilon(1e-4));
        }
        SurfaceJet jw = b.jet(v, w + h), jmw = b.jet(v, w - h);
        for (int i = 0; i < 3; ++i)
            CHECK(j.xw[i] == doctest::Approx((jw.x[i] - jmw.x[i]) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("proper product condition: hyperbolic pass, elliptic mismatch") {
    auto coshsinh = make_builtin_curve("cosh,sinh");
    ConditionResult ok = check_condition_c1_proper(*coshsinh, -1, 1.0);
    double s1 = std::sinh(1.0);
    CHECK(ok.pass);
    CHECK(ok.lhs == doctest::Approx(s1 * s1).epsilon(1e-12));
    CHECK(ok.rhs == doctest::Approx(s1 * s1).epsilon(1e-12));

    auto cossin = make_builtin_curve("cos,sin");
    ConditionResult bad = check_condition_c1_proper(*cossin, +1, 1.0);
    double sn = std::sin(1.0);
    CHECK(!bad.pass);
    CHECK(bad.lhs == doctest::Approx(sn * sn).epsilon(1e-12));
    CHECK(bad.rhs == doctest::Approx(-sn * sn).epsilon(1e-12));

    // gamma2 = 0: lhs vanishes identically
    ConditionResult zero = check_condition_c1_proper(*cossin, +1, 0.0);
    CHECK(!zero.pass);
    CHECK(zero.reason == "lhs zero");
}

TEST_CASE("improper product condition") {
    auto texp = make_builtin_curve("t,exp");
    ConditionResult r = check_condition_c1_improper(*texp, +1, 1.0);
    CHECK(!r.pass); // e^(7t) = e^t only at t = 0
    CHECK(r.lhs == doctest::Approx(std::exp(7.0)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    // gamma2' = 0 at the crest of cos
    auto cossin = make_builtin_curve("cos,sin");
    ConditionResult flat = check_condition_c1_improper(*cossin, +1, std::acos(-1.0) / 2);
    CHECK(!flat.pass);
    CHECK(flat.reason == "lhs zero");
}

TEST_CASE("cone condition and its exact solution") {
    auto exact = make_builtin_curve("c2-exact");
    for (double t : {1.0, 1.3, 1.7, 2.0, 2.9}) {
        ConditionResult r = check_condition_c2(*exact, t);
        CHECK(r.pass);
        CHECK(r.residual < 1e-13);
        CHECK(r.lhs == doctest::Approx(std::pow(t, -3.0)).epsilon(1e-12));
    }
    auto cossin = make_builtin_curve("cos,sin");
    // gamma1 = 0: the left side vanishes
    ConditionResult z = check_condition_c2(*cossin, std::acos(-1.0) / 2);
    CHECK(!z.pass);
    CHECK(z.reason == "lhs zero");
    // gamma1' = 0 with gamma1 != 0: the sign factor degenerates
    ConditionResult deg = check_condition_c2(*cossin, std::acos(-1.0));
    CHECK(!deg.pass);
    CHECK(deg.reason == "sign factor degenerate (gamma1 gamma1' = 0)");
}

TEST_CASE("t8 conditions use the absolute value") {
    auto coshsinh = make_builtin_curve("cosh,sinh");
    ConditionResult a = check_condition_t8(FamilyKind::C1t8Proper, *coshsinh, 1.0);
    double s1 = std::sinh(1.0);
    CHECK(a.pass);
    CHECK(a.lhs == doctest::Approx(s1 * s1));

    // the elliptic pair passes here because the sign factor is gone
    auto cossin = make_builtin_curve("cos,sin");
    ConditionResult b = check_condition_t8(FamilyKind::C1t8Proper, *cossin, 1.0);
    double sn = std::sin(1.0);
    CHECK(b.pass);
    CHECK(b.lhs == doctest::Approx(sn * sn));
    CHECK(b.rhs == doctest::Approx(sn * sn));

    // gamma1' = 0: both sides collapse
    ConditionResult z = check_condition_t8(FamilyKind::C1t8Proper, *cossin, 0.0);
    CHECK(!z.pass);

    ConditionResult c2t8 = check_condition_t8(FamilyKind::C2t8, *make_builtin_curve("c2-exact"), 1.5);
    CHECK(c2t8.pass);
    CHECK(c2t8.residual < 1e-13);
}

TEST_CASE("synthesize: closure and the known exact solutions") {
    // cone family with gamma1 = t reproduces gamma2 = -(t^2+1)/(2t)
    SynthesisSpec s;
    s.family = FamilyKind::C2;
    s.gamma1 = Gamma1Kind::Identity;
    s.t0 = 1.0;
    s.g2_0 = -1.0;
    s.g2p_0 = 0.0;
    s.t_end = 2.0;
    s.steps = 10000;
    auto curve = synthesize_curve(s);
    for (size_t i = 0; i < curve->node_count(); i += 500) {
        double t = curve->node_time(i);
        double exact = -(t * t + 1) / (2 * t);
        CHECK(curve->eval(t).g2 == doctest::Approx(exact).epsilon(1e-10));
    }
    // closure: the sampled curve re-passes its own condition at interior nodes
    double worst = 0;
    for (size_t i = 1; i + 1 < curve->node_count(); i += 7) {
        ConditionResult r = check_condition_c2(*curve, curve->node_time(i));
        CHECK(r.pass);
        worst = std::max(worst, r.residual);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("synthesize: proper product family from exact hyperbolic seeds") {
    SynthesisSpec s;
    s.family = FamilyKind::C1Proper;
    s.gamma1 = Gamma1Kind::Cosh;
    s.t0 = 1.0;
    s.g2_0 = std::sinh(1.0);
    s.g2p_0 = std::cosh(1.0);
    s.t_end = 2.0;
    s.steps = 10000;
    s.eps1 = -1;
    auto curve = synthesize_curve(s);
    for (size_t i = 0; i < curve->node_count(); i += 1000) {
        double t = curve->node_time(i);
        CHECK(curve->eval(t).g2 == doctest::Approx(std::sinh(t)).epsilon(1e-6));
    }
}

TEST_CASE("synthesize: improper family closure at 1e-10") {
    SynthesisSpec s;
    s.family = FamilyKind::C1Improper;
    s.gamma1 = Gamma1Kind::Identity;
    s.t0 = 1.0;
    s.g2_0 = 2.0;
    s.g2p_0 = -0.5;
    s.t_end = 2.0;
    s.steps = 100000; // fine grid so the differenced gamma2'' is 1e-10-accurate
    s.eps1 = -1;
    auto curve = synthesize_curve(s);
    for (size_t i = 1; i + 1 < curve->node_count(); i += 997) {
        ConditionResult r = check_condition_c1_improper(*curve, -1, curve->node_time(i));
        CHECK(r.pass);
        CHECK(r.residual < 1e-10);
    }
}

TEST_CASE("synthesize: error paths") {
    SynthesisSpec s;
    s.family = FamilyKind::C2;
    s.steps = 0;
    CHECK_THROWS_AS(synthesize_curve(s), std::invalid_argument);

    // gamma1' = cosh' vanishes at t = 0
    SynthesisSpec g;
    g.family = FamilyKind::C1Proper;
    g.gamma1 = Gamma1Kind::Cosh;
    g.t0 = -0.5;
    g.t_end = 0.5;
    g.g2_0 = 1.0;
    g.g2p_0 = 1.0;
    g.steps = 100;
    g.eps1 = -1;
    CHECK_THROWS_AS(synthesize_curve(g), std::runtime_error);

    // gamma2 crosses zero -> the sign factor flips
    SynthesisSpec f;
    f.family = FamilyKind::C1Improper;
    f.gamma1 = Gamma1Kind::Identity;
    f.t0 = 1.0;
    f.g2_0 = 0.1;
    f.g2p_0 = -1.0;
    f.t_end = 2.0;
    f.steps = 1000;
    f.eps1 = 1;
    CHECK_THROWS_WITH_AS(synthesize_curve(f), doctest::Contains("sign factor"),
                         std::runtime_error);

    // C3 families have no curve condition to integrate
    SynthesisSpec c3;
    c3.family = FamilyKind::C3a;
    c3.steps = 10;
    CHECK_THROWS_AS(synthesize_curve(c3), std::invalid_argument);
}

TEST_CASE("condition checks are invariant under parameter shifts") {
    SynthesisSpec s;
    s.family = FamilyKind::C2;
    s.steps = 2000;
    auto curve = synthesize_curve(s);
    auto shifted = curve->shifted(0.37);
    for (double t : {1.1, 1.5, 1.9}) {
        ConditionResult a = check_condition_c2(*curve, t);
        ConditionResult b = check_condition_c2(*shifted, t + 0.37);
        CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-14));
        CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-14));
    }
}

TEST_CASE("immersion positions by direct substitution") {
    FamilySpec c3a{FamilyKind::C3a, BaseSurface(BaseKind::EllipticParaboloid), nullptr, 1.0, 0};
    Jet2Point p = build_immersion(c3a, 1.0, 0.0, 0.0);
    CHECK(p.x == Vec4d{0, 0, -1, 1});

    FamilySpec c3b{FamilyKind::C3b, BaseSurface(BaseKind::EllipticParaboloid), nullptr, 1.0, 0};
    Jet2Point q = build_immersion(c3b, 1.0, 1.0, 1.0);
    CHECK(q.x == Vec4d{1, 1, 2, 1});

    FamilySpec c1{FamilyKind::C1Proper, BaseSurface(BaseKind::TwoSheetedHyperboloid),
                  make_builtin_curve("cosh,sinh"), 1.0, 0};
    double t = 0.7, v = 0.2, w = -0.3;
    SurfaceJet b = c1.base.jet(v, w);
    Jet2Point r = build_immersion(c1, t, v, w);
    CHECK(r.x[0] == doctest::Approx(std::cosh(t)));
    for (int i = 0; i < 3; ++i) CHECK(r.x[i + 1] == doctest::Approx(std::sinh(t) * b.x[i]));
    CHECK(r.d1[0][0] == doctest::Approx(std::sinh(t)));
    for (int i = 0; i < 3; ++i)
        CHECK(r.d1[0][i + 1] == doctest::Approx(std::cosh(t) * b.x[i]));
}

TEST_CASE("analytic jets match central differences of the position map") {
    const double h = 1e-5;
    std::vector<FamilyInstance> list;
    list.push_back(shipped::c1_proper_two_sheeted());
    list.push_back(shipped::c2());
    list.push_back(shipped::c3a());
    list.push_back(shipped::c3b());
    list.push_back(shipped::c1t8_proper());
    list.push_back(shipped::c1_proper_titeica());

    for (const auto& inst : list) {
        GridSpec g = shipped::certification_grid(inst, 3, 3, 3);
        for (int trial = 0; trial < 5; ++trial) {
            double t = uniform(g.t0 + 0.05, g.t1 - 0.05);
            double v = uniform(g.v0 + 0.05, g.v1 - 0.05);
            double w = uniform(g.w0 + 0.05, g.w1 - 0.05);
            Jet2Point j = inst.jet(t, v, w);
            const double dirs[3][3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
            for (int d = 0; d < 3; ++d) {
                Jet2Point jp = inst.jet(t + dirs[d][0], v + dirs[d][1], w + dirs[d][2]);
                Jet2Point jm = inst.jet(t - dirs[d][0], v - dirs[d][1], w - dirs[d][2]);
                for (int i = 0; i < 4; ++i) {
                    double fd = (jp.x[i] - jm.x[i]) / (2 * h);
                    double scale = std::max({1.0, std::fabs(fd)});
                    INFO(family_name(inst.spec().family), " d1 axis ", d);
                    CHECK(std::fabs(j.d1[d][i] - fd) / scale < 1e-7);
                    double fd2 = (jp.d1[d][i] - jm.d1[d][i]) / (2 * h);
                    static const int diag[3] = {d2_tt, d2_vv, d2_ww};
                    // sampled-curve jets are Hermite-interpolated between
                    // nodes, which caps the agreement of second derivatives
                    CHECK(std::fabs(j.d2[diag[d]][i] - fd2) / std::max(1.0, std::fabs(fd2)) <
                          5e-7);
                }
            }
            // mixed slots: difference the analytic first partials
            Jet2Point jvp = inst.jet(t, v + h, w), jvm = inst.jet(t, v - h, w);
            Jet2Point jwp = inst.jet(t, v, w + h), jwm = inst.jet(t, v, w - h);
            for (int i = 0; i < 4; ++i) {
                double fd_tv = (jvp.d1[0][i] - jvm.d1[0][i]) / (2 * h);
                CHECK(std::fabs(j.d2[d2_tv][i] - fd_tv) / std::max(1.0, std::fabs(fd_tv)) < 1e-7);
                double fd_tw = (jwp.d1[0][i] - jwm.d1[0][i]) / (2 * h);
                CHECK(std::fabs(j.d2[d2_tw][i] - fd_tw) / std::max(1.0, std::fabs(fd_tw)) < 1e-7);
                double fd_vw = (jwp.d1[1][i] - jwm.d1[1][i]) / (2 * h);
                CHECK(std::fabs(j.d2[d2_vw][i] - fd_vw) / std::max(1.0, std::fabs(fd_vw)) < 1e-7);
            }
        }
    }
}

TEST_CASE("family validation rejects bad combinations") {
    auto curve = make_builtin_curve("cosh,sinh");
    CHECK_THROWS_AS(validate_family_spec(FamilySpec{FamilyKind::C2, BaseSurface(BaseKind::Sphere),
                                                    curve, 1.0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        validate_family_spec(FamilySpec{FamilyKind::C3a,
                                        BaseSurface(BaseKind::EllipticParaboloid), nullptr, 0.0, 0}),
        std::invalid_argument);
    CHECK_THROWS_AS(validate_family_spec(FamilySpec{FamilyKind::C1Proper,
                                                    BaseSurface(BaseKind::TwoSheetedHyperboloid),
                                                    nullptr, 1.0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_family_spec(FamilySpec{FamilyKind::C3b,
                                                    BaseSurface(BaseKind::EllipticParaboloid),
                                                    nullptr, 1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_family_spec(FamilySpec{FamilyKind::C1t8Proper,
                                                    BaseSurface(BaseKind::Sphere), curve, 1.0, 0}),
                    std::invalid_argument);
    // C3 domain: t > 0 only
    FamilySpec c3a{FamilyKind::C3a, BaseSurface(BaseKind::EllipticParaboloid), nullptr, 1.0, 0};
    CHECK_THROWS_AS(build_immersion(c3a, -1.0, 0, 0), std::domain_error);
}

TEST_CASE("instance normalization: H and the improper normal scales") {
    // for (cosh,sinh) x two-sheeted, h_tt = -1/H: the (-,+,+) convention
    // forces H = +1 (hand check at t=1, v=w=0: phi_tt = phi decomposes with
    // xi-coefficient -1/H)
    auto c1 = shipped::c1_proper_two_sheeted();
    CHECK(c1.H() == 1.0);

    auto c2i = shipped::c2();
    CHECK(c2i.H() == 1.0);

    auto c3a = shipped::c3a();
    CHECK(c3a.H() == 0.0);
    // lambda^5 = 12 c at c = 1, positive orientation for the Lorentz metric
    CHECK(c3a.normal_scale() == doctest::Approx(std::pow(12.0, 0.2)).epsilon(1e-12));

    auto c3b = shipped::c3b();
    CHECK(c3b.normal_scale() < 0);
    CHECK(std::fabs(c3b.normal_scale()) ==
          doctest::Approx(std::pow(64.0 / 81.0, 0.2)).epsilon(1e-12));

    auto c3t8a = shipped::c3t8a();
    CHECK(c3t8a.normal_scale() < 0);
    CHECK(std::fabs(c3t8a.normal_scale()) == doctest::Approx(std::pow(12.0, 0.2)).epsilon(1e-12));

    // synthesized curves satisfy the condition exactly, so lambda = 1
    auto c1i = shipped::c1_improper_two_sheeted();
    CHECK(std::fabs(std::fabs(c1i.normal_scale()) - 1.0) < 1e-5);
}
