#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include "affsym/certify.hpp"
#include "affsym/induced.hpp"
#include "affsym/measure.hpp"
#include "affsym/tensor_core.hpp"
#include "shipped_instances.hpp"

using namespace affsym;

namespace {
std::mt19937 rng(417);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct Sample {
    double t, v, w;
};
std::vector<Sample> grid_samples(const GridSpec& g, int n) {
    std::vector<Sample> out;
    for (int i = 0; i < n; ++i)
        out.push_back({uniform(g.t0 + 0.02, g.t1 - 0.02), uniform(g.v0 + 0.02, g.v1 - 0.02),
                       uniform(g.w0 + 0.02, g.w1 - 0.02)});
    return out;
}
} // namespace

TEST_CASE("induce: structure of the decomposition on a c3a point") {
    auto inst = shipped::c3a();
    Jet2Point jet = inst.jet(1.2, 0.3, -0.4);
    InducedData d = induce(jet, Vec4d{0, 0, 1, 0}); // unscaled direction
    CHECK(std::fabs(d.h[0][1]) < 1e-14);            // h_tv = 0
    CHECK(std::fabs(d.h[0][2]) < 1e-14);
    CHECK(std::fabs(d.h[0][0]) > 1e-3); // h_tt != 0
    CHECK(d.decomposition_residual < 1e-12);
}

TEST_CASE("induce: rank-deficient tangent basis is a transversality error") {
    auto inst = shipped::c3a();
    Jet2Point jet = inst.jet(1.0, 0.0, 0.0);
    jet.d1[2] = jet.d1[1]; // phi_w := phi_v
    CHECK_THROWS_AS(induce(jet, inst.normal(1.0, 0.0, 0.0)), TransversalityError);
}

TEST_CASE("decomposition reassembles exactly across families") {
    for (const auto& inst : {shipped::c1_proper_two_sheeted(), shipped::c2(), shipped::c3b(),
                             shipped::c1t8_proper(), shipped::c2t8()}) {
        GridSpec g = shipped::certification_grid(inst, 4, 4, 4);
        for (const auto& s : grid_samples(g, 6)) {
            InducedData d = induce(inst.jet(s.t, s.v, s.w), inst.normal(s.t, s.v, s.w));
            CHECK(d.decomposition_residual < 1e-10);
        }
    }
}

TEST_CASE("blaschke residual: certified normals vs scaled ones") {
    auto c1 = shipped::c1_proper_two_sheeted();
    GridSpec g = shipped::certification_grid(c1, 4, 4, 4);
    for (const auto& s : grid_samples(g, 10)) {
        InducedData d = induce(c1.jet(s.t, s.v, s.w), c1.normal(s.t, s.v, s.w));
        CHECK(blaschke_residual(d) < 1e-6);
    }

    auto c3b = shipped::c3b();
    GridSpec g3 = shipped::certification_grid(c3b, 4, 4, 4);
    for (const auto& s : grid_samples(g3, 10)) {
        InducedData d = induce(c3b.jet(s.t, s.v, s.w), c3b.normal(s.t, s.v, s.w));
        CHECK(blaschke_residual(d) < 1e-6);
    }

    // homogeneity audit: xi -> 2 xi scales det_wedge^2 by 4 and det h by 1/8
    Jet2Point jet = c1.jet(1.5, 0.1, 0.2);
    InducedData good = induce(jet, c1.normal(1.5, 0.1, 0.2));
    InducedData off = induce(jet, 2.0 * c1.normal(1.5, 0.1, 0.2));
    CHECK(off.det_wedge * off.det_wedge ==
          doctest::Approx(4 * good.det_wedge * good.det_wedge));
    CHECK(off.det_h == doctest::Approx(good.det_h / 8.0));
    CHECK(blaschke_residual(off) > 0.1);
}

TEST_CASE("shape operator equals H Id for proper and 0 for improper families") {
    for (const auto& inst :
         {shipped::c1_proper_two_sheeted(), shipped::c1_proper_titeica(), shipped::c2(),
          shipped::c1t8_proper(), shipped::c2t8(), shipped::c3a(), shipped::c3b(),
          shipped::c1_improper_two_sheeted()}) {
        GridSpec g = shipped::certification_grid(inst, 3, 3, 3);
        for (const auto& s : grid_samples(g, 4)) {
            Jet2Point jet = inst.jet(s.t, s.v, s.w);
            InducedData d = induce(jet, inst.normal(s.t, s.v, s.w));
            double tang = 0;
            Mat3d S = shape_operator(inst.normal_d1(s.t, s.v, s.w), jet, d, &tang);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(std::fabs(S[i][j] - (i == j ? inst.H() : 0.0)) < 1e-10);
            CHECK(tang < 1e-10);
        }
    }
}

TEST_CASE("perturbed normal loses equiaffinity") {
    auto inst = shipped::c3a();
    double t = 1.1, v = 0.2, w = -0.1;
    Jet2Point jet = inst.jet(t, v, w);
    Vec4d xi = inst.normal(t, v, w) + 0.01 * jet.d1[1];
    InducedData d = induce(jet, xi);
    // d(xi)/di = 0.01 * phi_{iv}
    std::array<Vec4d, 3> dxi = {0.01 * jet.d2[d2_tv], 0.01 * jet.d2[d2_vv],
                                0.01 * jet.d2[d2_vw]};
    double tang = 0;
    shape_operator(dxi, jet, d, &tang);
    CHECK(tang > 1e-4);
}

TEST_CASE("signature check") {
    CHECK(signature_check(Mat3d{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == Signature::LorentzOK);
    CHECK(signature_check(Mat3d{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == Signature::Definite);
    CHECK(signature_check(Mat3d{{{1e-12, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) ==
          Signature::Degenerate);
    CHECK(signature_check(Mat3d{{{-1, 0, 0}, {0, -2, 0}, {0, 0, 1}}}) == Signature::IndexTwo);

    // the S^3-style product (cos,sin) x sphere has a definite metric
    FamilySpec s3{FamilyKind::C1Proper, BaseSurface(BaseKind::Sphere),
                  make_builtin_curve("cos,sin"), 1.0, 1.0}; // forced H
    Jet2Point jet = build_immersion(s3, 0.8, 0.1, 0.2);
    InducedData d = induce(jet, -1.0 * jet.x);
    CHECK(signature_check(d.h) == Signature::Definite);
}

TEST_CASE("instances certify with Lorentz signature everywhere sampled") {
    for (const auto& inst :
         {shipped::c1_proper_two_sheeted(), shipped::c1_proper_titeica(), shipped::c2(),
          shipped::c3a(), shipped::c3b(), shipped::c1t8_proper(), shipped::c2t8(),
          shipped::c3t8a(), shipped::c1_improper_two_sheeted(), shipped::c1_improper_titeica()}) {
        GridSpec g = shipped::certification_grid(inst, 3, 3, 3);
        for (const auto& s : grid_samples(g, 5)) {
            InducedData d = induce(inst.jet(s.t, s.v, s.w), inst.normal(s.t, s.v, s.w));
            INFO(family_name(inst.spec().family), " over ", inst.spec().base.name());
            CHECK(signature_check(d.h) == Signature::LorentzOK);
        }
    }
}

TEST_CASE("measured difference tensor: quadric base gives a6 = 0") {
    auto inst = shipped::c1_proper_sphere();
    MeasuredK m = measure_difference_tensor(inst, 1.5, 0.1, 0.15, 1e-3);
    CHECK(m.frame_type == MeasuredK::FrameType::Ortho);
    CHECK(m.a4 > 0.01);
    CHECK(std::fabs(m.a6) < 1e-4);
    CHECK(m.residual < 1e-4);
    CHECK(m.apolarity < 1e-3);
    CHECK(classify_symmetry(m) == SymClass::SO2);

    auto two = shipped::c1_proper_two_sheeted();
    MeasuredK m2 = measure_difference_tensor(two, 1.5, 0.1, -0.2, 1e-3);
    CHECK(std::fabs(m2.a6) < 1e-4);
    CHECK(classify_symmetry(m2) == SymClass::SO2);

    // improper variant over a quadric base
    MeasuredK m3 =
        measure_difference_tensor(shipped::c1_improper_two_sheeted(), 1.5, 0.1, 0.2, 1e-3);
    CHECK(classify_symmetry(m3) == SymClass::SO2);
}

TEST_CASE("quadric representatives still certify as affine hyperspheres") {
    Tolerances tol;
    for (const auto& inst : {shipped::quadric_product(), shipped::quadric_cone()}) {
        GridSpec g = shipped::certification_grid(inst, 6, 5, 5);
        CertifySummary s = certify_grid(inst, g, tol, 1);
        INFO(family_name(inst.spec().family), " over ", inst.spec().base.name());
        CHECK(s.pass);
        CHECK(s.max_blaschke < 1e-6);
    }
}

TEST_CASE("quadric representatives have a vanishing difference tensor") {
    // (cosh,sinh) x two-sheeted parameterizes a quadric: no symmetry signal
    MeasuredK m = measure_difference_tensor(shipped::quadric_product(), 1.0, 0.1, 0.2, 1e-3);
    CHECK(std::fabs(m.a4) < 1e-5);
    CHECK(std::fabs(m.a6) < 1e-5);
    CHECK(classify_symmetry(m) == SymClass::Unknown);

    MeasuredK mc = measure_difference_tensor(shipped::quadric_cone(), 1.4, 0.2, 0.3, 1e-3);
    CHECK(std::fabs(mc.a4) < 1e-5);
    CHECK(classify_symmetry(mc) == SymClass::Unknown);
}

TEST_CASE("measured difference tensor: titeica base gives the Z3 class") {
    auto inst = shipped::c1_proper_titeica();
    MeasuredK m = measure_difference_tensor(inst, 1.5, 1.1, 0.9, 1e-2);
    CHECK(m.frame_type == MeasuredK::FrameType::Ortho);
    CHECK(m.a4 > 1e-3);
    CHECK(m.a6 > 1e-3);
    CHECK(m.residual < 1e-3);
    CHECK(classify_symmetry(m) == SymClass::Z3);

    // stability under halving the measurement step
    MeasuredK mh = measure_difference_tensor(inst, 1.5, 1.1, 0.9, 5e-3);
    CHECK(classify_symmetry(mh) == SymClass::Z3);
    CHECK(m.a6 == doctest::Approx(mh.a6).epsilon(1e-3));
}

TEST_CASE("measured difference tensor: lightcone path for the t8 families") {
    auto inst = shipped::c1t8_proper();
    MeasuredK m = measure_difference_tensor(inst, 1.5, 0.1, 0.2, 1e-3);
    CHECK(m.frame_type == MeasuredK::FrameType::Light);
    CHECK(m.b4 > 1e-3);
    CHECK(m.residual < 1e-4);
    CHECK(m.apolarity < 1e-3);
    CHECK(classify_symmetry(m) == SymClass::SO11);

    auto c2 = shipped::c2t8();
    MeasuredK m2 = measure_difference_tensor(c2, 1.4, 0.3, -0.2, 1e-3);
    CHECK(m2.frame_type == MeasuredK::FrameType::Light);
    CHECK(classify_symmetry(m2) == SymClass::SO11);
}

TEST_CASE("remaining t8 families certify and classify") {
    // improper product over the one-sheeted hyperboloid
    SynthesisSpec s;
    s.family = FamilyKind::C1t8Improper;
    s.gamma1 = Gamma1Kind::Identity;
    s.t0 = 0.8;
    s.g2_0 = 2.0;
    s.g2p_0 = -0.3;
    s.t_end = 2.1;
    s.steps = 13000;
    s.branch = SignBranch::Minus;
    auto curve = synthesize_curve(s);
    FamilySpec spec{FamilyKind::C1t8Improper, BaseSurface(BaseKind::OneSheetedHyperboloid),
                    curve, 1.0, 0.0};
    auto inst = FamilyInstance::create(spec, 1.5, 0.0, 0.0);
    CHECK(!inst.proper());
    Tolerances tol;
    GridSpec g{1.1, 1.9, 4, -0.5, 0.5, 4, -0.8, 0.8, 4};
    CertifySummary sum = certify_grid(inst, g, tol, 1);
    CHECK(sum.pass);
    MeasuredK m = measure_difference_tensor(inst, 1.5, 0.1, 0.2, 1e-3);
    CHECK(m.frame_type == MeasuredK::FrameType::Light);
    CHECK(classify_symmetry(m) == SymClass::SO11);

    // the second improper cone form over the hyperbolic paraboloid
    FamilySpec bspec{FamilyKind::C3t8b, BaseSurface(BaseKind::HyperbolicParaboloid), nullptr,
                     1.0, 0.0};
    auto binst = FamilyInstance::create(bspec, 1.0, 0.0, 0.0);
    GridSpec bg{0.3, 2.5, 5, -0.8, 0.8, 4, -0.8, 0.8, 4};
    CertifySummary bsum = certify_grid(binst, bg, tol, 1);
    CHECK(bsum.pass);
    MeasuredK bm = measure_difference_tensor(binst, 1.0, 0.2, -0.1, 1e-3);
    CHECK(classify_symmetry(bm) == SymClass::SO11);
}

TEST_CASE("the second improper cone form carries its normal on the fourth axis") {
    // with xi along (0,0,1,0) the volume ratio depends on t (so no constant
    // scale can satisfy the Blaschke condition); along (0,0,0,1) it does not
    auto inst = shipped::c3b();
    auto ratio = [&](const Vec4d& dir, double t) {
        InducedData d = induce(inst.jet(t, 0.2, -0.1), dir);
        return std::fabs(d.det_h) / (d.det_wedge * d.det_wedge);
    };
    double bad1 = ratio({0, 0, 1, 0}, 0.7), bad2 = ratio({0, 0, 1, 0}, 1.4);
    CHECK(std::fabs(bad1 / bad2 - 1.0) > 0.5);
    double good1 = ratio({0, 0, 0, 1}, 0.7), good2 = ratio({0, 0, 0, 1}, 1.4);
    CHECK(good1 == doctest::Approx(good2).epsilon(1e-10));
}

TEST_CASE("classification thresholds") {
    MeasuredK m;
    m.frame_type = MeasuredK::FrameType::Ortho;
    m.residual = 0;
    m.a4 = 0.7;
    m.a6 = 1e-9;
    CHECK(classify_symmetry(m) == SymClass::SO2);
    m.a4 = 0.5;
    m.a6 = 0.3;
    CHECK(classify_symmetry(m) == SymClass::Z3);
    m.a4 = 1e-9;
    m.a6 = 0.4;
    CHECK(classify_symmetry(m) == SymClass::S3);
    m.frame_type = MeasuredK::FrameType::Light;
    m.b4 = 0.4;
    CHECK(classify_symmetry(m) == SymClass::SO11);
    m.residual = 1.0; // too far from any canonical form
    CHECK(classify_symmetry(m) == SymClass::Unknown);
}

TEST_CASE("structure equation audit assigns the nu-trichotomy cases") {
    // case 3: improper with a22 = +-a4
    for (const auto& inst : {shipped::c3a(), shipped::c3b()}) {
        AuditResult a = structure_equation_audit(inst, 1.0, 0.2, -0.1, 1e-3);
        INFO(family_name(inst.spec().family));
        CHECK(a.H == 0.0);
        CHECK(std::fabs(a.nu) < 1e-4);
        CHECK(a.nu_case == 3);
        CHECK(a.dtt_residual < 1e-5);
        CHECK(a.dxi_residual < 1e-12);
    }

    // case 2: proper cone
    AuditResult c2 = structure_equation_audit(shipped::c2(), 1.4, 0.2, 0.3, 1e-3);
    CHECK(c2.H != 0.0);
    CHECK(std::fabs(c2.nu) < 1e-4);
    CHECK(c2.nu_case == 2);
    CHECK(c2.dtt_residual < 1e-5);

    // case 1: warped product over an affine sphere, nu bounded away from zero
    auto c1 = shipped::c1_proper_two_sheeted();
    double prev_sign = 0;
    for (double t : {1.1, 1.4, 1.7}) {
        AuditResult a = structure_equation_audit(c1, t, 0.1, 0.2, 1e-3);
        CHECK(a.nu_case == 1);
        CHECK(std::fabs(a.nu) > 1e-3);
        double s = a.nu > 0 ? 1.0 : -1.0;
        if (prev_sign != 0) CHECK(s == prev_sign);
        prev_sign = s;
        // second-order in the step; the warp varies fastest near t0
        CHECK(a.dtt_residual < 2e-4);
    }

    // sign relations of case 3: a22 = a4 for the first form, -a4 for the second
    AuditResult a3a = structure_equation_audit(shipped::c3a(), 1.0, 0.2, -0.1, 1e-3);
    CHECK(a3a.a22 == doctest::Approx(a3a.k.a4).epsilon(1e-3));
    AuditResult a3b = structure_equation_audit(shipped::c3b(), 1.0, 0.2, -0.1, 1e-3);
    CHECK(a3b.a22 == doctest::Approx(-a3b.k.a4).epsilon(1e-3));
}

TEST_CASE("measured scalar curvature satisfies kappa = H + J") {
    struct Probe {
        FamilyInstance inst;
        double v, w;
    };
    for (const auto& pr : {Probe{shipped::c1_proper_two_sheeted(), 0.1, 0.2},
                           Probe{shipped::c1_proper_titeica(), 1.1, 0.9}}) {
        for (double t : {1.2, 1.5, 1.8}) {
            MeasuredK m = measure_difference_tensor(pr.inst, t, pr.v, pr.w, 1e-3);
            double J = pick_invariant(CanonicalK<double>::ortho(m.a4, m.a6),
                                      FrameSignature::Orthonormal);
            double kappa = measured_scalar_curvature(pr.inst, t, pr.v, pr.w, 2.5e-3);
            INFO(family_name(pr.inst.spec().family), " at t=", t);
            CHECK(std::fabs(kappa - (pr.inst.H() + J)) < 5e-3);
        }
    }
}

TEST_CASE("certify_grid aggregates and passes on shipped instances") {
    Tolerances tol;
    auto inst = shipped::c1_proper_two_sheeted();
    GridSpec g = shipped::certification_grid(inst, 8, 6, 6);
    std::vector<PointRecord> pts;
    CertifySummary s = certify_grid(inst, g, tol, 2, &pts);
    CHECK(s.total == 8 * 6 * 6);
    CHECK(s.transversal == s.total);
    CHECK(s.pass);
    CHECK(s.max_S_residual < 1e-10);
    CHECK(s.blaschke_fraction == 1.0);
    CHECK(pts.size() == s.total);

    // the forced degenerate product is rejected through the signature
    FamilySpec bad{FamilyKind::C1Proper, BaseSurface(BaseKind::Sphere),
                   make_builtin_curve("cos,sin"), 1.0, 1.0};
    auto badinst = FamilyInstance::create(bad, 0.8, 0.0, 0.0);
    GridSpec bg{0.6, 1.0, 3, -0.2, 0.2, 3, -0.2, 0.2, 3};
    CertifySummary sb = certify_grid(badinst, bg, tol, 1);
    CHECK(!sb.pass);
    CHECK(sb.lorentz == 0);
}

TEST_CASE("certify_grid can attach per-point classification") {
    Tolerances tol;
    auto inst = shipped::c3a();
    GridSpec g{0.5, 1.5, 3, -0.3, 0.3, 3, -0.3, 0.3, 3};
    std::vector<PointRecord> pts;
    CertifySummary s = certify_grid(inst, g, tol, 1, &pts, true);
    CHECK(s.pass);
    for (const auto& p : pts) {
        CHECK(p.classified);
        CHECK(p.classify_error.empty());
        CHECK(p.cls == SymClass::SO2);
        CHECK(p.nu_case == 3);
        CHECK(std::fabs(p.nu) < 1e-4);
    }
}

TEST_CASE("classify_grid is stable under step halving") {
    Tolerances tol;
    for (const auto& [inst, expect] :
         std::vector<std::pair<FamilyInstance, SymClass>>{
             {shipped::c1_proper_two_sheeted(), SymClass::SO2},
             {shipped::c1_proper_titeica(), SymClass::Z3},
             {shipped::c1t8_proper(), SymClass::SO11},
             {shipped::c3a(), SymClass::SO2},
         }) {
        GridSpec g = shipped::certification_grid(inst, 3, 3, 3);
        // shrink to stay away from chart borders when stencils reach out
        double mt = (g.t0 + g.t1) / 2, mv = (g.v0 + g.v1) / 2, mw = (g.w0 + g.w1) / 2;
        GridSpec inner{mt - 0.2, mt + 0.2, 2, mv - 0.1, mv + 0.1, 2, mw - 0.1, mw + 0.1, 2};
        for (double step : {1e-2, 5e-3}) {
            Tolerances t2 = tol;
            t2.classify_step = step;
            auto recs = classify_grid(inst, inner, t2, 2);
            for (const auto& r : recs) {
                INFO(family_name(inst.spec().family), " step ", step, " at t=", r.t);
                CHECK(r.error.empty());
                CHECK(r.cls == expect);
            }
        }
    }
}
