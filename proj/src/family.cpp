#include "affsym/family.hpp"
#include <cmath>
#include <stdexcept>
#include "affsym/induced.hpp"

namespace affsym {

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::C1Proper: return "c1-proper";
        case FamilyKind::C1Improper: return "c1-improper";
        case FamilyKind::C2: return "c2";
        case FamilyKind::C3a: return "c3a";
        case FamilyKind::C3b: return "c3b";
        case FamilyKind::C1t8Proper: return "c1t8-proper";
        case FamilyKind::C1t8Improper: return "c1t8-improper";
        case FamilyKind::C2t8: return "c2t8";
        case FamilyKind::C3t8a: return "c3t8a";
        case FamilyKind::C3t8b: return "c3t8b";
    }
    return "?";
}

FamilyKind family_from_name(const std::string& name) {
    for (FamilyKind k : {FamilyKind::C1Proper, FamilyKind::C1Improper, FamilyKind::C2,
                         FamilyKind::C3a, FamilyKind::C3b, FamilyKind::C1t8Proper,
                         FamilyKind::C1t8Improper, FamilyKind::C2t8, FamilyKind::C3t8a,
                         FamilyKind::C3t8b})
        if (family_name(k) == name) return k;
    throw std::invalid_argument("unknown family: " + name);
}

bool family_is_proper(FamilyKind k) {
    switch (k) {
        case FamilyKind::C1Proper:
        case FamilyKind::C2:
        case FamilyKind::C1t8Proper:
        case FamilyKind::C2t8: return true;
        default: return false;
    }
}

bool family_is_t8(FamilyKind k) {
    switch (k) {
        case FamilyKind::C1t8Proper:
        case FamilyKind::C1t8Improper:
        case FamilyKind::C2t8:
        case FamilyKind::C3t8a:
        case FamilyKind::C3t8b: return true;
        default: return false;
    }
}

bool family_uses_curve(FamilyKind k) {
    switch (k) {
        case FamilyKind::C3a:
        case FamilyKind::C3b:
        case FamilyKind::C3t8a:
        case FamilyKind::C3t8b: return false;
        default: return true;
    }
}

namespace {

enum class Form { Product, Cone, C3a, C3b };

Form form_of(FamilyKind k) {
    switch (k) {
        case FamilyKind::C1Proper:
        case FamilyKind::C1Improper:
        case FamilyKind::C1t8Proper:
        case FamilyKind::C1t8Improper: return Form::Product;
        case FamilyKind::C2:
        case FamilyKind::C2t8: return Form::Cone;
        case FamilyKind::C3a:
        case FamilyKind::C3t8a: return Form::C3a;
        default: return Form::C3b;
    }
}

} // namespace

void validate_family_spec(const FamilySpec& spec) {
    FamilyKind k = spec.family;
    const BaseSurface& b = spec.base;
    bool t8 = family_is_t8(k);
    if (form_of(k) == Form::Product) {
        if (!b.is_proper())
            throw std::invalid_argument(family_name(k) + " needs a proper affine sphere base, " +
                                        b.name() + " is an improper graph");
        if (!t8 && !b.definite_metric())
            throw std::invalid_argument(family_name(k) +
                                        " needs a definite base (sphere, two-sheeted, titeica); "
                                        "use the t8 families for " + b.name());
        if (t8 && b.definite_metric())
            throw std::invalid_argument(family_name(k) + " needs the one-sheeted hyperboloid, not " +
                                        b.name());
    } else {
        if (!b.is_graph())
            throw std::invalid_argument(family_name(k) +
                                        " needs a graph improper affine sphere base, not " +
                                        b.name());
        if (!t8 && !b.definite_metric())
            throw std::invalid_argument(family_name(k) + " needs the elliptic paraboloid; "
                                        "use the t8 families for " + b.name());
        if (t8 && b.definite_metric())
            throw std::invalid_argument(family_name(k) + " needs the hyperbolic paraboloid, not " +
                                        b.name());
    }
    if (family_uses_curve(k)) {
        if (!spec.curve) throw std::invalid_argument(family_name(k) + " needs a curve");
    } else {
        if (!(spec.c > 0))
            throw std::invalid_argument(family_name(k) + " needs a constant c > 0");
    }
    if (family_is_proper(k)) {
        if (spec.H != 0.0 && spec.H != 1.0 && spec.H != -1.0)
            throw std::invalid_argument("H must be -1, +1 or 0 (auto) for proper families");
    } else if (spec.H != 0.0) {
        throw std::invalid_argument(family_name(k) + " is improper; H must be 0");
    }
}

bool family_in_domain(const FamilySpec& spec, double t, double v, double w) {
    if (!spec.base.in_domain(v, w)) return false;
    switch (form_of(spec.family)) {
        case Form::C3a:
        case Form::C3b: return t > 0;
        default: {
            auto [lo, hi] = spec.curve->domain();
            return t >= lo && t <= hi;
        }
    }
}

Jet2Point build_immersion(const FamilySpec& spec, double t, double v, double w) {
    if (!family_in_domain(spec, t, v, w))
        throw std::domain_error(family_name(spec.family) + ": parameter point (" +
                                std::to_string(t) + "," + std::to_string(v) + "," +
                                std::to_string(w) + ") out of domain");
    Jet2Point out;
    switch (form_of(spec.family)) {
        case Form::Product: {
            CurveJet g = spec.curve->eval(t);
            SurfaceJet b = spec.base.jet(v, w);
            auto emb = [](double first, const Vec3d& rest) -> Vec4d {
                return {first, rest[0], rest[1], rest[2]};
            };
            out.x = emb(g.g1, g.g2 * b.x);
            out.d1[0] = emb(g.g1p, g.g2p * b.x);
            out.d1[1] = emb(0, g.g2 * b.xv);
            out.d1[2] = emb(0, g.g2 * b.xw);
            out.d2[d2_tt] = emb(g.g1pp, g.g2pp * b.x);
            out.d2[d2_tv] = emb(0, g.g2p * b.xv);
            out.d2[d2_tw] = emb(0, g.g2p * b.xw);
            out.d2[d2_vv] = emb(0, g.g2 * b.xvv);
            out.d2[d2_vw] = emb(0, g.g2 * b.xvw);
            out.d2[d2_ww] = emb(0, g.g2 * b.xww);
            return out;
        }
        case Form::Cone: {
            CurveJet g = spec.curve->eval(t);
            GraphJet f = spec.base.graph_jet(v, w);
            out.x = {g.g1 * v, g.g1 * w, g.g1 * f.f + g.g2, g.g1};
            out.d1[0] = {g.g1p * v, g.g1p * w, g.g1p * f.f + g.g2p, g.g1p};
            out.d1[1] = {g.g1, 0, g.g1 * f.fv, 0};
            out.d1[2] = {0, g.g1, g.g1 * f.fw, 0};
            out.d2[d2_tt] = {g.g1pp * v, g.g1pp * w, g.g1pp * f.f + g.g2pp, g.g1pp};
            out.d2[d2_tv] = {g.g1p, 0, g.g1p * f.fv, 0};
            out.d2[d2_tw] = {0, g.g1p, g.g1p * f.fw, 0};
            out.d2[d2_vv] = {0, 0, g.g1 * f.fvv, 0};
            out.d2[d2_vw] = {0, 0, g.g1 * f.fvw, 0};
            out.d2[d2_ww] = {0, 0, g.g1 * f.fww, 0};
            return out;
        }
        case Form::C3a: {
            GraphJet f = spec.base.graph_jet(v, w);
            double c = spec.c;
            double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
            out.x = {t * v, t * w, t * f.f - c * t4, t};
            out.d1[0] = {v, w, f.f - 4 * c * t3, 1};
            out.d1[1] = {t, 0, t * f.fv, 0};
            out.d1[2] = {0, t, t * f.fw, 0};
            out.d2[d2_tt] = {0, 0, -12 * c * t2, 0};
            out.d2[d2_tv] = {1, 0, f.fv, 0};
            out.d2[d2_tw] = {0, 1, f.fw, 0};
            out.d2[d2_vv] = {0, 0, t * f.fvv, 0};
            out.d2[d2_vw] = {0, 0, t * f.fvw, 0};
            out.d2[d2_ww] = {0, 0, t * f.fww, 0};
            return out;
        }
        case Form::C3b: {
            GraphJet f = spec.base.graph_jet(v, w);
            double c = spec.c;
            double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
            out.x = {v, w, f.f + c * t3, t4};
            out.d1[0] = {0, 0, 3 * c * t2, 4 * t3};
            out.d1[1] = {1, 0, f.fv, 0};
            out.d1[2] = {0, 1, f.fw, 0};
            out.d2[d2_tt] = {0, 0, 6 * c * t, 12 * t2};
            out.d2[d2_tv] = {0, 0, 0, 0};
            out.d2[d2_tw] = {0, 0, 0, 0};
            out.d2[d2_vv] = {0, 0, f.fvv, 0};
            out.d2[d2_vw] = {0, 0, f.fvw, 0};
            out.d2[d2_ww] = {0, 0, f.fww, 0};
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// FamilyInstance
// ---------------------------------------------------------------------------

namespace {

Vec4d improper_direction(FamilyKind k) {
    switch (form_of(k)) {
        case Form::Product: return {1, 0, 0, 0}; // gamma1 axis
        case Form::C3a: return {0, 0, 1, 0};
        case Form::C3b: return {0, 0, 0, 1}; // the t^4 coordinate
        default: throw std::logic_error("improper_direction on proper family");
    }
}

int count_negative(const Mat3d& h) {
    auto ev = sym_eigenvalues3(h);
    int neg = 0;
    for (double l : ev)
        if (l < 0) ++neg;
    return neg;
}

} // namespace

FamilyInstance FamilyInstance::create(FamilySpec spec) {
    double t_ref = 1.0;
    if (family_uses_curve(spec.family)) {
        auto [lo, hi] = spec.curve->domain();
        if (std::isfinite(lo) && std::isfinite(hi)) t_ref = (lo + hi) / 2;
    }
    auto [v_ref, w_ref] = spec.base.default_center();
    return create(std::move(spec), t_ref, v_ref, w_ref);
}

FamilyInstance FamilyInstance::create(FamilySpec spec, double t_ref, double v_ref, double w_ref) {
    validate_family_spec(spec);
    Jet2Point jet = build_immersion(spec, t_ref, v_ref, w_ref);
    FamilyKind fam = spec.family;
    double requested_H = spec.H;
    FamilyInstance inst(std::move(spec));
    inst.ref_ = {t_ref, v_ref, w_ref};

    if (family_is_proper(fam)) {
        if (requested_H != 0.0) {
            inst.H_ = requested_H;
        } else {
            // xi-sign normalization: pick H with Lorentz signature at ref
            double chosen = -1.0;
            int best_neg = -1;
            for (double H : {-1.0, 1.0}) {
                Vec4d xi = -H * jet.x;
                int neg = count_negative(induce(jet, xi).h);
                if (neg == 1) { chosen = H; best_neg = 1; break; }
                if (best_neg < 0 || neg == 0) { chosen = H; best_neg = neg; }
            }
            inst.H_ = chosen;
        }
    } else {
        inst.direction_ = improper_direction(fam);
        // Blaschke volume condition: with xi = lambda d, theta scales by
        // lambda and det h by lambda^-3, so lambda^5 = |det h_1| / theta_1^2
        InducedData trial = induce(jet, inst.direction_);
        double mag = std::pow(std::fabs(trial.det_h) / (trial.det_wedge * trial.det_wedge), 0.2);
        inst.lambda_ = mag;
        if (count_negative(induce(jet, mag * inst.direction_).h) != 1) {
            if (count_negative(induce(jet, -mag * inst.direction_).h) == 1) inst.lambda_ = -mag;
        }
    }
    return inst;
}

Vec4d FamilyInstance::normal(double t, double v, double w) const {
    if (proper()) {
        Jet2Point j = jet(t, v, w);
        return -H_ * j.x;
    }
    (void)t;
    return lambda_ * direction_;
}

std::array<Vec4d, 3> FamilyInstance::normal_d1(double t, double v, double w) const {
    if (proper()) {
        Jet2Point j = jet(t, v, w);
        return {-H_ * j.d1[0], -H_ * j.d1[1], -H_ * j.d1[2]};
    }
    return {Vec4d{}, Vec4d{}, Vec4d{}};
}

} // namespace affsym
