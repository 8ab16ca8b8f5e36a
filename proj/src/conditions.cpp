#include "affsym/conditions.hpp"
#include <cmath>
#include <stdexcept>

namespace affsym {

namespace {

double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }
double pow5(double x) { return x * x * x * x * x; }

ConditionResult finish(double lhs, double rhs, double tol) {
    ConditionResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (std::fabs(lhs) < 1e-30) {
        r.reason = "lhs zero";
        r.residual = scale;
        return r;
    }
    r.residual = std::fabs(lhs - rhs) / std::max(scale, 1e-300);
    r.pass = r.residual <= tol;
    return r;
}

bool factor_degenerate(double product, double s1, double s2) {
    return std::fabs(product) < 1e-15 * std::max({s1 * s1, s2 * s2, 1e-30});
}

ConditionResult degenerate(double lhs, double rhs, const std::string& why) {
    ConditionResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::max(std::fabs(lhs), std::fabs(rhs));
    r.reason = why;
    return r;
}

} // namespace

ConditionResult check_condition_c1_proper(const Curve& c, int eps1, double t, double tol) {
    CurveJet j = c.eval(t);
    double al = j.g1 * j.g2p - j.g1p * j.g2;
    double wr = j.g1p * j.g2pp - j.g1pp * j.g2p;
    double lhs = j.g2 * j.g2 * pow5(std::fabs(al));
    if (std::fabs(lhs) < 1e-30) return degenerate(lhs, 0.0, "lhs zero");
    if (factor_degenerate(j.g1p * j.g2, j.g1p, j.g2))
        return degenerate(lhs, 0.0, "sign factor degenerate (gamma1' gamma2 = 0)");
    double sg = sign(j.g1p * j.g2 * eps1);
    return finish(lhs, sg * wr * j.g1p * j.g1p, tol);
}

ConditionResult check_condition_c1_improper(const Curve& c, int eps1, double t, double tol) {
    CurveJet j = c.eval(t);
    double wr = j.g1p * j.g2pp - j.g1pp * j.g2p;
    double lhs = j.g2 * j.g2 * pow5(std::fabs(j.g2p));
    if (std::fabs(lhs) < 1e-30) return degenerate(lhs, 0.0, "lhs zero");
    if (factor_degenerate(j.g1p * j.g2, j.g1p, j.g2))
        return degenerate(lhs, 0.0, "sign factor degenerate (gamma1' gamma2 = 0)");
    double sg = sign(j.g1p * j.g2 * eps1);
    return finish(lhs, sg * wr * j.g1p * j.g1p, tol);
}

ConditionResult check_condition_c2(const Curve& c, double t, double tol) {
    CurveJet j = c.eval(t);
    double al = j.g1 * j.g2p - j.g1p * j.g2;
    double wr = j.g1p * j.g2pp - j.g1pp * j.g2p;
    double lhs = j.g1 * j.g1 * pow5(std::fabs(al));
    if (std::fabs(lhs) < 1e-30) return degenerate(lhs, 0.0, "lhs zero");
    if (factor_degenerate(j.g1 * j.g1p, j.g1, j.g1p))
        return degenerate(lhs, 0.0, "sign factor degenerate (gamma1 gamma1' = 0)");
    double sg = -sign(j.g1 * j.g1p);
    return finish(lhs, sg * wr * j.g1p * j.g1p, tol);
}

ConditionResult check_condition_t8(FamilyKind family, const Curve& c, double t, double tol) {
    CurveJet j = c.eval(t);
    double al = j.g1 * j.g2p - j.g1p * j.g2;
    double wr = j.g1p * j.g2pp - j.g1pp * j.g2p;
    double lhs;
    switch (family) {
        case FamilyKind::C1t8Proper: lhs = j.g2 * j.g2 * pow5(std::fabs(al)); break;
        case FamilyKind::C1t8Improper: lhs = j.g2 * j.g2 * pow5(std::fabs(j.g2p)); break;
        case FamilyKind::C2t8: lhs = j.g1 * j.g1 * pow5(std::fabs(al)); break;
        default: throw std::invalid_argument("check_condition_t8: not a t8 curve family");
    }
    return finish(lhs, std::fabs(wr) * j.g1p * j.g1p, tol);
}

ConditionResult check_family_condition(const FamilySpec& spec, double t, double tol) {
    switch (spec.family) {
        case FamilyKind::C1Proper:
            return check_condition_c1_proper(*spec.curve, spec.base.eps1(), t, tol);
        case FamilyKind::C1Improper:
            return check_condition_c1_improper(*spec.curve, spec.base.eps1(), t, tol);
        case FamilyKind::C2:
            return check_condition_c2(*spec.curve, t, tol);
        case FamilyKind::C1t8Proper:
        case FamilyKind::C1t8Improper:
        case FamilyKind::C2t8:
            return check_condition_t8(spec.family, *spec.curve, t, tol);
        default: {
            // C3 families: no curve condition
            ConditionResult r;
            r.pass = true;
            return r;
        }
    }
}

std::shared_ptr<SampledCurve> synthesize_curve(const SynthesisSpec& spec) {
    if (spec.steps <= 0) throw std::invalid_argument("synthesize_curve: steps must be positive");
    if (!(spec.t_end > spec.t0))
        throw std::invalid_argument("synthesize_curve: need t_end > t0");
    if (!family_uses_curve(spec.family))
        throw std::invalid_argument("synthesize_curve: " + family_name(spec.family) +
                                    " has no curve condition");

    double branch = spec.branch == SignBranch::Plus ? 1.0 : -1.0;
    bool t8 = family_is_t8(spec.family);
    double sign0 = 0.0; // monitored sign factor, captured on first evaluation

    auto rhs_wr = [&](double t, double g2, double g2p, const CurveJet& g1) {
        double al = g1.g1 * g2p - g1.g1p * g2;
        double lhs;
        double factor;
        switch (spec.family) {
            case FamilyKind::C1Proper:
                lhs = g2 * g2 * pow5(std::fabs(al));
                factor = sign(g1.g1p * g2 * spec.eps1);
                break;
            case FamilyKind::C1Improper:
                lhs = g2 * g2 * pow5(std::fabs(g2p));
                factor = sign(g1.g1p * g2 * spec.eps1);
                break;
            case FamilyKind::C2:
                lhs = g1.g1 * g1.g1 * pow5(std::fabs(al));
                factor = -sign(g1.g1 * g1.g1p);
                break;
            case FamilyKind::C1t8Proper:
                lhs = g2 * g2 * pow5(std::fabs(al));
                factor = branch;
                break;
            case FamilyKind::C1t8Improper:
                lhs = g2 * g2 * pow5(std::fabs(g2p));
                factor = branch;
                break;
            case FamilyKind::C2t8:
                lhs = g1.g1 * g1.g1 * pow5(std::fabs(al));
                factor = branch;
                break;
            default: throw std::logic_error("unreachable");
        }
        if (factor == 0.0)
            throw std::runtime_error("synthesize_curve: sign factor degenerate at t=" +
                                     std::to_string(t));
        if (!t8) {
            if (sign0 == 0.0) sign0 = factor;
            if (factor != sign0)
                throw std::runtime_error("synthesize_curve: sign factor flipped at t=" +
                                         std::to_string(t) + "; shrink the interval");
        }
        return factor * lhs; // target value of g1' g2'' - g1'' g2'
    };

    auto accel = [&](double t, double g2, double g2p) {
        CurveJet g1 = gamma1_jet(spec.gamma1, t);
        if (std::fabs(g1.g1p) < 1e-12)
            throw std::runtime_error("synthesize_curve: gamma1' vanished at t=" +
                                     std::to_string(t));
        double wr = rhs_wr(t, g2, g2p, g1);
        return (wr / (g1.g1p * g1.g1p) + g1.g1pp * g2p) / g1.g1p;
    };

    double h = (spec.t_end - spec.t0) / spec.steps;
    std::vector<double> g2(spec.steps + 1), g2p(spec.steps + 1);
    g2[0] = spec.g2_0;
    g2p[0] = spec.g2p_0;
    double y = spec.g2_0, yp = spec.g2p_0;
    for (int i = 0; i < spec.steps; ++i) {
        double t = spec.t0 + h * i;
        double k1y = yp, k1p = accel(t, y, yp);
        double k2y = yp + h / 2 * k1p, k2p = accel(t + h / 2, y + h / 2 * k1y, yp + h / 2 * k1p);
        double k3y = yp + h / 2 * k2p, k3p = accel(t + h / 2, y + h / 2 * k2y, yp + h / 2 * k2p);
        double k4y = yp + h * k3p, k4p = accel(t + h, y + h * k3y, yp + h * k3p);
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        yp += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
        g2[i + 1] = y;
        g2p[i + 1] = yp;
    }
    return std::make_shared<SampledCurve>(spec.gamma1, spec.t0, h, std::move(g2), std::move(g2p));
}

} // namespace affsym
