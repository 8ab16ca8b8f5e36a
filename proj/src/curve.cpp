#include "affsym/curve.hpp"
#include <cmath>
#include <limits>
#include <stdexcept>

namespace affsym {

namespace {

class CoshSinhCurve : public Curve {
public:
    CurveJet eval(double t) const override {
        return {std::cosh(t), std::sinh(t), std::cosh(t),
                std::sinh(t), std::cosh(t), std::sinh(t)};
    }
    std::pair<double, double> domain() const override {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    std::string name() const override { return "cosh,sinh"; }
};

class SinhCoshCurve : public Curve {
public:
    CurveJet eval(double t) const override {
        return {std::sinh(t), std::cosh(t), std::sinh(t),
                std::cosh(t), std::sinh(t), std::cosh(t)};
    }
    std::pair<double, double> domain() const override {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    std::string name() const override { return "sinh,cosh"; }
};

class CosSinCurve : public Curve {
public:
    CurveJet eval(double t) const override {
        return {std::cos(t), -std::sin(t), -std::cos(t),
                std::sin(t), std::cos(t), -std::sin(t)};
    }
    std::pair<double, double> domain() const override {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    std::string name() const override { return "cos,sin"; }
};

class TExpCurve : public Curve {
public:
    CurveJet eval(double t) const override {
        double e = std::exp(t);
        return {t, 1, 0, e, e, e};
    }
    std::pair<double, double> domain() const override {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    std::string name() const override { return "t,exp"; }
};

// gamma2 = -(t^2+1)/(2t): satisfies gamma1^2 |gamma1 gamma2' - gamma1' gamma2|^5
// = -sign(gamma1 gamma1') (gamma1' gamma2'' - gamma1'' gamma2') (gamma1')^2
// exactly for gamma1 = t on t > 0 (both sides reduce to t^-3)
class C2ExactCurve : public Curve {
public:
    CurveJet eval(double t) const override {
        double g2 = -(t * t + 1) / (2 * t);
        double g2p = -0.5 + 1 / (2 * t * t);
        double g2pp = -1 / (t * t * t);
        return {t, 1, 0, g2, g2p, g2pp};
    }
    std::pair<double, double> domain() const override {
        return {1e-6, std::numeric_limits<double>::infinity()};
    }
    std::string name() const override { return "c2-exact"; }
};

} // namespace

std::shared_ptr<const Curve> make_builtin_curve(const std::string& name) {
    if (name == "cosh,sinh") return std::make_shared<CoshSinhCurve>();
    if (name == "sinh,cosh") return std::make_shared<SinhCoshCurve>();
    if (name == "cos,sin") return std::make_shared<CosSinCurve>();
    if (name == "t,exp") return std::make_shared<TExpCurve>();
    if (name == "c2-exact") return std::make_shared<C2ExactCurve>();
    throw std::invalid_argument(
        "unknown curve: " + name +
        " (expected cosh,sinh | sinh,cosh | cos,sin | t,exp | c2-exact)");
}

CurveJet gamma1_jet(Gamma1Kind k, double t) {
    switch (k) {
        case Gamma1Kind::Identity: return {t, 1, 0, 0, 0, 0};
        case Gamma1Kind::Cosh: return {std::cosh(t), std::sinh(t), std::cosh(t), 0, 0, 0};
    }
    throw std::logic_error("unreachable");
}

SampledCurve::SampledCurve(Gamma1Kind g1, double t0, double dt, std::vector<double> g2,
                           std::vector<double> g2p)
    : g1_(g1), t0_(t0), dt_(dt), g2_(std::move(g2)), g2p_(std::move(g2p)) {
    if (g2_.size() != g2p_.size() || g2_.size() < 3)
        throw std::invalid_argument("SampledCurve: need at least 3 consistent samples");
    size_t n = g2_.size();
    g2pp_.resize(n);
    if (n < 5) {
        for (size_t i = 1; i + 1 < n; ++i) g2pp_[i] = (g2p_[i + 1] - g2p_[i - 1]) / (2 * dt_);
        g2pp_[0] = (-3 * g2p_[0] + 4 * g2p_[1] - g2p_[2]) / (2 * dt_);
        g2pp_[n - 1] = (3 * g2p_[n - 1] - 4 * g2p_[n - 2] + g2p_[n - 3]) / (2 * dt_);
        return;
    }
    // fourth-order stencils throughout (one-sided near the ends)
    const double* d = g2p_.data();
    for (size_t i = 2; i + 2 < n; ++i)
        g2pp_[i] = (-d[i + 2] + 8 * d[i + 1] - 8 * d[i - 1] + d[i - 2]) / (12 * dt_);
    g2pp_[0] = (-25 * d[0] + 48 * d[1] - 36 * d[2] + 16 * d[3] - 3 * d[4]) / (12 * dt_);
    g2pp_[1] = (-3 * d[0] - 10 * d[1] + 18 * d[2] - 6 * d[3] + d[4]) / (12 * dt_);
    g2pp_[n - 2] =
        (3 * d[n - 1] + 10 * d[n - 2] - 18 * d[n - 3] + 6 * d[n - 4] - d[n - 5]) / (12 * dt_);
    g2pp_[n - 1] =
        (25 * d[n - 1] - 48 * d[n - 2] + 36 * d[n - 3] - 16 * d[n - 4] + 3 * d[n - 5]) /
        (12 * dt_);
}

std::pair<double, double> SampledCurve::domain() const {
    return {t0_, t0_ + dt_ * double(g2_.size() - 1)};
}

CurveJet SampledCurve::eval(double t) const {
    auto [lo, hi] = domain();
    if (t < lo - 1e-9 * std::fabs(dt_) || t > hi + 1e-9 * std::fabs(dt_))
        throw std::domain_error("SampledCurve: t outside sampled range");
    CurveJet j = gamma1_jet(g1_, t - g1_offset_);

    double s = (t - t0_) / dt_;
    size_t i = std::min(size_t(std::max(0.0, std::floor(s))), g2_.size() - 2);
    double u = s - double(i);
    if (std::fabs(u) < 1e-9) {
        j.g2 = g2_[i];
        j.g2p = g2p_[i];
        j.g2pp = g2pp_[i];
        return j;
    }
    if (std::fabs(u - 1.0) < 1e-9) {
        j.g2 = g2_[i + 1];
        j.g2p = g2p_[i + 1];
        j.g2pp = g2pp_[i + 1];
        return j;
    }
    // cubic Hermite on (value, derivative) pairs
    double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    double h10 = u * (1 - u) * (1 - u);
    double h01 = u * u * (3 - 2 * u);
    double h11 = u * u * (u - 1);
    j.g2 = h00 * g2_[i] + h10 * dt_ * g2p_[i] + h01 * g2_[i + 1] + h11 * dt_ * g2p_[i + 1];
    double d00 = 6 * u * (u - 1);
    double d10 = (1 - u) * (1 - 3 * u);
    double d01 = -d00;
    double d11 = u * (3 * u - 2);
    j.g2p = (d00 * g2_[i] + d01 * g2_[i + 1]) / dt_ + d10 * g2p_[i] + d11 * g2p_[i + 1];
    j.g2pp = (1 - u) * g2pp_[i] + u * g2pp_[i + 1];
    return j;
}

std::shared_ptr<SampledCurve> SampledCurve::shifted(double delta) const {
    auto copy = std::make_shared<SampledCurve>(*this);
    copy->t0_ += delta;
    copy->g1_offset_ += delta;
    return copy;
}

} // namespace affsym
