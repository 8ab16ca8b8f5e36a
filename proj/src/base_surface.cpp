#include "affsym/base_surface.hpp"
#include <cmath>
#include <stdexcept>

namespace affsym {

namespace {

constexpr double kDomainMargin = 1e-8;

SurfaceJet graph_to_jet(double v, double w, const GraphJet& g) {
    SurfaceJet j;
    j.x = {v, w, g.f};
    j.xv = {1, 0, g.fv};
    j.xw = {0, 1, g.fw};
    j.xvv = {0, 0, g.fvv};
    j.xvw = {0, 0, g.fvw};
    j.xww = {0, 0, g.fww};
    return j;
}

SurfaceJet titeica_raw_jet(double v, double w) {
    double z = 1.0 / (v * w);
    SurfaceJet j;
    j.x = {v, w, z};
    j.xv = {1, 0, -z / v};
    j.xw = {0, 1, -z / w};
    j.xvv = {0, 0, 2 * z / (v * v)};
    j.xvw = {0, 0, z / (v * w)};
    j.xww = {0, 0, 2 * z / (w * w)};
    return j;
}

} // namespace

Surface2DInduced induce2d(const SurfaceJet& jet, const Vec3d& xi) {
    // solve x_rs = a x_v + b x_w + g_rs xi; only the xi-coefficient is kept
    double d = det3(jet.xv, jet.xw, xi);
    if (std::fabs(d) < 1e-14)
        throw std::domain_error("induce2d: degenerate tangent basis");
    auto coeff = [&](const Vec3d& rhs) {
        // Cramer for the xi-coefficient
        return det3(jet.xv, jet.xw, rhs) / d;
    };
    Surface2DInduced r;
    r.g_vv = coeff(jet.xvv);
    r.g_vw = coeff(jet.xvw);
    r.g_ww = coeff(jet.xww);
    r.theta = d;
    r.det_g = r.g_vv * r.g_ww - r.g_vw * r.g_vw;
    return r;
}

double blaschke_residual2d(const Surface2DInduced& d) {
    double a = d.theta * d.theta, b = std::fabs(d.det_g);
    return std::fabs(a - b) / std::max({a, b, 1e-300});
}

BaseSurface::BaseSurface(BaseKind kind) : kind_(kind) {
    if (kind_ == BaseKind::Titeica) {
        // the raw graph z = 1/(vw) is an affine sphere only up to homothety;
        // solve theta^2 k^6 = |det g| at the reference point for the scale
        SurfaceJet raw = titeica_raw_jet(1.0, 1.0);
        Surface2DInduced d = induce2d(raw, raw.x); // trial normal = +position
        scale_ = std::pow(std::fabs(d.det_g) / (d.theta * d.theta), 1.0 / 6.0);
    }
}

BaseSurface BaseSurface::from_name(const std::string& name) {
    if (name == "elliptic-paraboloid") return BaseSurface(BaseKind::EllipticParaboloid);
    if (name == "hyperbolic-paraboloid") return BaseSurface(BaseKind::HyperbolicParaboloid);
    if (name == "sphere") return BaseSurface(BaseKind::Sphere);
    if (name == "two-sheeted") return BaseSurface(BaseKind::TwoSheetedHyperboloid);
    if (name == "one-sheeted") return BaseSurface(BaseKind::OneSheetedHyperboloid);
    if (name == "titeica") return BaseSurface(BaseKind::Titeica);
    throw std::invalid_argument("unknown base surface: " + name);
}

std::string BaseSurface::name() const {
    switch (kind_) {
        case BaseKind::EllipticParaboloid: return "elliptic-paraboloid";
        case BaseKind::HyperbolicParaboloid: return "hyperbolic-paraboloid";
        case BaseKind::Sphere: return "sphere";
        case BaseKind::TwoSheetedHyperboloid: return "two-sheeted";
        case BaseKind::OneSheetedHyperboloid: return "one-sheeted";
        case BaseKind::Titeica: return "titeica";
    }
    return "?";
}

std::string BaseSurface::chart_description() const {
    switch (kind_) {
        case BaseKind::EllipticParaboloid: return "graph z=(v^2+w^2)/2 over R^2";
        case BaseKind::HyperbolicParaboloid: return "graph z=vw over R^2";
        case BaseKind::Sphere: return "graph z=+sqrt(1-v^2-w^2), v^2+w^2<1";
        case BaseKind::TwoSheetedHyperboloid: return "graph z=+sqrt(1+v^2+w^2) over R^2";
        case BaseKind::OneSheetedHyperboloid: return "graph x=+sqrt(1+w^2-v^2), v^2<1+w^2";
        case BaseKind::Titeica: return "k*(v,w,1/(vw)), v,w>0";
    }
    return "?";
}

bool BaseSurface::is_graph() const {
    return kind_ == BaseKind::EllipticParaboloid || kind_ == BaseKind::HyperbolicParaboloid;
}

bool BaseSurface::is_proper() const { return !is_graph(); }

bool BaseSurface::definite_metric() const {
    switch (kind_) {
        case BaseKind::HyperbolicParaboloid:
        case BaseKind::OneSheetedHyperboloid: return false;
        default: return true;
    }
}

int BaseSurface::eps1() const {
    switch (kind_) {
        case BaseKind::Sphere: return 1;
        case BaseKind::TwoSheetedHyperboloid: return -1;
        case BaseKind::OneSheetedHyperboloid: return 1;
        case BaseKind::Titeica: return -1;
        default: throw std::logic_error("eps1 undefined for improper bases");
    }
}

bool BaseSurface::in_domain(double v, double w) const {
    switch (kind_) {
        case BaseKind::Sphere: return 1.0 - v * v - w * w > kDomainMargin;
        case BaseKind::OneSheetedHyperboloid: return 1.0 + w * w - v * v > kDomainMargin;
        case BaseKind::Titeica: return v > kDomainMargin && w > kDomainMargin;
        default: return true;
    }
}

GraphJet BaseSurface::graph_jet(double v, double w) const {
    switch (kind_) {
        case BaseKind::EllipticParaboloid:
            return {(v * v + w * w) / 2, v, w, 1, 0, 1};
        case BaseKind::HyperbolicParaboloid:
            return {v * w, w, v, 0, 1, 0};
        default:
            throw std::logic_error("graph_jet: " + name() + " is not a graph base");
    }
}

SurfaceJet BaseSurface::jet(double v, double w) const {
    if (!in_domain(v, w))
        throw std::domain_error(name() + ": (" + std::to_string(v) + "," + std::to_string(w) +
                                ") outside chart domain");
    switch (kind_) {
        case BaseKind::EllipticParaboloid:
        case BaseKind::HyperbolicParaboloid:
            return graph_to_jet(v, w, graph_jet(v, w));
        case BaseKind::Sphere: {
            double z = std::sqrt(1.0 - v * v - w * w);
            double z3 = z * z * z;
            SurfaceJet j;
            j.x = {v, w, z};
            j.xv = {1, 0, -v / z};
            j.xw = {0, 1, -w / z};
            j.xvv = {0, 0, -(1 - w * w) / z3};
            j.xvw = {0, 0, -v * w / z3};
            j.xww = {0, 0, -(1 - v * v) / z3};
            return j;
        }
        case BaseKind::TwoSheetedHyperboloid: {
            double z = std::sqrt(1.0 + v * v + w * w);
            double z3 = z * z * z;
            SurfaceJet j;
            j.x = {v, w, z};
            j.xv = {1, 0, v / z};
            j.xw = {0, 1, w / z};
            j.xvv = {0, 0, (1 + w * w) / z3};
            j.xvw = {0, 0, -v * w / z3};
            j.xww = {0, 0, (1 + v * v) / z3};
            return j;
        }
        case BaseKind::OneSheetedHyperboloid: {
            double x = std::sqrt(1.0 + w * w - v * v);
            double x3 = x * x * x;
            SurfaceJet j;
            j.x = {x, v, w};
            j.xv = {-v / x, 1, 0};
            j.xw = {w / x, 0, 1};
            j.xvv = {-(1 + w * w) / x3, 0, 0};
            j.xvw = {v * w / x3, 0, 0};
            j.xww = {(1 - v * v) / x3, 0, 0};
            return j;
        }
        case BaseKind::Titeica: {
            SurfaceJet j = titeica_raw_jet(v, w);
            j.x = scale_ * j.x;
            j.xv = scale_ * j.xv;
            j.xw = scale_ * j.xw;
            j.xvv = scale_ * j.xvv;
            j.xvw = scale_ * j.xvw;
            j.xww = scale_ * j.xww;
            return j;
        }
    }
    throw std::logic_error("unreachable");
}

std::pair<double, double> BaseSurface::default_center() const {
    if (kind_ == BaseKind::Titeica) return {1.0, 1.0};
    return {0.0, 0.0};
}

} // namespace affsym
