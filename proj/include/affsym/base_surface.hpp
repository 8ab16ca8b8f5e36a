#pragma once
#include <string>
#include <utility>
#include "affsym/jet.hpp"

namespace affsym {

// ===========================================================================
// Base 2-surfaces: affine spheres and quadrics entering the warped products
// ===========================================================================

enum class BaseKind {
    EllipticParaboloid,    // graph (v,w,(v^2+w^2)/2), improper, normal (0,0,1)
    HyperbolicParaboloid,  // graph (v,w,vw), improper, indefinite
    Sphere,                // unit sphere chart z>0, proper, eps1=+1
    TwoSheetedHyperboloid, // upper sheet of x^2+y^2-z^2=-1, proper, eps1=-1
    OneSheetedHyperboloid, // x^2+y^2-z^2=1 chart x>0, proper, indefinite
    Titeica,               // homothety-normalized graph patch of xyz=1, eps1=-1
};

struct GraphJet {
    double f, fv, fw, fvv, fvw, fww;
};

class BaseSurface {
public:
    explicit BaseSurface(BaseKind kind);
    static BaseSurface from_name(const std::string& name);

    BaseKind kind() const { return kind_; }
    std::string name() const;
    std::string chart_description() const;

    bool is_graph() const;        // improper graph type (v,w,f(v,w))
    bool is_proper() const;       // centered affine sphere, normal -eps1*position
    bool definite_metric() const; // positive definite Blaschke metric
    int eps1() const;             // proper bases only

    bool in_domain(double v, double w) const;
    SurfaceJet jet(double v, double w) const;      // throws std::domain_error
    GraphJet graph_jet(double v, double w) const;  // graph bases only

    std::pair<double, double> default_center() const;
    double titeica_scale() const { return scale_; }

private:
    BaseKind kind_;
    double scale_ = 1.0; // Titeica homothety constant, bootstrapped
};

// 2d analogue of the ambient decomposition, used for base-surface audits:
// x_rs = (tangential) + g_rs * xi in the basis {x_v, x_w, xi}
struct Surface2DInduced {
    double g_vv, g_vw, g_ww;
    double theta;    // det(x_v, x_w, xi)
    double det_g;
};
Surface2DInduced induce2d(const SurfaceJet& jet, const Vec3d& xi);

// |theta^2 - |det g|| / max(...): zero iff xi is the Blaschke normal
double blaschke_residual2d(const Surface2DInduced& d);

} // namespace affsym
