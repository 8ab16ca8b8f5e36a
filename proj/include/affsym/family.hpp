#pragma once
#include <array>
#include <memory>
#include <optional>
#include <string>
#include "affsym/base_surface.hpp"
#include "affsym/curve.hpp"
#include "affsym/jet.hpp"

namespace affsym {

// ===========================================================================
// Warped-product families
// ===========================================================================
//
// C1Proper/C1Improper   phi = (g1(t), g2(t) * base(v,w)), definite base
// C2                    phi = (g1 v, g1 w, g1 f + g2, g1), elliptic paraboloid
// C3a                   phi = (tv, tw, t f - c t^4, t),    t > 0
// C3b                   phi = (v, w, f + c t^3, t^4),      t > 0
// *t8 variants          same forms over the indefinite bases (one-sheeted
//                       hyperboloid resp. hyperbolic paraboloid)

enum class FamilyKind {
    C1Proper, C1Improper, C2, C3a, C3b,
    C1t8Proper, C1t8Improper, C2t8, C3t8a, C3t8b,
};

std::string family_name(FamilyKind k);
FamilyKind family_from_name(const std::string& name);
bool family_is_proper(FamilyKind k);   // H != 0
bool family_is_t8(FamilyKind k);       // SO(1,1)-symmetric branch
bool family_uses_curve(FamilyKind k);  // C1*/C2* need gamma; C3* need c

struct FamilySpec {
    FamilyKind family;
    BaseSurface base;
    std::shared_ptr<const Curve> curve; // curve families
    double c = 1.0;                     // C3 families, must be > 0
    double H = 0.0;                     // 0 requests auto-normalization (proper)
};

// throws std::invalid_argument with a specific message on bad combinations
void validate_family_spec(const FamilySpec& spec);

bool family_in_domain(const FamilySpec& spec, double t, double v, double w);

// position with all first and second partials, assembled by exact
// differentiation from the base/curve jets
Jet2Point build_immersion(const FamilySpec& spec, double t, double v, double w);

// ---------------------------------------------------------------------------
// Finalized instance: validated spec + normalized affine normal
// ---------------------------------------------------------------------------
//
// Proper families carry xi = -H phi with H = +-1 fixed so that the induced
// metric has Lorentz signature at the reference point. Improper families
// carry a constant xi = lambda * direction whose scale lambda solves the
// Blaschke volume condition at the reference point (sign again fixed by the
// signature).

class FamilyInstance {
public:
    static FamilyInstance create(FamilySpec spec);
    static FamilyInstance create(FamilySpec spec, double t_ref, double v_ref, double w_ref);

    const FamilySpec& spec() const { return spec_; }
    double H() const { return H_; }
    bool proper() const { return H_ != 0.0; }
    double normal_scale() const { return lambda_; }
    std::array<double, 3> reference_point() const { return ref_; }

    Jet2Point jet(double t, double v, double w) const {
        return build_immersion(spec_, t, v, w);
    }
    Vec4d normal(double t, double v, double w) const;
    // partials of xi along t, v, w (analytic: -H d(phi), or zero)
    std::array<Vec4d, 3> normal_d1(double t, double v, double w) const;

private:
    explicit FamilyInstance(FamilySpec spec) : spec_(std::move(spec)) {}

    FamilySpec spec_;
    double H_ = 0.0;
    double lambda_ = 1.0;
    Vec4d direction_{}; // improper families
    std::array<double, 3> ref_{};
};

} // namespace affsym
