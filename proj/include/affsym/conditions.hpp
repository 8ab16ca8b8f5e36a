#pragma once
#include <memory>
#include <string>
#include "affsym/curve.hpp"
#include "affsym/family.hpp"

namespace affsym {

// ===========================================================================
// Curve conditions of the construction theorems
// ===========================================================================
//
// proper product:   g2^2 |g1 g2' - g1' g2|^5 = sign(g1' g2 e1) (g1' g2'' - g1'' g2') g1'^2
// improper product: g2^2 |g2'|^5             = sign(g1' g2 e1) (g1' g2'' - g1'' g2') g1'^2
// proper cone:      g1^2 |g1 g2' - g1' g2|^5 = -sign(g1 g1') (g1' g2'' - g1'' g2') g1'^2
// t8 variants: same left sides with |g1' g2'' - g1'' g2'| g1'^2 on the right

struct ConditionResult {
    double lhs = 0, rhs = 0;
    double residual = 0; // |lhs-rhs| / max(|lhs|,|rhs|)
    bool pass = false;
    std::string reason; // set on degenerate input
};

ConditionResult check_condition_c1_proper(const Curve& c, int eps1, double t, double tol = 1e-6);
ConditionResult check_condition_c1_improper(const Curve& c, int eps1, double t, double tol = 1e-6);
ConditionResult check_condition_c2(const Curve& c, double t, double tol = 1e-6);
// family: C1t8Proper | C1t8Improper | C2t8 (absolute-value right side)
ConditionResult check_condition_t8(FamilyKind family, const Curve& c, double t, double tol = 1e-6);

// dispatch on the family; C3 families have no curve condition and pass
ConditionResult check_family_condition(const FamilySpec& spec, double t, double tol = 1e-6);

// ===========================================================================
// Curve synthesis: solve the condition as a 2nd-order ODE for gamma2
// ===========================================================================

enum class SignBranch { Plus, Minus }; // removed |.| in the t8 conditions

struct SynthesisSpec {
    FamilyKind family = FamilyKind::C2;
    Gamma1Kind gamma1 = Gamma1Kind::Identity;
    double t0 = 1.0;
    double g2_0 = -1.0;
    double g2p_0 = 0.0;
    double t_end = 2.0;
    int steps = 10000; // RK4 steps over [t0, t_end]
    int eps1 = -1;     // base mean curvature (sign-factor families)
    SignBranch branch = SignBranch::Minus;
};

// classical fixed-step RK4; aborts (std::runtime_error) when gamma1' hits 0
// or the condition's sign factor flips along the way; steps == 0 is rejected
std::shared_ptr<SampledCurve> synthesize_curve(const SynthesisSpec& spec);

} // namespace affsym
