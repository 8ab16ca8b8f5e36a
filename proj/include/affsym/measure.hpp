#pragma once
#include <limits>
#include <string>
#include "affsym/family.hpp"
#include "affsym/induced.hpp"

namespace affsym {

// ===========================================================================
// Difference-tensor measurement and pointwise symmetry classification
// ===========================================================================
//
// h and the induced connection come from exact jets (linear algebra only);
// the Levi-Civita connection of h needs third-order information and is the
// one place central differences enter (step = caller's choice).

enum class SymClass { SO2, Z3, S3, SO11, Unknown };
std::string sym_class_name(SymClass c);

struct MeasuredK {
    enum class FrameType { Ortho, Light };
    FrameType frame_type = FrameType::Ortho;
    double a4 = 0, a6 = 0; // ortho frame parameters
    double b4 = 0;         // lightcone parameter
    double residual = std::numeric_limits<double>::infinity(); // distance to canonical form
    double apolarity = 0;  // max |trace K_X| over the frame
    Mat3d frame{};         // columns: coordinate components of (T,V,W) / (E,V,F)
};

MeasuredK measure_difference_tensor(const FamilyInstance& inst, double t, double v, double w,
                                    double step);

SymClass classify_symmetry(const MeasuredK& m, double tol = 1e-3, double residual_tol = 1e-2);

struct AuditResult {
    MeasuredK k;
    double a22 = 0; // h(nabla_V T, V) in the ortho frame; -a12 analogue for t8
    double nu = 0;  // a22^2 - a4^2 - H (resp. b4^2 - a12^2 - H)
    double H = 0;
    int nu_case = 0;          // 1: nu != 0 | 2: nu = 0, H != 0 | 3: nu = 0, H = 0
    double dtt_residual = 0;  // D_T T = -2 a4 T - xi (ortho path only)
    double dxi_residual = 0;  // D_X xi = -H X
};

AuditResult structure_equation_audit(const FamilyInstance& inst, double t, double v, double w,
                                     double step, double nu_tol = 1e-4);

// scalar curvature of h by nested central differences (for kappa = H + J)
double measured_scalar_curvature(const FamilyInstance& inst, double t, double v, double w,
                                 double step);

} // namespace affsym
