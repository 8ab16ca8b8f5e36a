#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include "affsym/jet.hpp"

namespace affsym {

// ===========================================================================
// Gauss-formula decomposition at a point
// ===========================================================================
//
// For each second-derivative slot, phi_ij = sum_k Gamma^k_ij phi_k + h_ij xi
// is solved in the basis {phi_t, phi_v, phi_w, xi}.

struct TransversalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InducedData {
    Mat3d h{};                                   // Blaschke metric candidate
    std::array<std::array<std::array<double, 3>, 3>, 3> gamma{}; // gamma[k][i][j]
    Vec4d xi{};
    double det_wedge = 0;  // det(phi_t, phi_v, phi_w, xi)
    double det_h = 0;
    double decomposition_residual = 0; // relative reassembly error
};

// throws TransversalityError when |det| < 1e-10 * scale
InducedData induce(const Jet2Point& jet, const Vec4d& xi);

// |det_wedge^2 - |det h|| / max(...); 0 iff xi satisfies the volume condition
double blaschke_residual(const InducedData& d);

// Solves d_i xi = -S^j_i phi_j (+ mu_i xi); the xi-components mu_i must vanish
// (equiaffinity). Returns S (rows j, columns i) and the worst |mu_i|.
Mat3d shape_operator(const std::array<Vec4d, 3>& xi_d1, const Jet2Point& jet,
                     const InducedData& d, double* tangentiality_residual = nullptr);

enum class Signature { LorentzOK, Definite, IndexTwo, Degenerate };
std::string signature_name(Signature s);

// eigenvalue sign count; LorentzOK iff exactly one negative, two positive
Signature signature_check(const Mat3d& h, double eps = 1e-9);

double sup_norm(const Mat3d& m);

} // namespace affsym
