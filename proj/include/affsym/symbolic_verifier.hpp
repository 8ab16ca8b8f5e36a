#pragma once
#include <string>
#include <vector>
#include "affsym/polynomial.hpp"
#include "affsym/tensor_core.hpp"

namespace affsym {

// Frame-level symbolic engine reproducing the Codazzi and Gauss constraint
// systems of a 3d indefinite affine hypersphere in the canonical {T,V,W}
// frame (difference tensor parameters a4, a6; Levi-Civita coefficients
// a12..b33; opaque frame-derivative markers).

using SymVec = FrameVec3<Polynomial>;

// Levi-Civita connection table: nabla_{e_x} e_y in frame components
SymVec nabla_hat_symbolic(int x, int y);

// Na[u,v]: bilinear table expansion plus derivative markers on v's components
SymVec nabla_apply(const SymVec& u, const SymVec& v);

// canonical difference tensor applied to symbolic vectors
SymVec k_apply(const SymVec& u, const SymVec& v);

SymVec sym_basis(int i);

// residual of (nabla_X K)(Y,Z) - (nabla_Y K)(X,Z); zero on hyperspheres
SymVec codazzi_residual(int x, int y, int z);

// residual of R(X,Y)Z - H(h(Y,Z)X - h(X,Z)Y) + [K_X,K_Y]Z
SymVec gauss_residual(int x, int y, int z);

// structural equality modulo a nonzero rational factor
inline bool structurally_equal(const Polynomial& a, const Polynomial& b) {
    return a.normal_form() == b.normal_form();
}

// ---------------------------------------------------------------------------
// Displayed equations, transcribed as lhs-rhs polynomials
// ---------------------------------------------------------------------------

struct NamedEquation {
    std::string id; // e.g. "cod1.2"
    Polynomial poly;
};

const std::vector<NamedEquation>& codazzi_display_equations(); // cod1.1..cod8.1, 17 entries
const std::vector<NamedEquation>& gauss_display_equations();   // gauss.1..gauss.7

// the nine ordered triples used by the notebook (eq1..eq9)
const std::vector<std::array<int, 3>>& codazzi_triples();
// the nine ordered triples of the Gauss evaluation (eq11..eq19)
const std::vector<std::array<int, 3>>& gauss_triples();

// Match every component of the eight display triples (eq1-eq6, eq8, eq9)
// against the transcribed display equations.
struct ComponentMatch {
    std::string triple;   // e.g. "codazzi(V,T,T)"
    int component;        // 0,1,2 -> T,V,W
    std::string equation; // matched display id, or "zero"
    std::string poly;     // normal form
    bool matched;
};
struct CodazziMatchReport {
    std::vector<ComponentMatch> components; // 24 entries
    std::vector<std::string> unmatched_equations;
    bool complete; // every component matched, every display equation hit
};
CodazziMatchReport match_codazzi_system();

// The two 2x2 elimination systems that pin (a13, a23+a32) and (a12,
// a22-a33): specific residual-component combinations must reproduce them.
bool check_elimination_identities(std::vector<std::string>* log = nullptr);

// ---------------------------------------------------------------------------
// Case verification (each case's coefficient relations and derivative
// assignments substituted into all residuals)
// ---------------------------------------------------------------------------

enum class SymmetryCase { SO2, S3, Z3, Z3Degenerate };

std::string case_name(SymmetryCase c);
std::vector<std::pair<int, Polynomial>> case_bindings(SymmetryCase c);

// For every plain-symbol binding c -> p, add the induced marker bindings
// D(X,c) -> X(p) unless already present (the Leibniz image of the binding).
std::vector<std::pair<int, Polynomial>> augment_with_derivative_bindings(
    std::vector<std::pair<int, Polynomial>> bindings);

struct CaseComponent {
    std::string triple;
    int component;
    std::string reduced; // polynomial after substitution
    bool zero;
};
struct CaseReport {
    SymmetryCase which;
    std::vector<CaseComponent> components; // 27 entries
    bool all_zero;
    // Z3Degenerate only: the Gauss system is inconsistent
    bool gauss_contradiction_flagged = false;
    std::string contradiction_poly;
};
CaseReport verify_case(SymmetryCase c);

// Under the degenerate-branch substitutions, a fixed combination of Gauss
// residual components is a nonzero polynomial (12 a4^2 up to scale): the
// branch a6 = 2 a4 is inconsistent.
Polynomial derive_z3_degenerate_contradiction();

} // namespace affsym
