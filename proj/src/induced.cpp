#include "affsym/induced.hpp"
#include <cmath>

namespace affsym {

double sup_norm(const Mat3d& m) {
    double s = 0;
    for (const auto& row : m)
        for (double x : row) s = std::max(s, std::fabs(x));
    return s;
}

InducedData induce(const Jet2Point& jet, const Vec4d& xi) {
    InducedData out;
    out.xi = xi;
    Basis4 basis(jet.d1[0], jet.d1[1], jet.d1[2], xi);
    double scale = std::max({norm_inf(jet.d1[0]), norm_inf(jet.d1[1]), norm_inf(jet.d1[2]),
                             norm_inf(xi), 1e-30});
    out.det_wedge = basis.det();
    if (std::fabs(out.det_wedge) < 1e-10 * scale * scale * scale * scale)
        throw TransversalityError("induce: basis {phi_t, phi_v, phi_w, xi} is near-singular");

    static const int slot_of[3][3] = {{d2_tt, d2_tv, d2_tw},
                                      {d2_tv, d2_vv, d2_vw},
                                      {d2_tw, d2_vw, d2_ww}};
    double resid = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const Vec4d& rhs = jet.d2[slot_of[i][j]];
            Vec4d coeff = basis.solve(rhs);
            for (int k = 0; k < 3; ++k) {
                out.gamma[k][i][j] = coeff[k];
                out.gamma[k][j][i] = coeff[k];
            }
            out.h[i][j] = out.h[j][i] = coeff[3];
            // reassembly check (pure linear algebra)
            Vec4d back = coeff[3] * xi;
            for (int k = 0; k < 3; ++k) back = back + coeff[k] * jet.d1[k];
            double err = norm_inf(back - rhs);
            resid = std::max(resid, err / std::max(norm_inf(rhs), scale));
        }
    out.decomposition_residual = resid;
    out.det_h = out.h[0][0] * (out.h[1][1] * out.h[2][2] - out.h[1][2] * out.h[2][1]) -
                out.h[0][1] * (out.h[1][0] * out.h[2][2] - out.h[1][2] * out.h[2][0]) +
                out.h[0][2] * (out.h[1][0] * out.h[2][1] - out.h[1][1] * out.h[2][0]);
    return out;
}

double blaschke_residual(const InducedData& d) {
    double a = d.det_wedge * d.det_wedge;
    double b = std::fabs(d.det_h);
    return std::fabs(a - b) / std::max({a, b, 1e-300});
}

Mat3d shape_operator(const std::array<Vec4d, 3>& xi_d1, const Jet2Point& jet,
                     const InducedData& d, double* tangentiality_residual) {
    Basis4 basis(jet.d1[0], jet.d1[1], jet.d1[2], d.xi);
    Mat3d S{};
    double worst = 0;
    double scale = std::max({norm_inf(xi_d1[0]), norm_inf(xi_d1[1]), norm_inf(xi_d1[2]), 1e-30});
    for (int i = 0; i < 3; ++i) {
        Vec4d coeff = basis.solve(xi_d1[i]);
        for (int j = 0; j < 3; ++j) S[j][i] = -coeff[j];
        worst = std::max(worst, std::fabs(coeff[3]) / scale);
    }
    if (tangentiality_residual) *tangentiality_residual = worst;
    return S;
}

std::string signature_name(Signature s) {
    switch (s) {
        case Signature::LorentzOK: return "lorentz";
        case Signature::Definite: return "definite";
        case Signature::IndexTwo: return "index-two";
        case Signature::Degenerate: return "degenerate";
    }
    return "?";
}

Signature signature_check(const Mat3d& h, double eps) {
    auto ev = sym_eigenvalues3(h);
    double scale = std::max({std::fabs(ev[0]), std::fabs(ev[1]), std::fabs(ev[2]), 1e-300});
    int neg = 0;
    for (double l : ev) {
        if (std::fabs(l) < eps * scale) return Signature::Degenerate;
        if (l < 0) ++neg;
    }
    if (neg == 1) return Signature::LorentzOK;
    if (neg == 2) return Signature::IndexTwo;
    return Signature::Definite;
}

} // namespace affsym
