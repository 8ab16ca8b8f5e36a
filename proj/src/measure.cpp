#include "affsym/measure.hpp"
#include <cmath>
#include <stdexcept>
#include "affsym/tensor_core.hpp"

namespace affsym {

namespace {

using Kcoord = std::array<std::array<std::array<double, 3>, 3>, 3>; // K[k][i][j]

struct StencilData {
    InducedData center;
    Mat3d hinv;
    std::array<Mat3d, 3> h_plus, h_minus; // h at p +- step e_i
    double christoffel[3][3][3];          // of h, [k][i][j]
    Kcoord K;                             // difference tensor, coordinates
    double step;
};

InducedData induced_at(const FamilyInstance& inst, double t, double v, double w) {
    return induce(inst.jet(t, v, w), inst.normal(t, v, w));
}

StencilData build_stencil(const FamilyInstance& inst, double t, double v, double w, double step) {
    StencilData s;
    s.step = step;
    s.center = induced_at(inst, t, v, w);
    s.hinv = invert3(s.center.h);
    const double off[3][3] = {{step, 0, 0}, {0, step, 0}, {0, 0, step}};
    for (int i = 0; i < 3; ++i) {
        s.h_plus[i] = induced_at(inst, t + off[i][0], v + off[i][1], w + off[i][2]).h;
        s.h_minus[i] = induced_at(inst, t - off[i][0], v - off[i][1], w - off[i][2]).h;
    }
    double dh[3][3][3]; // dh[l][i][j] = d_l h_ij
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                dh[l][i][j] = (s.h_plus[l][i][j] - s.h_minus[l][i][j]) / (2 * step);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double acc = 0;
                for (int l = 0; l < 3; ++l)
                    acc += s.hinv[k][l] * (dh[i][j][l] + dh[j][i][l] - dh[l][i][j]);
                s.christoffel[k][i][j] = acc / 2;
            }
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s.K[k][i][j] = s.center.gamma[k][i][j] - s.christoffel[k][i][j];
    return s;
}

double h_of(const Mat3d& h, const Vec3d& x, const Vec3d& y) {
    double acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += h[i][j] * x[i] * y[j];
    return acc;
}

Vec3d k_apply_coord(const Kcoord& K, const Vec3d& x, const Vec3d& y) {
    Vec3d out{};
    for (int k = 0; k < 3; ++k) {
        double acc = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += K[k][i][j] * x[i] * y[j];
        out[k] = acc;
    }
    return out;
}

// frame columns -> K expressed in that frame: slots[i][j] in frame components
using FrameSlots = std::array<std::array<Vec3d, 3>, 3>;
FrameSlots k_in_frame(const Kcoord& K, const Mat3d& frame_cols) {
    Mat3d F{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) F[i][j] = frame_cols[i][j];
    Mat3d Finv = invert3(F);
    FrameSlots out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec3d ei = {frame_cols[0][i], frame_cols[1][i], frame_cols[2][i]};
            Vec3d ej = {frame_cols[0][j], frame_cols[1][j], frame_cols[2][j]};
            Vec3d kc = k_apply_coord(K, ei, ej);
            Vec3d kf{};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) kf[a] += Finv[a][b] * kc[b];
            out[i][j] = kf;
        }
    return out;
}

double canonical_residual_ortho(const FrameSlots& ks, double a4, double a6) {
    // canonical table in the (T,V,W) frame
    const Vec3d table[3][3] = {
        {{-2 * a4, 0, 0}, {0, a4, 0}, {0, 0, a4}},
        {{0, a4, 0}, {-a4, a6, 0}, {0, 0, -a6}},
        {{0, 0, a4}, {0, 0, -a6}, {-a4, -a6, 0}},
    };
    double r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, norm_inf(ks[i][j] - table[i][j]));
    return r;
}

double canonical_residual_light(const FrameSlots& ks, double b4) {
    // canonical table in the (E,V,F) frame
    const Vec3d table[3][3] = {
        {{0, 0, 0}, {b4, 0, 0}, {0, b4, 0}},
        {{b4, 0, 0}, {0, -2 * b4, 0}, {0, 0, b4}},
        {{0, b4, 0}, {0, 0, b4}, {0, 0, 0}},
    };
    double r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, norm_inf(ks[i][j] - table[i][j]));
    return r;
}

double apolarity_sup(const FrameSlots& ks, MeasuredK::FrameType type) {
    // trace of K_X against the exact convention metric of the adapted frame
    const auto& m = metric_matrix(type == MeasuredK::FrameType::Ortho
                                      ? FrameSignature::Orthonormal
                                      : FrameSignature::Lightcone);
    double worst = 0;
    for (int x = 0; x < 3; ++x) {
        double tr = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (m[i][j] == 0) continue;
                double hk = 0; // h(K(X,e_i), e_j)
                for (int a = 0; a < 3; ++a) hk += m[a][j] * ks[x][i][a];
                tr += m[i][j] * hk;
            }
        worst = std::max(worst, std::fabs(tr));
    }
    return worst;
}

} // namespace

std::string sym_class_name(SymClass c) {
    switch (c) {
        case SymClass::SO2: return "SO2";
        case SymClass::Z3: return "Z3";
        case SymClass::S3: return "S3";
        case SymClass::SO11: return "SO11";
        case SymClass::Unknown: return "unknown";
    }
    return "?";
}

namespace {

struct AdaptedFrame {
    Mat3d cols;        // coordinate components, columns (T,V,W) or (E,V,F)
    MeasuredK::FrameType type;
};

Vec3d col(const Mat3d& m, int j) { return {m[0][j], m[1][j], m[2][j]}; }
void set_col(Mat3d& m, int j, const Vec3d& v) {
    m[0][j] = v[0];
    m[1][j] = v[1];
    m[2][j] = v[2];
}

AdaptedFrame build_adapted_frame(const Mat3d& h) {
    AdaptedFrame fr{};
    double htt = h[0][0];
    double scale = sup_norm(h);
    if (std::fabs(htt) < 1e-9 * scale)
        throw std::runtime_error("adapted frame: h(d_t, d_t) is numerically null");

    Vec3d u = {1.0 / std::sqrt(std::fabs(htt)), 0, 0};

    // remove the distinguished direction from the fiber vectors
    Vec3d ev{0, 1, 0}, ew{0, 0, 1};
    double su = htt > 0 ? 1.0 : -1.0;
    auto project_out = [&](Vec3d x) {
        double c = h_of(h, x, u) * su; // h(u,u) = su
        return x - c * u;
    };
    Vec3d f1 = project_out(ev), f2 = project_out(ew);
    double g11 = h_of(h, f1, f1), g12 = h_of(h, f1, f2), g22 = h_of(h, f2, f2);

    if (htt < 0) {
        // orthonormal path: T timelike, fiber positive definite
        if (!(g11 > 0) || !(g11 * g22 - g12 * g12 > 0))
            throw std::runtime_error("adapted frame: fiber metric not positive definite");
        Vec3d V = (1.0 / std::sqrt(g11)) * f1;
        Vec3d w2 = f2 - h_of(h, f2, V) * V;
        double gw = h_of(h, w2, w2);
        if (!(gw > 0)) throw std::runtime_error("adapted frame: fiber Gram-Schmidt failed");
        Vec3d W = (1.0 / std::sqrt(gw)) * w2;
        fr.type = MeasuredK::FrameType::Ortho;
        set_col(fr.cols, 0, u);
        set_col(fr.cols, 1, V);
        set_col(fr.cols, 2, W);
        return fr;
    }

    // lightcone path: t-direction spacelike, fiber Lorentzian
    Eig2 eg = sym_eigen2(g11, g12, g22);
    if (!(eg.l0 < 0 && eg.l1 > 0))
        throw std::runtime_error("adapted frame: fiber metric not Lorentzian");
    Vec3d n = eg.v0[0] * f1 + eg.v0[1] * f2; // timelike eigenvector
    Vec3d sv = eg.v1[0] * f1 + eg.v1[1] * f2;
    n = (1.0 / std::sqrt(-eg.l0)) * n;
    sv = (1.0 / std::sqrt(eg.l1)) * sv;
    const double r = 1.0 / std::sqrt(2.0);
    Vec3d E = r * (n + sv);
    Vec3d F = r * (sv - n);
    fr.type = MeasuredK::FrameType::Light;
    set_col(fr.cols, 0, E);
    set_col(fr.cols, 1, u); // V = spacelike distinguished direction
    set_col(fr.cols, 2, F);
    return fr;
}

} // namespace

MeasuredK measure_difference_tensor(const FamilyInstance& inst, double t, double v, double w,
                                    double step) {
    StencilData s = build_stencil(inst, t, v, w, step);
    AdaptedFrame fr = build_adapted_frame(s.center.h);
    MeasuredK out;
    out.frame_type = fr.type;

    if (fr.type == MeasuredK::FrameType::Ortho) {
        FrameSlots ks = k_in_frame(s.K, fr.cols);
        // orient T so that K(T,T) = -2 a4 T with a4 >= 0
        double a4 = -0.5 * ks[0][0][0];
        if (a4 < 0) {
            set_col(fr.cols, 0, -1.0 * col(fr.cols, 0));
            ks = k_in_frame(s.K, fr.cols);
            a4 = -0.5 * ks[0][0][0];
        }
        // rotate the V-W plane so the cubic's W-component vanishes, V-part >= 0
        double q = ks[1][1][1], r = ks[1][1][2];
        if (std::hypot(q, r) > 1e-14) {
            double theta = std::atan2(r, q) / 3.0;
            for (double sgn : {1.0, -1.0}) {
                Mat3d cols = fr.cols;
                double cth = std::cos(sgn * theta), sth = std::sin(sgn * theta);
                Vec3d V = col(fr.cols, 1), W = col(fr.cols, 2);
                set_col(cols, 1, cth * V + sth * W);
                set_col(cols, 2, -sth * V + cth * W);
                FrameSlots trial = k_in_frame(s.K, cols);
                if (std::fabs(trial[1][1][2]) <= std::fabs(r) + 1e-15 &&
                    trial[1][1][1] >= -1e-12) {
                    fr.cols = cols;
                    ks = trial;
                    break;
                }
            }
        }
        out.a4 = -0.5 * ks[0][0][0];
        out.a6 = ks[1][1][1];
        out.residual = canonical_residual_ortho(ks, out.a4, out.a6);
        out.apolarity = apolarity_sup(ks, fr.type);
    } else {
        FrameSlots ks = k_in_frame(s.K, fr.cols);
        // orient V so that K(E,F) = b4 V with b4 > 0
        double b4 = ks[0][2][1];
        if (b4 < 0) {
            set_col(fr.cols, 1, -1.0 * col(fr.cols, 1));
            ks = k_in_frame(s.K, fr.cols);
            b4 = ks[0][2][1];
        }
        out.b4 = b4;
        out.residual = canonical_residual_light(ks, out.b4);
        out.apolarity = apolarity_sup(ks, fr.type);
    }
    out.frame = fr.cols;
    return out;
}

SymClass classify_symmetry(const MeasuredK& m, double tol, double residual_tol) {
    if (m.residual > residual_tol) return SymClass::Unknown;
    if (m.frame_type == MeasuredK::FrameType::Light)
        return m.b4 > tol ? SymClass::SO11 : SymClass::Unknown;
    bool has4 = m.a4 > tol, has6 = m.a6 > tol;
    if (has4 && has6) return SymClass::Z3;
    if (has4) return SymClass::SO2;
    if (has6) return SymClass::S3;
    return SymClass::Unknown;
}

AuditResult structure_equation_audit(const FamilyInstance& inst, double t, double v, double w,
                                     double step, double nu_tol) {
    StencilData s = build_stencil(inst, t, v, w, step);
    AuditResult out;
    out.k = measure_difference_tensor(inst, t, v, w, step);
    out.H = inst.H();

    // mean curvature normal of the fiber distribution span{d_v, d_w}:
    // U2 = (1/2) g^{ab} Gamma^t_ab d_t  (fiber orthogonal to d_t here)
    const Mat3d& h = s.center.h;
    double g11 = h[1][1], g12 = h[1][2], g22 = h[2][2];
    double det = g11 * g22 - g12 * g12;
    double ginv[2][2] = {{g22 / det, -g12 / det}, {-g12 / det, g11 / det}};
    double mu = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) mu += ginv[a][b] * s.christoffel[0][a + 1][b + 1];
    mu /= 2;

    double htt = h[0][0];
    // distinguished unit direction = c * d_t, oriented like the measured frame
    int dist_col = out.k.frame_type == MeasuredK::FrameType::Ortho ? 0 : 1;
    double csign = out.k.frame[0][dist_col] >= 0 ? 1.0 : -1.0;
    double cu = csign / std::sqrt(std::fabs(htt));
    // U2 = mu d_t = a22 * (cu d_t)
    out.a22 = mu / cu;

    double dist = out.k.frame_type == MeasuredK::FrameType::Ortho ? out.k.a4 : out.k.b4;
    out.nu = out.a22 * out.a22 - dist * dist - out.H;
    if (std::fabs(out.nu) <= nu_tol)
        out.nu_case = out.H != 0.0 ? 2 : 3;
    else
        out.nu_case = 1;

    // D_T T = -2 a4 T - xi in ambient coordinates (orthonormal path)
    if (out.k.frame_type == MeasuredK::FrameType::Ortho) {
        Jet2Point jc = inst.jet(t, v, w);
        double cplus = 1.0 / std::sqrt(std::fabs(s.h_plus[0][0][0]));
        double cminus = 1.0 / std::sqrt(std::fabs(s.h_minus[0][0][0]));
        double dc = csign * (cplus - cminus) / (2 * s.step);
        double c = cu;
        Vec4d dtt = c * (dc * jc.d1[0] + c * jc.d2[d2_tt]);
        Vec4d expect = (-2.0 * out.k.a4 * c) * jc.d1[0] - inst.normal(t, v, w);
        double scale = std::max({norm_inf(dtt), norm_inf(expect), 1e-300});
        out.dtt_residual = norm_inf(dtt - expect) / scale;
    }

    // D_X xi = -H X
    {
        Jet2Point jc = inst.jet(t, v, w);
        auto nd = inst.normal_d1(t, v, w);
        double worst = 0;
        for (int i = 0; i < 3; ++i) {
            Vec4d r = nd[i] + inst.H() * jc.d1[i];
            worst = std::max(worst, norm_inf(r) / std::max(norm_inf(jc.d1[i]), 1e-300));
        }
        out.dxi_residual = worst;
    }
    return out;
}

double measured_scalar_curvature(const FamilyInstance& inst, double t, double v, double w,
                                 double step) {
    // nested differencing: christoffels at p +- step e_l
    auto christoffel_at = [&](double tt, double vv, double ww, double ch[3][3][3]) {
        StencilData sd = build_stencil(inst, tt, vv, ww, step);
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) ch[k][i][j] = sd.christoffel[k][i][j];
    };
    StencilData s = build_stencil(inst, t, v, w, step);
    double chp[3][3][3][3], chm[3][3][3][3]; // [l][k][i][j]
    const double off[3][3] = {{step, 0, 0}, {0, step, 0}, {0, 0, step}};
    for (int l = 0; l < 3; ++l) {
        christoffel_at(t + off[l][0], v + off[l][1], w + off[l][2], chp[l]);
        christoffel_at(t - off[l][0], v - off[l][1], w - off[l][2], chm[l]);
    }
    double dch[3][3][3][3]; // d_l Gamma^k_ij
    for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    dch[l][k][i][j] = (chp[l][k][i][j] - chm[l][k][i][j]) / (2 * step);

    // Ric_jk = d_i G^i_jk - d_j G^i_ik + G^i_im G^m_jk - G^i_jm G^m_ik
    Mat3d ric{};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            double acc = 0;
            for (int i = 0; i < 3; ++i) {
                acc += dch[i][i][j][k] - dch[j][i][i][k];
                for (int m = 0; m < 3; ++m)
                    acc += s.christoffel[i][i][m] * s.christoffel[m][j][k] -
                           s.christoffel[i][j][m] * s.christoffel[m][i][k];
            }
            ric[j][k] = acc;
        }
    double kappa = 0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) kappa += s.hinv[j][k] * ric[j][k];
    return kappa / 6.0;
}

} // namespace affsym
