#include "affsym/linalg.hpp"
#include "affsym/rational.hpp"
#include <ostream>

namespace affsym {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Basis4::Basis4(const Vec4d& b0, const Vec4d& b1, const Vec4d& b2, const Vec4d& b3) {
    for (int i = 0; i < 4; ++i) {
        lu_[i][0] = b0[i];
        lu_[i][1] = b1[i];
        lu_[i][2] = b2[i];
        lu_[i][3] = b3[i];
    }
    det_ = 1.0;
    for (int i = 0; i < 4; ++i) perm_[i] = i;
    // partial-pivot LU
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        double best = std::fabs(lu_[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            double v = std::fabs(lu_[r][col]);
            if (v > best) { best = v; piv = r; }
        }
        if (piv != col) {
            std::swap(lu_[piv], lu_[col]);
            std::swap(perm_[piv], perm_[col]);
            det_ = -det_;
        }
        double d = lu_[col][col];
        det_ *= d;
        if (d == 0.0) continue;
        for (int r = col + 1; r < 4; ++r) {
            double f = lu_[r][col] / d;
            lu_[r][col] = f;
            for (int c = col + 1; c < 4; ++c) lu_[r][c] -= f * lu_[col][c];
        }
    }
}

Vec4d Basis4::solve(const Vec4d& rhs) const {
    if (det_ == 0.0) throw std::domain_error("Basis4: singular basis");
    Vec4d y{};
    for (int i = 0; i < 4; ++i) {
        double s = rhs[perm_[i]];
        for (int j = 0; j < i; ++j) s -= lu_[i][j] * y[j];
        y[i] = s;
    }
    Vec4d x{};
    for (int i = 3; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < 4; ++j) s -= lu_[i][j] * x[j];
        x[i] = s / lu_[i][i];
    }
    return x;
}

double det3(const Vec3d& a, const Vec3d& b, const Vec3d& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Mat3d invert3(const Mat3d& m) {
    double d = det3({m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]},
                    {m[0][2], m[1][2], m[2][2]});
    if (d == 0.0) throw std::domain_error("invert3: singular matrix");
    Mat3d inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return inv;
}

std::array<double, 3> sym_eigenvalues3(const Mat3d& m) {
    Mat3d a = m;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::fabs(a[0][1]) + std::fabs(a[0][2]) + std::fabs(a[1][2]);
        if (off < 1e-16 * (std::fabs(a[0][0]) + std::fabs(a[1][1]) + std::fabs(a[2][2]) + 1e-300))
            break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1);
                double s = t * c;
                Mat3d r = a;
                for (int k = 0; k < 3; ++k) {
                    r[p][k] = c * a[p][k] - s * a[q][k];
                    r[q][k] = s * a[p][k] + c * a[q][k];
                }
                Mat3d r2 = r;
                for (int k = 0; k < 3; ++k) {
                    r2[k][p] = c * r[k][p] - s * r[k][q];
                    r2[k][q] = s * r[k][p] + c * r[k][q];
                }
                a = r2;
            }
    }
    std::array<double, 3> ev{a[0][0], a[1][1], a[2][2]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

Eig2 sym_eigen2(double a, double b, double c) {
    Eig2 e;
    double tr = a + c, dt = a * c - b * b;
    double disc = std::sqrt(std::max(0.0, tr * tr / 4 - dt));
    e.l0 = tr / 2 - disc;
    e.l1 = tr / 2 + disc;
    if (std::fabs(b) > 1e-300) {
        double n0 = std::hypot(e.l0 - c, b);
        e.v0 = {(e.l0 - c) / n0, b / n0};
        double n1 = std::hypot(e.l1 - c, b);
        e.v1 = {(e.l1 - c) / n1, b / n1};
    } else if (a <= c) {
        e.v0 = {1, 0};
        e.v1 = {0, 1};
    } else {
        e.v0 = {0, 1};
        e.v1 = {1, 0};
    }
    return e;
}

} // namespace affsym
