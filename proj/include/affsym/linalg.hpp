#pragma once
#include <array>
#include <cmath>
#include <stdexcept>

namespace affsym {

using Vec3d = std::array<double, 3>;
using Vec4d = std::array<double, 4>;
using Mat3d = std::array<std::array<double, 3>, 3>;

inline Vec3d operator+(const Vec3d& a, const Vec3d& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3d operator-(const Vec3d& a, const Vec3d& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3d operator*(double s, const Vec3d& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec4d operator+(const Vec4d& a, const Vec4d& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
inline Vec4d operator-(const Vec4d& a, const Vec4d& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
inline Vec4d operator*(double s, const Vec4d& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

inline double norm_inf(const Vec4d& a) {
    double m = 0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}
inline double norm_inf(const Vec3d& a) {
    double m = 0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}

// Column-major 4x4 solver: columns are basis vectors, solves B c = rhs.
class Basis4 {
public:
    Basis4(const Vec4d& b0, const Vec4d& b1, const Vec4d& b2, const Vec4d& b3);

    double det() const { return det_; }
    bool singular(double tol) const { return std::fabs(det_) < tol; }
    Vec4d solve(const Vec4d& rhs) const; // coefficients in the basis

private:
    std::array<std::array<double, 4>, 4> lu_{};
    std::array<int, 4> perm_{};
    double det_ = 0;
};

double det3(const Vec3d& a, const Vec3d& b, const Vec3d& c);
Mat3d invert3(const Mat3d& m); // throws on singular

// Eigenvalues of a symmetric 3x3 (Jacobi sweeps), ascending order.
std::array<double, 3> sym_eigenvalues3(const Mat3d& m);

// Eigen-decomposition of a symmetric 2x2: returns {l0, l1, c, s} with
// eigenvectors (c,-s) for l0 and (s,c) for l1... see impl for convention.
struct Eig2 {
    double l0, l1;      // eigenvalues, l0 <= l1
    std::array<double, 2> v0, v1; // unit eigenvectors
};
Eig2 sym_eigen2(double a, double b, double c); // matrix [[a,b],[b,c]]

} // namespace affsym
