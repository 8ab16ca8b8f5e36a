#pragma once
#include <array>
#include <cmath>
#include <stdexcept>
#include <variant>
#include "affsym/rational.hpp"

namespace affsym {

// ===========================================================================
// Frames and metric conventions
// ===========================================================================
//
// Orthonormal frame {T,V,W}: h = diag(-1,+1,+1), basis order (T,V,W).
// Lightcone frame {E,V,F}:   h(E,F)=1, h(V,V)=1, all else 0, order (E,V,F).
// Both metric matrices are involutions, so h^{-1} = h entrywise.

enum class FrameSignature { Orthonormal, Lightcone };

inline const std::array<std::array<int, 3>, 3>& metric_matrix(FrameSignature sig) {
    static const std::array<std::array<int, 3>, 3> ortho{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    static const std::array<std::array<int, 3>, 3> light{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
    return sig == FrameSignature::Orthonormal ? ortho : light;
}

template <class S>
struct FrameVec3 {
    S c1{}, c2{}, c3{};

    const S& operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
    S& operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }

    friend FrameVec3 operator+(const FrameVec3& a, const FrameVec3& b) {
        return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
    }
    friend FrameVec3 operator-(const FrameVec3& a, const FrameVec3& b) {
        return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
    }
    friend FrameVec3 operator*(const S& s, const FrameVec3& a) {
        return {s * a.c1, s * a.c2, s * a.c3};
    }
    friend bool operator==(const FrameVec3& a, const FrameVec3& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
    }
};

template <class S>
FrameVec3<S> frame_basis(int i) {
    FrameVec3<S> v;
    v[i] = S(1);
    return v;
}

// scalar adapters so the same code runs over double, Rational and Polynomial
template <class S>
S from_rational(const Rational& r) { return S(r); }
template <>
inline double from_rational<double>(const Rational& r) { return r.to_double(); }
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }

template <class S>
S scaled(int k, const S& s) {
    return from_rational<S>(Rational(k)) * s;
}

// ===========================================================================
// Canonical difference tensor
// ===========================================================================

template <class S>
struct CanonicalK {
    struct OrthoForm { S a4, a6; };
    struct LightForm { S b4; };
    std::variant<OrthoForm, LightForm> form;

    static CanonicalK ortho(S a4, S a6) { return {OrthoForm{std::move(a4), std::move(a6)}}; }
    static CanonicalK light(S b4) { return {LightForm{std::move(b4)}}; }

    bool is_ortho() const { return std::holds_alternative<OrthoForm>(form); }
    FrameSignature signature() const {
        return is_ortho() ? FrameSignature::Orthonormal : FrameSignature::Lightcone;
    }

    // K(e_i, e_j) in frame coordinates
    FrameVec3<S> table(int i, int j) const {
        if (is_ortho()) {
            const auto& f = std::get<OrthoForm>(form);
            const S& s = f.a4;
            const S& u = f.a6;
            if (i > j) std::swap(i, j);
            if (i == 0 && j == 0) return {scaled<S>(-2, s), S(0), S(0)};
            if (i == 0 && j == 1) return {S(0), s, S(0)};
            if (i == 0 && j == 2) return {S(0), S(0), s};
            if (i == 1 && j == 1) return {scaled<S>(-1, s), u, S(0)};
            if (i == 1 && j == 2) return {S(0), S(0), scaled<S>(-1, u)};
            return {scaled<S>(-1, s), scaled<S>(-1, u), S(0)}; // (W,W)
        }
        const auto& f = std::get<LightForm>(form);
        const S& b = f.b4;
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 0) return {S(0), S(0), S(0)};          // K(E,E)=0
        if (i == 0 && j == 1) return {b, S(0), S(0)};             // K(E,V)=b4 E
        if (i == 0 && j == 2) return {S(0), b, S(0)};             // K(E,F)=b4 V
        if (i == 1 && j == 1) return {S(0), scaled<S>(-2, b), S(0)};
        if (i == 1 && j == 2) return {S(0), S(0), b};             // K(V,F)=b4 F
        return {S(0), S(0), S(0)};                                // K(F,F)=0
    }
};

template <class S>
struct CurvatureContext {
    S H;
    CanonicalK<S> K;
};

// ===========================================================================
// Operations
// ===========================================================================

template <class S>
S metric_eval(const FrameVec3<S>& x, const FrameVec3<S>& y, FrameSignature sig) {
    const auto& m = metric_matrix(sig);
    S acc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != 0) acc = acc + scaled<S>(m[i][j], x[i] * y[j]);
    return acc;
}

template <class S>
FrameVec3<S> difference_tensor_eval(const CanonicalK<S>& k, const FrameVec3<S>& x,
                                    const FrameVec3<S>& y) {
    FrameVec3<S> acc{S(0), S(0), S(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            acc = acc + (x[i] * y[j]) * k.table(i, j);
    return acc;
}

// h-trace of Y -> K(X,Y); zero for every canonical form (apolarity)
template <class S>
S trace_K(const CanonicalK<S>& k, const FrameVec3<S>& x, FrameSignature sig) {
    const auto& m = metric_matrix(sig); // inverse equals the matrix itself
    S acc(0);
    for (int i = 0; i < 3; ++i) {
        FrameVec3<S> kxi = difference_tensor_eval(k, x, frame_basis<S>(i));
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != 0)
                acc = acc + scaled<S>(m[i][j], metric_eval(kxi, frame_basis<S>(j), sig));
    }
    return acc;
}

// R(X,Y)Z = H(h(Y,Z)X - h(X,Z)Y) - [K_X,K_Y]Z
template <class S>
FrameVec3<S> curvature_LC(const CurvatureContext<S>& ctx, const FrameVec3<S>& x,
                          const FrameVec3<S>& y, const FrameVec3<S>& z) {
    FrameSignature sig = ctx.K.signature();
    FrameVec3<S> r = (ctx.H * metric_eval(y, z, sig)) * x - (ctx.H * metric_eval(x, z, sig)) * y;
    FrameVec3<S> kyz = difference_tensor_eval(ctx.K, y, z);
    FrameVec3<S> kxz = difference_tensor_eval(ctx.K, x, z);
    r = r - difference_tensor_eval(ctx.K, x, kyz) + difference_tensor_eval(ctx.K, y, kxz);
    return r;
}

// Ric(X,Y) = trace{Z -> R(Z,X)Y}
template <class S>
S ricci(const CurvatureContext<S>& ctx, const FrameVec3<S>& x, const FrameVec3<S>& y) {
    FrameSignature sig = ctx.K.signature();
    const auto& m = metric_matrix(sig);
    S acc(0);
    for (int i = 0; i < 3; ++i) {
        FrameVec3<S> r = curvature_LC(ctx, frame_basis<S>(i), x, y);
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != 0)
                acc = acc + scaled<S>(m[i][j], metric_eval(r, frame_basis<S>(j), sig));
    }
    return acc;
}

// J = (1/6) h(K,K), full contraction of the cubic form C_ijk = h(K(e_i,e_j),e_k)
template <class S>
S pick_invariant(const CanonicalK<S>& k, FrameSignature sig) {
    const auto& m = metric_matrix(sig);
    std::array<std::array<std::array<S, 3>, 3>, 3> c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FrameVec3<S> kij = k.table(i, j);
            for (int l = 0; l < 3; ++l)
                c[i][j][l] = metric_eval(kij, frame_basis<S>(l), sig);
        }
    S acc(0);
    for (int i = 0; i < 3; ++i)
        for (int p = 0; p < 3; ++p) {
            if (m[i][p] == 0) continue;
            for (int j = 0; j < 3; ++j)
                for (int q = 0; q < 3; ++q) {
                    if (m[j][q] == 0) continue;
                    for (int l = 0; l < 3; ++l)
                        for (int r = 0; r < 3; ++r) {
                            if (m[l][r] == 0) continue;
                            acc = acc + scaled<S>(m[i][p] * m[j][q] * m[l][r],
                                                  c[i][j][l] * c[p][q][r]);
                        }
                }
        }
    return from_rational<S>(Rational(1, 6)) * acc;
}

// Closed form (1/3)(-5 a4^2 + 2 a6^2) for the orthonormal canonical form
template <class S>
S pick_invariant_closed(const CanonicalK<S>& k) {
    if (!k.is_ortho()) throw std::invalid_argument("pick_invariant_closed: orthonormal form only");
    const auto& f = std::get<typename CanonicalK<S>::OrthoForm>(k.form);
    return from_rational<S>(Rational(-5, 3)) * (f.a4 * f.a4) +
           from_rational<S>(Rational(2, 3)) * (f.a6 * f.a6);
}

// kappa = (1/6) h^{ij} Ric_ij; equals H + J
template <class S>
S scalar_curvature(const CurvatureContext<S>& ctx) {
    FrameSignature sig = ctx.K.signature();
    const auto& m = metric_matrix(sig);
    S acc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != 0)
                acc = acc + scaled<S>(m[i][j],
                                      ricci(ctx, frame_basis<S>(i), frame_basis<S>(j)));
    return from_rational<S>(Rational(1, 6)) * acc;
}

// Fixed lightcone -> orthonormal coordinate map: E=(T+W)/sqrt2, F=(-T+W)/sqrt2.
inline FrameVec3<double> light_to_ortho(const FrameVec3<double>& lv) {
    const double r = 1.0 / std::sqrt(2.0);
    // lv = (e, v, f) coordinates in (E,V,F)
    return {r * (lv.c1 - lv.c3), lv.c2, r * (lv.c1 + lv.c3)};
}

} // namespace affsym
