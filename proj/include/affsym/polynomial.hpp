#pragma once
#include <map>
#include <string>
#include <vector>
#include "affsym/rational.hpp"

namespace affsym {

// ===========================================================================
// Symbols
// ===========================================================================
//
// Plain symbols: H, a4, a6 and the nine Levi-Civita coefficients of the
// orthonormal frame. Frame derivatives T(c), V(c), W(c) are opaque
// first-order markers; no chain or commutation rules exist for them.

enum class Dir : int { T = 0, V = 1, W = 2 };

namespace sym {
enum : int {
    H = 0, a4, a6, a12, a13, a22, a23, a32, a33, b13, b23, b33,
    kBaseCount
};
} // namespace sym

constexpr int kDerivBase = sym::kBaseCount;

inline int deriv_symbol(Dir d, int base) {
    return kDerivBase + static_cast<int>(d) * sym::kBaseCount + base;
}
inline bool is_deriv_symbol(int id) { return id >= kDerivBase; }

std::string symbol_name(int id);

// ===========================================================================
// Polynomial over Q in the symbols above, canonical term map
// ===========================================================================

class Polynomial {
public:
    // monomial: sorted (symbol, exponent) pairs, exponents > 0
    using Monomial = std::vector<std::pair<int, int>>;
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(long long c) { if (c != 0) terms_[{}] = Rational(c); }
    explicit Polynomial(const Rational& c) { if (!c.is_zero()) terms_[{}] = c; }

    static Polynomial symbol(int id) {
        Polynomial p;
        p.terms_[{{id, 1}}] = Rational(1);
        return p;
    }
    static Polynomial deriv(Dir d, int base) { return symbol(deriv_symbol(d, base)); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return a.terms_ < b.terms_;
    }

    bool contains_symbol(int id) const;
    bool has_deriv_symbols() const;

    // content-free, leading-coefficient-positive representative of the ray Q*.p
    Polynomial normal_form() const;

    std::string str() const;

private:
    TermMap terms_; // invariant: no zero coefficients
    void add_term(const Monomial& m, const Rational& c);
    friend Polynomial substitute(const Polynomial&, const std::vector<std::pair<int, Polynomial>>&);
    friend Polynomial frame_derivative(const Polynomial&, Dir);
};

// Simultaneous substitution symbol -> polynomial. Bindings may chain
// (a -> p(b), b -> q(c)) and are applied in dependency order; a cyclic
// binding set is rejected with std::invalid_argument.
Polynomial substitute(const Polynomial& p, const std::vector<std::pair<int, Polynomial>>& bindings);

// Leibniz derivative in frame direction d. Plain symbols map to their opaque
// markers (H, being constant, maps to zero); differentiating a marker again
// would need second-order symbols and throws.
Polynomial frame_derivative(const Polynomial& p, Dir d);

} // namespace affsym
