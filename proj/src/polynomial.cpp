#include "affsym/polynomial.hpp"
#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affsym {

std::string symbol_name(int id) {
    static const char* base[] = {"H",   "a4",  "a6",  "a12", "a13", "a22",
                                 "a23", "a32", "a33", "b13", "b23", "b33"};
    if (id < kDerivBase) return base[id];
    int d = (id - kDerivBase) / sym::kBaseCount;
    int b = (id - kDerivBase) % sym::kBaseCount;
    static const char* dir[] = {"T", "V", "W"};
    return std::string(dir[d]) + "(" + base[b] + ")";
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

static Polynomial::Monomial mul_monomials(const Polynomial::Monomial& a,
                                          const Polynomial::Monomial& b) {
    Polynomial::Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mul_monomials(ma, mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : p.terms_) r.terms_[m] = c * k;
    return r;
}

bool Polynomial::contains_symbol(int id) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m)
            if (s == id) return true;
    return false;
}

bool Polynomial::has_deriv_symbols() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m)
            if (is_deriv_symbol(s)) return true;
    return false;
}

Polynomial Polynomial::normal_form() const {
    if (terms_.empty()) return {};
    // clear denominators, divide by integer content
    long long l = 1;
    for (const auto& [m, c] : terms_) l = std::lcm(l, c.den());
    long long g = 0;
    for (const auto& [m, c] : terms_) g = std::gcd(g, (Rational(l) * c).num());
    Rational scale = Rational(l, g);
    if ((scale * terms_.rbegin()->second).is_negative()) scale = -scale;
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = scale * c;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.is_negative()) { os << "-"; c = -c; }
        } else {
            os << (c.is_negative() ? " - " : " + ");
            if (c.is_negative()) c = -c;
        }
        first = false;
        bool unit = (c == Rational(1)) && !it->first.empty();
        if (!unit) os << c.str();
        bool lead = unit;
        for (const auto& [s, e] : it->first) {
            os << (lead ? "" : "*") << symbol_name(s);
            if (e > 1) os << "^" << e;
            lead = false;
        }
    }
    return os.str();
}

Polynomial substitute(const Polynomial& p, const std::vector<std::pair<int, Polynomial>>& bindings) {
    // dependency order between bound symbols; cycles rejected
    std::map<int, const Polynomial*> bound;
    for (const auto& [s, q] : bindings) {
        if (!bound.emplace(s, &q).second)
            throw std::invalid_argument("substitute: symbol bound twice: " + symbol_name(s));
    }
    std::vector<int> order;
    std::map<int, int> state; // 0 new, 1 visiting, 2 done
    std::function<void(int)> visit = [&](int s) {
        int& st = state[s];
        if (st == 2) return;
        if (st == 1) throw std::invalid_argument("substitute: cyclic binding at " + symbol_name(s));
        st = 1;
        for (const auto& [m, c] : bound[s]->terms())
            for (const auto& [t, e] : m)
                if (bound.count(t)) visit(t);
        st = 2;
        order.push_back(s);
    };
    for (const auto& [s, q] : bound) visit(s);

    // resolve each binding against the ones it depends on
    std::map<int, Polynomial> resolved;
    auto apply_single = [](const Polynomial& src, int s, const Polynomial& val) {
        Polynomial out;
        for (const auto& [m, c] : src.terms()) {
            Polynomial term(c);
            for (const auto& [t, e] : m) {
                Polynomial f = (t == s) ? val : Polynomial::symbol(t);
                for (int k = 0; k < e; ++k) term = term * f;
            }
            out += term;
        }
        return out;
    };
    for (int s : order) {
        Polynomial v = *bound[s];
        for (const auto& [t, rv] : resolved)
            if (v.contains_symbol(t)) v = apply_single(v, t, rv);
        resolved.emplace(s, std::move(v));
    }

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& [s, e] : m) {
            auto it = resolved.find(s);
            Polynomial f = (it != resolved.end()) ? it->second : Polynomial::symbol(s);
            for (int k = 0; k < e; ++k) term = term * f;
        }
        out += term;
    }
    return out;
}

Polynomial frame_derivative(const Polynomial& p, Dir d) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            auto [s, e] = m[i];
            if (s == sym::H) continue; // H is constant on a hypersphere
            if (is_deriv_symbol(s))
                throw std::logic_error("frame_derivative: second-order derivative of " +
                                       symbol_name(s));
            // Leibniz: c * e * s^(e-1) * D(d,s) * rest
            Polynomial::Monomial rest;
            for (size_t j = 0; j < m.size(); ++j) {
                if (j == i) {
                    if (e > 1) rest.emplace_back(s, e - 1);
                } else {
                    rest.push_back(m[j]);
                }
            }
            Polynomial term;
            term.add_term(rest, c * Rational(e));
            out += term * Polynomial::deriv(d, s);
        }
    }
    return out;
}

} // namespace affsym
