#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace reebcone {

/// Dense univariate polynomial over Q, coefficient i is the t^i coefficient.
/// Kept normalized: no trailing zero coefficients; zero is the empty vector.
struct poly {
    std::vector<rational> c;

    poly() = default;
    explicit poly(rational constant) {
        if (constant != 0) c.push_back(std::move(constant));
    }
    static poly linear(rational a0, rational a1) {
        poly p;
        p.c = {std::move(a0), std::move(a1)};
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    rational eval(const rational& t) const {
        rational v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
        return v;
    }
    rational at0() const { return c.empty() ? rational(0) : c[0]; }

    /// Multiplicity of the root t = 0.
    int valuation() const {
        if (c.empty()) return 0;
        int v = 0;
        while (c[v] == 0) ++v;
        return v;
    }
};

inline poly operator+(const poly& a, const poly& b) {
    poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
}

inline poly operator-(const poly& a, const poly& b) {
    poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
}

inline poly operator-(const poly& a) { return poly() - a; }

inline poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) return poly();
    poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

inline bool operator==(const poly& a, const poly& b) { return a.c == b.c; }

/// Euclidean remainder; divisor must be nonzero.
inline poly poly_rem(poly a, const poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        rational f = a.c.back() / b.c.back();
        int shift = a.degree() - b.degree();
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

inline poly poly_div_exact(poly a, const poly& b) {
    poly q;
    q.c.assign(a.is_zero() ? 0 : a.c.size(), rational(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        rational f = a.c.back() / b.c.back();
        int shift = a.degree() - b.degree();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    if (!a.is_zero()) throw error("poly_div_exact: non-exact division");
    q.trim();
    return q;
}

/// Monic gcd over Q.
inline poly poly_gcd(poly a, poly b) {
    while (!b.is_zero()) {
        poly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
    return a;
}

inline poly derivative(const poly& a) {
    poly out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) out.c[i - 1] = rational(integer(i)) * a.c[i];
    return out;
}

/// Rational function in one variable over Q, kept reduced with monic
/// denominator.  Supports the field operations needed to evaluate the
/// localization sums along a parametrized line and read off limits.
struct rat_func {
    poly num;
    poly den;

    rat_func() : den(rational(1)) {}
    explicit rat_func(rational constant) : num(std::move(constant)), den(rational(1)) {}
    rat_func(poly n, poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static rat_func variable() {
        rat_func f;
        f.num = poly::linear(rational(0), rational(1));
        return f;
    }

    void normalize() {
        if (den.is_zero()) throw error("rat_func: zero denominator");
        if (num.is_zero()) { den = poly(rational(1)); return; }
        poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_div_exact(num, g);
            den = poly_div_exact(den, g);
        }
        rational lead = den.c.back();
        for (auto& x : num.c) x /= lead;
        for (auto& x : den.c) x /= lead;
    }

    bool is_zero() const { return num.is_zero(); }

    /// Value at t = 0; throws pole_at_zero_error if the reduced form has a pole.
    rational at0() const {
        if (den.at0() == 0) {
            if (num.at0() == 0) throw error("rat_func: unreduced 0/0");
            throw pole_at_zero_error("rational function has a pole at t = 0");
        }
        return num.at0() / den.at0();
    }

    /// Laurent order at t = 0 (negative for poles) and the leading coefficient.
    std::pair<int, rational> leading_at0() const {
        if (num.is_zero()) return {0, rational(0)};
        int vn = num.valuation(), vd = den.valuation();
        return {vn - vd, num.c[vn] / den.c[vd]};
    }

    rational eval(const rational& t) const {
        rational d = den.eval(t);
        if (d == 0) throw pole_at_zero_error("rational function evaluated at a pole");
        return num.eval(t) / d;
    }

    rat_func derivative_fn() const {
        return rat_func(reebcone::derivative(num) * den - num * reebcone::derivative(den),
                        den * den);
    }
};

inline rat_func operator+(const rat_func& a, const rat_func& b) {
    return rat_func(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline rat_func operator-(const rat_func& a, const rat_func& b) {
    return rat_func(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline rat_func operator-(const rat_func& a) { return rat_func(-a.num, a.den); }
inline rat_func operator*(const rat_func& a, const rat_func& b) {
    return rat_func(a.num * b.num, a.den * b.den);
}
inline rat_func operator/(const rat_func& a, const rat_func& b) {
    if (b.is_zero()) throw error("rat_func: division by zero");
    return rat_func(a.num * b.den, a.den * b.num);
}
inline bool operator==(const rat_func& a, const rat_func& b) {
    return a.num == b.num && a.den == b.den;
}

}  // namespace reebcone
