#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace reebcone {

/// Graded nilpotent polynomial in the formal Chern symbols E_0, ..., E_{n-m}
/// and c1W, truncated above total degree m: any product term of higher degree
/// integrates to zero over a component of dimension 2m and is dropped on the
/// fly.  Coefficients live in a generic ring R.
template <class R>
struct truncated_class {
    int truncation = 0;   // m
    int num_symbols = 1;  // E_0..E_{n-m} followed by c1W
    std::map<std::vector<int>, R> coeff;

    truncated_class() = default;
    truncated_class(int m, int symbols) : truncation(m), num_symbols(symbols) {}

    static truncated_class scalar(int m, int symbols, R value) {
        truncated_class c(m, symbols);
        if (!ring<R>::is_zero(value)) c.coeff.emplace(std::vector<int>(symbols, 0), std::move(value));
        return c;
    }
    static truncated_class one(int m, int symbols) {
        return scalar(m, symbols, ring<R>::from(rational(1)));
    }
    /// The degree-1 monomial for symbol index i (E_i, or c1W for the last).
    static truncated_class symbol(int m, int symbols, int i, R value = ring<R>::from(rational(1))) {
        truncated_class c(m, symbols);
        if (m >= 1) {
            std::vector<int> mono(symbols, 0);
            mono[i] = 1;
            c.coeff.emplace(std::move(mono), std::move(value));
        }
        return c;
    }

    static int degree_of(const std::vector<int>& mono) {
        return std::accumulate(mono.begin(), mono.end(), 0);
    }

    void add_term(const std::vector<int>& mono, const R& value) {
        if (degree_of(mono) > truncation) return;
        auto it = coeff.find(mono);
        if (it == coeff.end()) {
            if (!ring<R>::is_zero(value)) coeff.emplace(mono, value);
        } else {
            it->second = it->second + value;
            if (ring<R>::is_zero(it->second)) coeff.erase(it);
        }
    }
};

template <class R>
void check_compatible(const truncated_class<R>& a, const truncated_class<R>& b) {
    if (a.truncation != b.truncation || a.num_symbols != b.num_symbols)
        throw mixed_truncation_error("operands have different truncation data");
}

template <class R>
truncated_class<R> operator+(const truncated_class<R>& a, const truncated_class<R>& b) {
    check_compatible(a, b);
    truncated_class<R> out = a;
    for (const auto& [mono, v] : b.coeff) out.add_term(mono, v);
    return out;
}

template <class R>
truncated_class<R> class_multiply(const truncated_class<R>& a, const truncated_class<R>& b) {
    check_compatible(a, b);
    truncated_class<R> out(a.truncation, a.num_symbols);
    for (const auto& [ma, va] : a.coeff) {
        int da = truncated_class<R>::degree_of(ma);
        for (const auto& [mb, vb] : b.coeff) {
            if (da + truncated_class<R>::degree_of(mb) > a.truncation) continue;
            std::vector<int> mono(a.num_symbols);
            for (int i = 0; i < a.num_symbols; ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, va * vb);
        }
    }
    return out;
}

template <class R>
truncated_class<R> operator*(const truncated_class<R>& a, const truncated_class<R>& b) {
    return class_multiply(a, b);
}

template <class R>
truncated_class<R> operator*(const R& s, const truncated_class<R>& a) {
    truncated_class<R> out(a.truncation, a.num_symbols);
    for (const auto& [mono, v] : a.coeff) out.add_term(mono, s * v);
    return out;
}

/// Intersection pairing on a fixed component: rational integrals of the
/// top-degree monomials.  Entries of total degree != m never pair.
struct chern_table {
    int degree = 0;       // m
    int num_symbols = 1;  // same layout as truncated_class
    std::map<std::vector<int>, rational> integrals;

    static chern_table point(int symbols) {
        chern_table t;
        t.degree = 0;
        t.num_symbols = symbols;
        t.integrals.emplace(std::vector<int>(symbols, 0), rational(1));
        return t;
    }
};

/// Pairs the degree-m part of the class against the intersection table.
template <class R>
R integrate(const truncated_class<R>& cls, const chern_table& table) {
    if (cls.truncation != table.degree || cls.num_symbols != table.num_symbols)
        throw mixed_truncation_error("class and table have different truncation data");
    R total = ring<R>::from(rational(0));
    for (const auto& [mono, v] : cls.coeff) {
        if (truncated_class<R>::degree_of(mono) != table.degree) continue;
        auto it = table.integrals.find(mono);
        if (it == table.integrals.end()) continue;
        total = total + v * ring<R>::from(it->second);
    }
    return total;
}

/// Expansion of prod_j 1/(pairing_j - E_j) as a product of truncated geometric
/// series: prod_j (1/w_j) sum_{s<=m} (E_j / w_j)^s with w_j = <kappa_j, b>.
/// Throws vanishing_weight_error (component id -1) when some w_j is zero in R.
template <class R>
truncated_class<R> inverse_euler_pairings(const std::vector<R>& pairings, int m, int num_symbols) {
    truncated_class<R> out = truncated_class<R>::one(m, num_symbols);
    for (std::size_t j = 0; j < pairings.size(); ++j) {
        if (ring<R>::is_zero(pairings[j]))
            throw vanishing_weight_error(-1, static_cast<int>(j),
                                         "weight pairing " + std::to_string(j) + " vanishes");
        R inv_w = ring<R>::from(rational(1)) / pairings[j];
        truncated_class<R> factor(m, num_symbols);
        R power = inv_w;  // (1/w) (E_j/w)^s collected degree by degree
        for (int s = 0; s <= m; ++s) {
            std::vector<int> mono(num_symbols, 0);
            mono[j] = s;
            factor.add_term(mono, power);
            power = power * inv_w;
        }
        out = class_multiply(out, factor);
    }
    return out;
}

}  // namespace reebcone
