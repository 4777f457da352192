#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "truncated_class.hpp"

namespace reebcone {

/// Exact functional value q * pi^p.  The volume, total transverse scalar
/// curvature and Einstein-Hilbert functional all carry p = n + 1.
struct functional_value {
    rational coeff;
    int pi_power = 0;

    double value() const { return to_double(coeff) * std::pow(M_PI, pi_power); }
    std::string to_string() const {
        return format_rational(coeff) + " * pi^" + std::to_string(pi_power);
    }
};

struct gradient_value {
    qvec coeff;
    int pi_power = 0;

    std::vector<double> value() const {
        std::vector<double> out(coeff.size());
        double p = std::pow(M_PI, pi_power);
        for (std::size_t i = 0; i < coeff.size(); ++i) out[i] = to_double(coeff[i]) * p;
        return out;
    }
};

enum class functional { volume, total_scalar, einstein_hilbert, h1 };

inline const char* functional_name(functional f) {
    switch (f) {
        case functional::volume: return "V";
        case functional::total_scalar: return "S";
        case functional::einstein_hilbert: return "H";
        case functional::h1: return "H1";
    }
    return "?";
}

inline functional functional_from_name(const std::string& s) {
    if (s == "V") return functional::volume;
    if (s == "S") return functional::total_scalar;
    if (s == "H") return functional::einstein_hilbert;
    if (s == "H1") return functional::h1;
    throw io_error("unknown functional '" + s + "' (expected V, S, H or H1)");
}

inline rational factorial(int n) {
    rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace detail {

/// sum_Z (1/d_Z) int_Z [numerator] prod_j (1/w_j) sum_s (E_j/w_j)^s over a
/// generic coefficient ring.  The scalar numerator is c1W + sum_{i>=1} w_i
/// per the extended localization formula; the volume numerator is 1.
template <class R>
R localized_sum(const localization_dataset& d, const std::vector<R>& b, bool scalar_numerator) {
    R total = ring<R>::from(rational(0));
    for (std::size_t zi = 0; zi < d.components.size(); ++zi) {
        const fixed_component& z = d.components[zi];
        const int symbols = d.n - z.m + 2;
        std::vector<R> pairings;
        pairings.reserve(z.weights.size());
        for (const auto& kappa : z.weights) {
            R w = ring<R>::from(rational(0));
            for (std::size_t l = 0; l < kappa.size(); ++l)
                w = w + ring<R>::from(kappa[l]) * b[l];
            pairings.push_back(std::move(w));
        }
        truncated_class<R> cls;
        try {
            cls = inverse_euler_pairings(pairings, z.m, symbols);
        } catch (const vanishing_weight_error& e) {
            throw vanishing_weight_error(static_cast<int>(zi), e.weight,
                                         "component '" + z.name + "': " + e.what());
        }
        if (scalar_numerator) {
            R weight_sum = ring<R>::from(rational(0));
            for (std::size_t i = 1; i < pairings.size(); ++i)
                weight_sum = weight_sum + pairings[i];
            truncated_class<R> numer =
                truncated_class<R>::scalar(z.m, symbols, weight_sum) +
                truncated_class<R>::symbol(z.m, symbols, symbols - 1);  // c1W
            cls = class_multiply(numer, cls);
        }
        R integral = integrate(cls, z.chern);
        total = total + integral / ring<R>::from(rational(z.d));
    }
    return total;
}

template <class R>
std::vector<R> lift_point(const qvec& b) {
    std::vector<R> out;
    out.reserve(b.size());
    for (const auto& x : b) out.push_back(ring<R>::from(x));
    return out;
}

}  // namespace detail

/// V = (2 pi)^{n+1} / n! x localized sum; homogeneous of degree -(n+1).
inline functional_value volume(const localization_dataset& d, const qvec& b) {
    rational sum = detail::localized_sum<rational>(d, detail::lift_point<rational>(b), false);
    rational pref = rational(integer(1) << (d.n + 1)) / factorial(d.n);
    return {pref * sum, d.n + 1};
}

/// S = 2 (2 pi)^{n+1} / (n-1)! x localized sum with the scalar numerator;
/// homogeneous of degree -n.
inline functional_value total_scalar(const localization_dataset& d, const qvec& b) {
    rational sum = detail::localized_sum<rational>(d, detail::lift_point<rational>(b), true);
    rational pref = rational(integer(2) << (d.n + 1)) / factorial(d.n - 1);
    return {pref * sum, d.n + 1};
}

/// H = S^{n+1} / V^n; scale invariant, rational multiple of pi^{n+1}.
inline functional_value einstein_hilbert(const localization_dataset& d, const qvec& b) {
    functional_value v = volume(d, b);
    functional_value s = total_scalar(d, b);
    if (v.coeff == 0) throw zero_volume_error("volume vanishes; H undefined");
    rational num = 1, den = 1;
    for (int i = 0; i <= d.n; ++i) num *= s.coeff;
    for (int i = 0; i < d.n; ++i) den *= v.coeff;
    return {num / den, d.n + 1};
}

/// H1 = sign(S) |H| with sign(0) = 0, so H1 vanishes on a zero-scalar ray.
inline functional_value h1(const localization_dataset& d, const qvec& b) {
    functional_value s = total_scalar(d, b);
    if (s.coeff == 0) return {rational(0), d.n + 1};
    functional_value h = einstein_hilbert(d, b);
    rational mag = abs(h.coeff);
    return {s.coeff > 0 ? mag : -mag, d.n + 1};
}

inline functional_value evaluate(functional f, const localization_dataset& d, const qvec& b) {
    switch (f) {
        case functional::volume: return volume(d, b);
        case functional::total_scalar: return total_scalar(d, b);
        case functional::einstein_hilbert: return einstein_hilbert(d, b);
        case functional::h1: return h1(d, b);
    }
    throw error("unreachable");
}

namespace detail {

inline dual_q volume_dual(const localization_dataset& d, const std::vector<dual_q>& b) {
    dual_q sum = localized_sum<dual_q>(d, b, false);
    rational pref = rational(integer(1) << (d.n + 1)) / factorial(d.n);
    return ring<dual_q>::from(pref) * sum;
}

inline dual_q total_scalar_dual(const localization_dataset& d, const std::vector<dual_q>& b) {
    dual_q sum = localized_sum<dual_q>(d, b, true);
    rational pref = rational(integer(2) << (d.n + 1)) / factorial(d.n - 1);
    return ring<dual_q>::from(pref) * sum;
}

inline dual_q functional_dual(functional f, const localization_dataset& d,
                              const std::vector<dual_q>& b) {
    switch (f) {
        case functional::volume: return volume_dual(d, b);
        case functional::total_scalar: return total_scalar_dual(d, b);
        case functional::einstein_hilbert: {
            dual_q v = volume_dual(d, b);
            dual_q s = total_scalar_dual(d, b);
            if (v.value == 0) throw zero_volume_error("volume vanishes; H undefined");
            return pow_int(s, d.n + 1) / pow_int(v, d.n);
        }
        case functional::h1: {
            dual_q s = total_scalar_dual(d, b);
            if (s.value == 0)
                throw error("H1 is not differentiable on a zero-scalar locus");
            dual_q v = volume_dual(d, b);
            if (v.value == 0) throw zero_volume_error("volume vanishes; H1 undefined");
            dual_q h = pow_int(s, d.n + 1) / pow_int(v, d.n);
            // sign(S) |H| flips the sign of H exactly when H < 0 xor S < 0.
            bool flip = (h.value < 0) != (s.value < 0);
            return flip ? -h : h;
        }
    }
    throw error("unreachable");
}

}  // namespace detail

/// Exact gradient with respect to b, as a rational covector times pi^{n+1}.
inline gradient_value gradient(functional f, const localization_dataset& d, const qvec& b) {
    std::vector<dual_q> seeds;
    seeds.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        seeds.push_back(dual_q::seed(b[i], b.size(), i));
    dual_q out = detail::functional_dual(f, d, seeds);
    return {out.grad, d.n + 1};
}

/// Double-precision mirror of the evaluators, for optimization scans and
/// finite-difference checks.
inline double evaluate_double(functional f, const localization_dataset& d,
                              const std::vector<double>& b) {
    switch (f) {
        case functional::volume: {
            double sum = detail::localized_sum<double>(d, b, false);
            return to_double(rational(integer(1) << (d.n + 1)) / factorial(d.n)) * sum *
                   std::pow(M_PI, d.n + 1);
        }
        case functional::total_scalar: {
            double sum = detail::localized_sum<double>(d, b, true);
            return to_double(rational(integer(2) << (d.n + 1)) / factorial(d.n - 1)) * sum *
                   std::pow(M_PI, d.n + 1);
        }
        case functional::einstein_hilbert: {
            double v = evaluate_double(functional::volume, d, b);
            double s = evaluate_double(functional::total_scalar, d, b);
            return std::pow(s, d.n + 1) / std::pow(v, d.n);
        }
        case functional::h1: {
            double s = evaluate_double(functional::total_scalar, d, b);
            double h = evaluate_double(functional::einstein_hilbert, d, b);
            return (s > 0 ? 1.0 : s < 0 ? -1.0 : 0.0) * std::fabs(h);
        }
    }
    throw error("unreachable");
}

/// Direct vertex-sum evaluators for toric cones: the isolated-fixed-point
/// form of the localization formulas, summed straight over the slice
/// vertices without the class algebra.  Used to cross-check the dataset path.
inline functional_value volume_toric(const good_cone& cone, const qvec& b,
                                     const qvec& slicing_field) {
    slice_polytope slice = slice_cone(cone, slicing_field);
    const int n = cone.n();
    rational sum = 0;
    for (std::size_t v = 0; v < slice.vertices.size(); ++v) {
        vertex_weights w = weights_at(cone, slice, static_cast<int>(v));
        rational prod = 1;
        for (int j = 0; j <= n; ++j) {
            rational p = dot(w.kappa[j], b);
            if (p == 0)
                throw vanishing_weight_error(static_cast<int>(v), j, "vanishing vertex pairing");
            prod *= p;
        }
        sum += rational(1) / (rational(w.d) * prod);
    }
    return {rational(integer(1) << (n + 1)) / factorial(n) * sum, n + 1};
}

inline functional_value total_scalar_toric(const good_cone& cone, const qvec& b,
                                           const qvec& slicing_field) {
    slice_polytope slice = slice_cone(cone, slicing_field);
    const int n = cone.n();
    rational sum = 0;
    for (std::size_t v = 0; v < slice.vertices.size(); ++v) {
        vertex_weights w = weights_at(cone, slice, static_cast<int>(v));
        rational prod = 1, numer = 0;
        for (int j = 0; j <= n; ++j) {
            rational p = dot(w.kappa[j], b);
            if (p == 0)
                throw vanishing_weight_error(static_cast<int>(v), j, "vanishing vertex pairing");
            prod *= p;
            if (j >= 1) numer += p;
        }
        sum += numer / (rational(w.d) * prod);
    }
    return {rational(integer(2) << (n + 1)) / factorial(n - 1) * sum, n + 1};
}

}  // namespace reebcone
