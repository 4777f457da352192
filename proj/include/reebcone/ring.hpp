#pragma once

#include "dual.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace reebcone {

/// The localization sums are evaluated over several coefficient rings: exact
/// rationals, rationals with exact gradients (dual numbers), univariate
/// rational functions (for limits along a line), and plain doubles.
template <class R>
struct ring;

template <>
struct ring<rational> {
    static rational from(const rational& q) { return q; }
    static bool is_zero(const rational& x) { return x == 0; }
};

template <>
struct ring<double> {
    static double from(const rational& q) { return to_double(q); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ring<rat_func> {
    static rat_func from(const rational& q) { return rat_func(q); }
    static bool is_zero(const rat_func& x) { return x.is_zero(); }
};

template <>
struct ring<dual_q> {
    // Constants carry empty gradients; the dual operators broadcast them.
    static dual_q from(const rational& q) { return dual_q(q); }
    static bool is_zero(const dual_q& x) { return x.value == 0; }
};

}  // namespace reebcone
