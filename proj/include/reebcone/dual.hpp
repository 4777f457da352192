#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace reebcone {

/// Forward-mode first-order number: value plus gradient with respect to the k
/// seed variables.  With rational scalars the gradients are exact.  Constants
/// may carry an empty gradient; the operators broadcast it as zero.
template <class T>
struct dual {
    T value{};
    std::vector<T> grad;

    dual() = default;
    explicit dual(T v) : value(std::move(v)) {}
    dual(T v, std::size_t k) : value(std::move(v)), grad(k, T(0)) {}
    dual(T v, std::vector<T> g) : value(std::move(v)), grad(std::move(g)) {}

    static dual seed(T v, std::size_t k, std::size_t index) {
        dual d(std::move(v), k);
        d.grad[index] = T(1);
        return d;
    }

    T partial(std::size_t i) const { return i < grad.size() ? grad[i] : T(0); }
};

namespace detail {
template <class T>
std::size_t width(const dual<T>& a, const dual<T>& b) {
    return a.grad.size() > b.grad.size() ? a.grad.size() : b.grad.size();
}
}  // namespace detail

template <class T>
dual<T> operator+(const dual<T>& a, const dual<T>& b) {
    dual<T> out(a.value + b.value, detail::width(a, b));
    for (std::size_t i = 0; i < out.grad.size(); ++i) out.grad[i] = a.partial(i) + b.partial(i);
    return out;
}

template <class T>
dual<T> operator-(const dual<T>& a, const dual<T>& b) {
    dual<T> out(a.value - b.value, detail::width(a, b));
    for (std::size_t i = 0; i < out.grad.size(); ++i) out.grad[i] = a.partial(i) - b.partial(i);
    return out;
}

template <class T>
dual<T> operator-(const dual<T>& a) {
    dual<T> out(-a.value, a.grad.size());
    for (std::size_t i = 0; i < a.grad.size(); ++i) out.grad[i] = -a.grad[i];
    return out;
}

template <class T>
dual<T> operator*(const dual<T>& a, const dual<T>& b) {
    dual<T> out(a.value * b.value, detail::width(a, b));
    for (std::size_t i = 0; i < out.grad.size(); ++i)
        out.grad[i] = a.partial(i) * b.value + a.value * b.partial(i);
    return out;
}

template <class T>
dual<T> operator/(const dual<T>& a, const dual<T>& b) {
    if (b.value == T(0)) throw error("dual: division by zero value");
    dual<T> out(a.value / b.value, detail::width(a, b));
    T den = b.value * b.value;
    for (std::size_t i = 0; i < out.grad.size(); ++i)
        out.grad[i] = (a.partial(i) * b.value - a.value * b.partial(i)) / den;
    return out;
}

template <class T>
dual<T> pow_int(const dual<T>& base, int e) {
    dual<T> out(T(1));
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

using dual_q = dual<rational>;

}  // namespace reebcone
