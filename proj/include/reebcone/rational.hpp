#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace reebcone {

using integer  = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

using qvec = std::vector<rational>;
using zvec = std::vector<integer>;

inline double to_double(const rational& q) { return q.convert_to<double>(); }

/// Parses "p/q", "p" or "-p/q" (whitespace allowed around the slash).
inline rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(text));
        integer num(text.substr(0, slash));
        integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

/// Canonical form: "p" when the denominator is 1, else "p/q" reduced.
inline std::string format_rational(const rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// 17 significant digits, enough to round-trip an IEEE double.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Exact rational from an IEEE double (dyadic, no rounding).
inline rational exact_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    return rational(x);
}

/// Best rational approximation with denominator <= max_den (continued fractions).
inline rational rationalize(double x, const integer& max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    rational target = exact_from_double(x);
    if (denominator(target) <= max_den) return target;
    // Stern-Brocot style convergents of the continued fraction expansion.
    integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    rational rest = target;
    bool negative = rest < 0;
    if (negative) rest = -rest;
    while (true) {
        integer a = numerator(rest) / denominator(rest);
        integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Take the best semiconvergent still within the bound.
            integer room = (max_den - q0) / q1;
            integer ps = room * p1 + p0, qs = room * q1 + q0;
            rational cand1(p1, q1), cand2(ps, qs), tgt = negative ? -target : target;
            rational best = (qs > 0 && abs(cand2 - tgt) < abs(cand1 - tgt)) ? cand2 : cand1;
            return negative ? -best : best;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        rational frac = rest - rational(a);
        if (frac == 0) return negative ? rational(-p1, q1) : rational(p1, q1);
        rest = rational(1) / frac;
    }
}

inline qvec parse_rational_vector(const std::vector<std::string>& parts) {
    qvec out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_rational(p));
    return out;
}

}  // namespace reebcone
