#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace reebcone {

using qmat = std::vector<qvec>;
using zmat = std::vector<zvec>;

inline rational dot(const qvec& a, const qvec& b) {
    rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline rational dot(const zvec& a, const qvec& b) {
    rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += rational(a[i]) * b[i];
    return s;
}

inline integer dot(const zvec& a, const zvec& b) {
    integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline qvec to_qvec(const zvec& v) {
    qvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rational(v[i]);
    return out;
}

inline qvec operator+(const qvec& a, const qvec& b) {
    qvec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline qvec operator-(const qvec& a, const qvec& b) {
    qvec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline qvec operator*(const rational& c, const qvec& v) {
    qvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

inline bool is_zero(const qvec& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

/// Row-reduced rank of a rational matrix (destructive on a copy).
inline int rank(qmat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int rank(const zmat& m) {
    qmat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = to_qvec(m[i]);
    return rank(std::move(q));
}

inline rational det(qmat m) {
    const std::size_t n = m.size();
    rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot == n) return 0;
        if (pivot != c) { std::swap(m[c], m[pivot]); d = -d; }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline integer det(const zmat& m) {
    qmat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = to_qvec(m[i]);
    rational d = det(std::move(q));
    return numerator(d);  // integer matrix has integer determinant
}

/// Solves the square system (rows of a) . x = rhs; throws on singular input.
inline qvec solve(qmat a, qvec rhs) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot == n) throw degenerate_input_error("singular linear system");
        std::swap(a[c], a[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    qvec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

/// Primitive kernel generator of a rank (k-1) system of rational rows.
/// Returns an integer vector with content 1; sign is not normalized.
inline zvec kernel_generator(const qmat& rows, std::size_t k);

inline integer content(const zvec& v) {
    integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Clears denominators and divides by the content; preserves direction.
inline zvec primitivize(const qvec& v) {
    integer l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    zvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i] * rational(l));
    integer g = content(out);
    if (g == 0) throw degenerate_input_error("primitivize: zero vector");
    for (auto& x : out) x /= g;
    return out;
}

inline zvec kernel_generator(const qmat& rows, std::size_t k) {
    // Gaussian elimination, then back-substitute the single free column.
    qmat m = rows;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    std::vector<bool> is_pivot(k, false);
    for (std::size_t c = 0; c < k && r < m.size(); ++c) {
        std::size_t p = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    if (r + 1 != k) throw degenerate_input_error("kernel_generator: nullity != 1");
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    qvec x(k, rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
    return primitivize(x);
}

/// gcd of all r x r minors where r = rank; equals the product of the Smith
/// normal form elementary divisors, i.e. the index of the row lattice inside
/// the saturation of its real span.  1 means the rows span a saturated lattice.
inline integer lattice_index(const zmat& rows) {
    const int r = rank(rows);
    if (r == 0) return 1;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    integer g = 0;
    // Enumerate all r-subsets of rows and columns.
    auto for_subsets = [](std::size_t n, std::size_t k, auto&& fn) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            fn(idx);
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (idx[i] != i + n - k) break;
            }
            if (idx[i] == i + n - k) return;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    for_subsets(nr, static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& ri) {
        for_subsets(nc, static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& ci) {
            zmat sub(r, zvec(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub[i][j] = rows[ri[i]][ci[j]];
            g = boost::multiprecision::gcd(g, det(sub));
        });
    });
    return boost::multiprecision::abs(g);
}

/// Smith normal form elementary divisors via determinantal divisor quotients.
inline std::vector<integer> snf_divisors(const zmat& rows) {
    const int r = rank(rows);
    std::vector<integer> out;
    if (r == 0) return out;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    auto for_subsets = [](std::size_t n, std::size_t k, auto&& fn) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            fn(idx);
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (idx[i] != i + n - k) break;
            }
            if (idx[i] == i + n - k) return;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    integer prev = 1;
    for (int s = 1; s <= r; ++s) {
        integer g = 0;
        for_subsets(nr, static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& ri) {
            for_subsets(nc, static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& ci) {
                zmat sub(s, zvec(s));
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) sub[i][j] = rows[ri[i]][ci[j]];
                g = boost::multiprecision::gcd(g, det(sub));
            });
        });
        out.push_back(boost::multiprecision::abs(g) / prev);
        prev = boost::multiprecision::abs(g);
    }
    return out;
}

/// Z-basis of the sublattice { x in Z^k : <x, u> = 0 } for an integer covector
/// u != 0, built from a unimodular transform that collects the gcd of u into a
/// single slot.  The remaining k-1 transform columns span the kernel.
inline zmat lattice_kernel_basis(const zvec& u) {
    const std::size_t k = u.size();
    zmat basis(k, zvec(k, 0));
    for (std::size_t i = 0; i < k; ++i) basis[i][i] = 1;  // basis[i] = e_i
    zvec val = u;                                         // val[i] = <basis[i], u>
    std::size_t carrier = k;
    for (std::size_t i = 0; i < k; ++i) {
        if (val[i] == 0) continue;
        if (carrier == k) { carrier = i; continue; }
        // Combine carrier and i so that the new carrier holds gcd, i holds 0.
        integer a = val[carrier], b = val[i], x, y;
        integer g = [&] {
            // extended gcd
            integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                integer q = old_r / r;
                integer tmp = old_r - q * r; old_r = r; r = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
                tmp = old_t - q * t; old_t = t; t = tmp;
            }
            x = old_s; y = old_t;
            return old_r;
        }();
        if (g < 0) { g = -g; x = -x; y = -y; }
        zvec new_carrier(k), new_i(k);
        for (std::size_t j = 0; j < k; ++j) {
            new_carrier[j] = x * basis[carrier][j] + y * basis[i][j];
            new_i[j]       = -(b / g) * basis[carrier][j] + (a / g) * basis[i][j];
        }
        basis[carrier] = new_carrier;
        basis[i] = new_i;
        val[carrier] = g;
        val[i] = 0;
    }
    if (carrier == k) throw degenerate_input_error("lattice_kernel_basis: zero covector");
    zmat kernel;
    for (std::size_t i = 0; i < k; ++i)
        if (i != carrier) kernel.push_back(basis[i]);
    return kernel;
}

}  // namespace reebcone
