#pragma once

#include <string>
#include <vector>

#include "cone.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "slice.hpp"
#include "truncated_class.hpp"

namespace reebcone {

/// One connected component Z of the fixed locus: half-dimension m, orbifold
/// order d, the n - m + 1 weight covectors kappa_0, ..., kappa_{n-m} (the
/// fiber weight first), and the Chern intersection table over Z.
struct fixed_component {
    std::string name;
    int m = 0;
    integer d = 1;
    qmat weights;
    chern_table chern;

    int num_weights() const { return static_cast<int>(weights.size()); }
};

/// Full input to the localization formulas for one contact manifold of
/// dimension 2n + 1 acted on by a rank-k torus.
struct localization_dataset {
    int rank_k = 0;
    int n = 0;
    std::vector<fixed_component> components;
};

inline void validate_dataset(const localization_dataset& d) {
    if (d.rank_k < 1 || d.n < 1) throw degenerate_input_error("dataset needs k >= 1 and n >= 1");
    if (d.rank_k > d.n + 1) throw degenerate_input_error("torus rank exceeds n + 1");
    if (d.components.empty()) throw degenerate_input_error("dataset has no fixed components");
    for (const auto& z : d.components) {
        if (z.m < 0 || z.m > d.n)
            throw degenerate_input_error("component half-dimension out of range");
        if (z.d < 1) throw degenerate_input_error("orbifold order must be positive");
        if (z.num_weights() != d.n - z.m + 1)
            throw degenerate_input_error("component '" + z.name + "' needs n - m + 1 weights");
        for (const auto& kappa : z.weights)
            if (kappa.size() != static_cast<std::size_t>(d.rank_k))
                throw degenerate_input_error("weight covector has wrong dimension");
        int symbols = d.n - z.m + 2;  // E_0..E_{n-m} and c1W
        if (z.chern.num_symbols != symbols || z.chern.degree != z.m)
            throw degenerate_input_error("component '" + z.name + "' has mismatched Chern table");
        for (const auto& [mono, q] : z.chern.integrals) {
            (void)q;
            int deg = 0;
            for (int e : mono) deg += e;
            if (deg != z.m)
                throw degenerate_input_error("Chern table entry of degree != m in '" + z.name + "'");
        }
        if (z.m == 0 &&
            (z.chern.integrals.size() != 1 ||
             z.chern.integrals.begin()->second != 1))
            throw degenerate_input_error("point component must have table {1 -> 1}");
    }
}

/// Toric localization data: the fixed locus of the resolved cone is one point
/// per slice vertex, with the vertex weights and orbifold orders of the
/// slicing field b_o.  The functional values downstream do not depend on b_o.
inline localization_dataset dataset_from_cone(const good_cone& cone, const qvec& b_o) {
    slice_polytope slice = slice_cone(cone, b_o);
    localization_dataset d;
    d.rank_k = cone.rank_k;
    d.n = cone.rank_k - 1;
    for (std::size_t v = 0; v < slice.vertices.size(); ++v) {
        vertex_weights w = weights_at(cone, slice, static_cast<int>(v));
        fixed_component z;
        z.name = "vertex" + std::to_string(v);
        z.m = 0;
        z.d = w.d;
        z.weights = w.kappa;
        z.chern = chern_table::point(d.n + 2);
        d.components.push_back(std::move(z));
    }
    validate_dataset(d);
    return d;
}

}  // namespace reebcone
