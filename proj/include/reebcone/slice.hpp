#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cone.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace reebcone {

/// Characteristic polytope Delta = C* cap { <x, b_o> = 1/2 } of a slicing
/// Reeb field b_o.  The vertices sit on the extreme rays of C*; the slicing
/// field is primitivized on its ray, which leaves every derived functional
/// unchanged and keeps the orbifold orders integral.
struct slice_polytope {
    zvec b_ref;                    // primitive integer slicing field
    qmat vertices;                 // x_v = rho_v / (2 <rho_v, b_ref>)
    std::vector<std::vector<int>> vertex_facets;  // active cone facets per vertex
    struct edge {
        int v, w;                  // vertex ids, v < w
        zvec direction;            // primitive direction of x_w - x_v
    };
    std::vector<edge> edges;
};

/// Weights of the torus action at the fixed point over a slice vertex.
/// kappa[0] pairs to 1 with b_ref and kappa[i >= 1] annihilate it; together
/// with the orbifold order d they are the columns of the inverse of the
/// matrix stacking the active facet normals over b_ref (the i >= 1 columns
/// carry the factor-2 normalization pinned by the round-sphere anchor).
struct vertex_weights {
    int vertex = 0;
    integer d = 1;
    qmat kappa;  // k covectors of dimension k; kappa[0] is the fiber weight
};

inline slice_polytope slice_cone(const good_cone& cone, const qvec& b_o) {
    const int k = cone.rank_k;
    if (b_o.size() != static_cast<std::size_t>(k))
        throw degenerate_input_error("slicing field has wrong dimension");
    if (!reeb_cone_contains(cone, b_o))
        throw infeasible_reeb_error("slicing field is not in the open Reeb cone");

    slice_polytope slice;
    slice.b_ref = primitivize(b_o);

    for (std::size_t v = 0; v < cone.num_rays(); ++v) {
        if (cone.ray_facets[v].size() != static_cast<std::size_t>(k - 1))
            throw not_simple_error(static_cast<int>(v),
                                   "slice vertex " + std::to_string(v) + " lies on " +
                                       std::to_string(cone.ray_facets[v].size()) +
                                       " facets, expected " + std::to_string(k - 1));
        rational level = dot(cone.rays[v], to_qvec(slice.b_ref));
        qvec x(k);
        for (int i = 0; i < k; ++i) x[i] = rational(cone.rays[v][i]) / (2 * level);
        slice.vertices.push_back(std::move(x));
        slice.vertex_facets.push_back(cone.ray_facets[v]);
    }

    // Two vertices are joined by an edge when their rays span a 2-face: they
    // share k-2 facets and no third ray lies on all of those facets.
    for (std::size_t v = 0; v < slice.vertices.size(); ++v) {
        for (std::size_t w = v + 1; w < slice.vertices.size(); ++w) {
            std::vector<int> common;
            std::set_intersection(slice.vertex_facets[v].begin(), slice.vertex_facets[v].end(),
                                  slice.vertex_facets[w].begin(), slice.vertex_facets[w].end(),
                                  std::back_inserter(common));
            if (common.size() != static_cast<std::size_t>(k - 2)) continue;
            bool third = false;
            for (std::size_t r = 0; r < slice.vertices.size() && !third; ++r) {
                if (r == v || r == w) continue;
                third = std::includes(slice.vertex_facets[r].begin(), slice.vertex_facets[r].end(),
                                      common.begin(), common.end());
            }
            if (third) continue;
            qvec dir = slice.vertices[w] - slice.vertices[v];
            if (is_zero(dir)) throw degenerate_edge_error("coincident slice vertices");
            slice.edges.push_back({static_cast<int>(v), static_cast<int>(w), primitivize(dir)});
        }
    }
    return slice;
}

inline vertex_weights weights_at(const good_cone& cone, const slice_polytope& slice, int vertex) {
    const int k = cone.rank_k;
    const auto& active = slice.vertex_facets.at(vertex);
    if (active.size() != static_cast<std::size_t>(k - 1))
        throw not_simple_error(vertex, "vertex is not simple");

    zmat a_rows;
    for (int a : active) a_rows.push_back(cone.normals[a]);  // labels included
    a_rows.push_back(slice.b_ref);

    integer d = det(a_rows);
    if (d == 0) throw degenerate_edge_error("degenerate facet system at vertex");
    if (d < 0) d = -d;

    qmat a_q(a_rows.size());
    for (std::size_t i = 0; i < a_rows.size(); ++i) a_q[i] = to_qvec(a_rows[i]);

    vertex_weights out;
    out.vertex = vertex;
    out.d = d;
    out.kappa.resize(k);
    // kappa_0 solves <x, u_a> = 0 for each active facet and <x, b_ref> = 1,
    // i.e. it is the ray generator rescaled to pair to 1 with b_ref.
    {
        qvec rhs(k, rational(0));
        rhs[k - 1] = 1;
        out.kappa[0] = solve(a_q, rhs);
    }
    for (int i = 0; i < k - 1; ++i) {
        qvec rhs(k, rational(0));
        rhs[i] = 1;
        out.kappa[i + 1] = rational(2) * solve(a_q, rhs);
    }
    return out;
}

}  // namespace reebcone
