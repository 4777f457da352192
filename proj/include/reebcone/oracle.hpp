#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cone.hpp"
#include "errors.hpp"
#include "functionals.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace reebcone {

namespace detail {

/// Pulling triangulation of a simple polytope face, identified by the ids of
/// its vertices and its set of active cone facets.  Cones every facet of the
/// face not containing the pulled vertex over that vertex.  In a simple
/// polytope a face of codimension c lies on exactly c facets, so candidate
/// facets are recognized by active-set size alone.
struct face_triangulator {
    const std::vector<std::vector<int>>* vertex_facets;
    int num_facets;
    bool pull_last = false;  // pull the highest id instead, for independence checks

    void run(const std::vector<int>& ids, const std::vector<int>& active, int dim,
             std::vector<std::vector<int>>& out, std::vector<int>& partial) const {
        if (dim == 0) {
            if (ids.size() != 1) throw error("triangulation: zero face is not a vertex");
            partial.push_back(ids[0]);
            out.push_back(partial);
            partial.pop_back();
            return;
        }
        const int v0 = pull_last ? ids.back() : ids.front();
        std::set<std::vector<int>> seen;
        for (int a = 0; a < num_facets; ++a) {
            if (std::binary_search(active.begin(), active.end(), a)) continue;
            std::vector<int> sub;
            for (int v : ids)
                if (std::binary_search((*vertex_facets)[v].begin(), (*vertex_facets)[v].end(), a))
                    sub.push_back(v);
            if (sub.empty()) continue;
            if (std::find(sub.begin(), sub.end(), v0) != sub.end()) continue;
            std::vector<int> common = (*vertex_facets)[sub[0]];
            for (std::size_t i = 1; i < sub.size(); ++i) {
                std::vector<int> meet;
                std::set_intersection(common.begin(), common.end(), (*vertex_facets)[sub[i]].begin(),
                                      (*vertex_facets)[sub[i]].end(), std::back_inserter(meet));
                common = std::move(meet);
            }
            if (common.size() != active.size() + 1) continue;  // lower-dimensional slice
            if (!seen.insert(common).second) continue;
            partial.push_back(v0);
            run(sub, common, dim - 1, out, partial);
            partial.pop_back();
        }
    }
};

/// Vertices of { y in C* : <y, b> <= 1/2 } away from the apex, at the exact
/// level of the given (not primitivized) field b.
inline qmat truncation_vertices(const good_cone& cone, const qvec& b) {
    if (!reeb_cone_contains(cone, b))
        throw infeasible_reeb_error("field is not in the open Reeb cone");
    qmat out;
    for (std::size_t v = 0; v < cone.num_rays(); ++v) {
        if (cone.ray_facets[v].size() != static_cast<std::size_t>(cone.rank_k - 1))
            throw not_simple_error(static_cast<int>(v), "non-simple slice vertex");
        rational level = dot(cone.rays[v], b);
        qvec x(cone.rank_k);
        for (int i = 0; i < cone.rank_k; ++i) x[i] = rational(cone.rays[v][i]) / (2 * level);
        out.push_back(std::move(x));
    }
    return out;
}

inline std::vector<std::vector<int>> triangulate_slice(const good_cone& cone, bool pull_last) {
    std::vector<int> all_ids(cone.num_rays());
    for (std::size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = static_cast<int>(i);
    face_triangulator tri{&cone.ray_facets, static_cast<int>(cone.num_facets()), pull_last};
    std::vector<std::vector<int>> simplices;
    std::vector<int> partial;
    tri.run(all_ids, {}, cone.rank_k - 1, simplices, partial);
    return simplices;
}

}  // namespace detail

/// Exact Euclidean volume of the truncated cone R_b = { y in C* : <y,b> <= 1/2 }:
/// triangulate the level polytope and cone each simplex to the apex.
inline rational truncated_cone_volume(const good_cone& cone, const qvec& b, bool pull_last = false) {
    qmat xs = detail::truncation_vertices(cone, b);
    rational total = 0;
    for (const auto& simplex : detail::triangulate_slice(cone, pull_last)) {
        qmat m;
        for (int v : simplex) m.push_back(xs[v]);
        total += abs(det(m));
    }
    return total / factorial(cone.rank_k);
}

/// Lattice-normalized n-volume of R_b cap {<y, u_a> = 0} for each facet a:
/// coordinates are taken in a Z-basis of the facet sublattice, and a
/// ramification label m_a scales the measure by 1/m_a.
inline std::vector<rational> facet_measures(const good_cone& cone, const qvec& b) {
    const int k = cone.rank_k;
    qmat xs = detail::truncation_vertices(cone, b);
    std::vector<rational> out;
    for (std::size_t a = 0; a < cone.num_facets(); ++a) {
        zmat basis = lattice_kernel_basis(cone.primitive_normals[a]);
        // Solve x = sum_i y_i basis_i for each vertex on the facet.
        qmat basis_cols(k, qvec(k - 1));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k - 1; ++j) basis_cols[i][j] = rational(basis[j][i]);
        std::vector<int> ids;
        for (std::size_t v = 0; v < cone.num_rays(); ++v)
            if (std::binary_search(cone.ray_facets[v].begin(), cone.ray_facets[v].end(),
                                   static_cast<int>(a)))
                ids.push_back(static_cast<int>(v));
        // Independent rows of the k x (k-1) coordinate system, picked once.
        std::vector<int> rows;
        {
            qmat probe;
            for (int i = 0; i < k && static_cast<int>(rows.size()) < k - 1; ++i) {
                probe.push_back(basis_cols[i]);
                if (rank(probe) == static_cast<int>(rows.size()) + 1) rows.push_back(i);
                else probe.pop_back();
            }
            if (static_cast<int>(rows.size()) != k - 1)
                throw degenerate_input_error("facet basis is rank deficient");
        }
        auto facet_coords = [&](const qvec& x) {
            qmat sys;
            qvec rhs;
            for (int i : rows) {
                sys.push_back(basis_cols[i]);
                rhs.push_back(x[i]);
            }
            qvec y = solve(sys, rhs);
            // Consistency of the remaining rows is guaranteed: x lies in the span.
            return y;
        };
        detail::face_triangulator tri{&cone.ray_facets, static_cast<int>(cone.num_facets()), false};
        std::vector<std::vector<int>> simplices;
        std::vector<int> partial;
        tri.run(ids, {static_cast<int>(a)}, k - 2, simplices, partial);
        rational total = 0;
        for (const auto& simplex : simplices) {
            qmat m;
            for (int v : simplex) m.push_back(facet_coords(xs[v]));
            total += abs(det(m));
        }
        total /= factorial(k - 1);
        out.push_back(total / rational(cone.labels[a]));
    }
    return out;
}

/// Volume through the independent geometric route.  The constant
/// c'_n = (n+1) 2^{n+2} pi^{n+1} is pinned by the round-sphere anchor
/// V(S^{2n+1}) = 2 pi^{n+1} / n! and frozen for all cones.
inline functional_value oracle_volume(const good_cone& cone, const qvec& b) {
    const int n = cone.n();
    rational c = rational(n + 1) * rational(integer(1) << (n + 2));
    return {c * truncated_cone_volume(cone, b), n + 1};
}

/// Total transverse scalar curvature through facet measures, with
/// c_n = n 2^{n+3} pi^{n+1} pinned by s^T(S^{2n+1}) = 4n(n+1).
inline functional_value oracle_scalar(const good_cone& cone, const qvec& b) {
    const int n = cone.n();
    rational sum = 0;
    for (const auto& m : facet_measures(cone, b)) sum += m;
    rational c = rational(n) * rational(integer(1) << (n + 3));
    return {c * sum, n + 1};
}

inline functional_value oracle_einstein_hilbert(const good_cone& cone, const qvec& b) {
    const int n = cone.n();
    functional_value v = oracle_volume(cone, b);
    functional_value s = oracle_scalar(cone, b);
    rational num = 1, den = 1;
    for (int i = 0; i <= n; ++i) num *= s.coeff;
    for (int i = 0; i < n; ++i) den *= v.coeff;
    return {num / den, n + 1};
}

}  // namespace reebcone
