#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace reebcone {

/// Moment cone C* = { x : <x, u_a> >= 0 } described by integer inward facet
/// normals.  Validation enumerates the extreme rays and the face lattice and
/// checks Lerman's integrality condition face by face: the primitivized
/// normals through each face must span the full sublattice of their real
/// span.  Non-primitive normals are kept as ramification labels m_a and do
/// not fail the check; they feed the orbifold orders downstream.
struct good_cone {
    int rank_k = 0;
    std::string name;
    zmat normals;                          // as given, possibly non-primitive
    zmat primitive_normals;
    std::vector<integer> labels;           // content of each given normal
    zmat rays;                             // primitive extreme ray generators
    std::vector<std::vector<int>> ray_facets;  // sorted facet indices through each ray
    std::vector<std::string> warnings;

    std::size_t num_facets() const { return normals.size(); }
    std::size_t num_rays() const { return rays.size(); }
    /// Contact dimension parameter: dim N = 2n + 1 with n = k - 1.
    int n() const { return rank_k - 1; }
};

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
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
}

/// Extreme rays of { x : <x, rows_a> >= 0 } for a pointed full-dimensional
/// cone, as primitive integer vectors with canonical (inward) orientation.
inline zmat enumerate_rays(const zmat& normals, int k) {
    std::set<zvec> found;
    for_each_subset(normals.size(), static_cast<std::size_t>(k - 1),
                    [&](const std::vector<std::size_t>& idx) {
        qmat rows;
        rows.reserve(idx.size());
        for (auto i : idx) rows.push_back(to_qvec(normals[i]));
        if (rank(rows) != k - 1) return;
        zvec g;
        try {
            g = kernel_generator(rows, static_cast<std::size_t>(k));
        } catch (const degenerate_input_error&) {
            return;
        }
        bool plus_ok = true, minus_ok = true;
        for (const auto& u : normals) {
            integer p = dot(g, u);
            if (p < 0) plus_ok = false;
            if (p > 0) minus_ok = false;
        }
        if (plus_ok && !minus_ok) {
            found.insert(g);
        } else if (minus_ok && !plus_ok) {
            for (auto& x : g) x = -x;
            found.insert(g);
        }
        // plus_ok && minus_ok means g pairs to zero with every normal, which
        // cannot happen when the normals have full rank.
    });
    return zmat(found.begin(), found.end());
}

}  // namespace detail

inline good_cone validate_good_cone(const zmat& normals, int k, std::string name = {}) {
    if (k < 2) throw degenerate_input_error("rank must be at least 2");
    if (normals.size() < static_cast<std::size_t>(k))
        throw degenerate_input_error("need at least k facet normals");
    for (const auto& u : normals) {
        if (u.size() != static_cast<std::size_t>(k))
            throw degenerate_input_error("normal has wrong dimension");
        if (content(u) == 0) throw degenerate_input_error("zero normal");
    }

    good_cone cone;
    cone.rank_k = k;
    cone.name = std::move(name);
    cone.normals = normals;
    for (std::size_t a = 0; a < normals.size(); ++a) {
        integer m = content(normals[a]);
        cone.labels.push_back(m);
        zvec prim = normals[a];
        for (auto& x : prim) x /= m;
        cone.primitive_normals.push_back(prim);
        if (m > 1)
            cone.warnings.push_back("NonPrimitiveNormal: facet " + std::to_string(a) +
                                    " has label m=" + m.str());
    }
    for (std::size_t a = 0; a < normals.size(); ++a)
        for (std::size_t b = a + 1; b < normals.size(); ++b)
            if (cone.primitive_normals[a] == cone.primitive_normals[b])
                throw degenerate_input_error("duplicate facet normals " + std::to_string(a) +
                                             " and " + std::to_string(b));

    if (rank(cone.primitive_normals) != k)
        throw not_strongly_convex_error("cone contains a line: normals do not span");

    cone.rays = detail::enumerate_rays(cone.primitive_normals, k);
    if (rank(cone.rays) != k)
        throw not_strongly_convex_error("cone has empty interior");

    cone.ray_facets.resize(cone.rays.size());
    for (std::size_t r = 0; r < cone.rays.size(); ++r)
        for (std::size_t a = 0; a < normals.size(); ++a)
            if (dot(cone.rays[r], cone.primitive_normals[a]) == 0)
                cone.ray_facets[r].push_back(static_cast<int>(a));

    // Every listed normal must support a facet (a codimension-1 face).
    for (std::size_t a = 0; a < normals.size(); ++a) {
        zmat on_facet;
        for (std::size_t r = 0; r < cone.rays.size(); ++r)
            if (dot(cone.rays[r], cone.primitive_normals[a]) == 0) on_facet.push_back(cone.rays[r]);
        if (rank(on_facet) != k - 1)
            throw degenerate_input_error("normal " + std::to_string(a) +
                                         " does not support a facet (redundant inequality)");
    }

    // Face lattice as ray subsets: facets, then closure under intersection.
    std::set<std::set<int>> faces;
    for (std::size_t a = 0; a < normals.size(); ++a) {
        std::set<int> f;
        for (std::size_t r = 0; r < cone.rays.size(); ++r)
            if (dot(cone.rays[r], cone.primitive_normals[a]) == 0) f.insert(static_cast<int>(r));
        faces.insert(f);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<int>> current(faces.begin(), faces.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::set<int> meet;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                                      current[j].end(), std::inserter(meet, meet.begin()));
                if (!meet.empty() && faces.insert(meet).second) grew = true;
            }
    }

    for (const auto& face : faces) {
        // Active facet set of the face: all facets containing every ray in it.
        zmat active;
        for (std::size_t a = 0; a < normals.size(); ++a) {
            bool contains_face = true;
            for (int r : face)
                if (dot(cone.rays[r], cone.primitive_normals[a]) != 0) { contains_face = false; break; }
            if (contains_face) active.push_back(cone.primitive_normals[a]);
        }
        if (active.empty()) continue;  // the cone itself
        integer index = lattice_index(active);
        if (index != 1) {
            std::string id = "rays{";
            for (int r : face) id += std::to_string(r) + ",";
            id.back() = '}';
            throw not_good_error(id, "cone is not good at face " + id +
                                         ": lattice index " + index.str());
        }
    }

    return cone;
}

/// Exact membership of b in the open Reeb cone t+ = int dual(C*):
/// <rho, b> > 0 for every extreme ray rho of C*.  Total function; invariant
/// under positive rational scaling of b.
inline bool reeb_cone_contains(const good_cone& cone, const qvec& b) {
    if (b.size() != static_cast<std::size_t>(cone.rank_k)) return false;
    for (const auto& ray : cone.rays)
        if (dot(ray, b) <= 0) return false;
    return true;
}

}  // namespace reebcone
