#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"
#include "errors.hpp"
#include "functionals.hpp"
#include "rational.hpp"

namespace reebcone {

/// Built-in cone with provenance note and optional exact anchors checked by
/// the verify suite.  Anchors are stated only where a closed form fixes them
/// (round odd spheres); everything else is derived from the oracle at run
/// time.
struct catalog_entry {
    std::string name;
    good_cone cone;
    std::string note;
    struct anchor {
        functional f;
        qvec b;             // evaluated through the limit path when non-generic
        functional_value expected;
    };
    std::vector<anchor> anchors;
};

namespace detail {

inline good_cone orthant_cone(int k, const std::string& name) {
    zmat normals(k, zvec(k, 0));
    for (int i = 0; i < k; ++i) normals[i][i] = 1;
    return validate_good_cone(normals, k, name);
}

inline good_cone lens_cone(long p, long q, const std::string& name) {
    return validate_good_cone({{1, 0}, {integer(-q), integer(p)}}, 2, name);
}

/// Quadrilateral cones of the Y^{p,q} family, 0 <= q < p; (1,0) is the cone
/// over the square (the conifold).
inline good_cone ypq_cone(long p, long q, const std::string& name) {
    if (!(0 <= q && q < p)) throw degenerate_input_error("ypq requires 0 <= q < p");
    zmat normals = {{1, 0, 0},
                    {1, 1, 0},
                    {1, integer(p), integer(p)},
                    {1, integer(p - q - 1), integer(p - q)}};
    return validate_good_cone(normals, 3, name);
}

inline qvec diagonal(int k) { return qvec(k, rational(1)); }

/// Round-sphere closed forms: V = 2 pi^{n+1}/n!, S = 4n(n+1) V, H = S^{n+1}/V^n.
inline std::vector<catalog_entry::anchor> sphere_anchors(int k) {
    const int n = k - 1;
    rational v = rational(2) / factorial(n);
    rational s = rational(4 * n * (n + 1)) * v;
    rational h = 1;
    for (int i = 0; i <= n; ++i) h *= s;
    for (int i = 0; i < n; ++i) h /= v;
    return {{functional::volume, diagonal(k), {v, n + 1}},
            {functional::total_scalar, diagonal(k), {s, n + 1}},
            {functional::einstein_hilbert, diagonal(k), {h, n + 1}}};
}

}  // namespace detail

inline const std::vector<catalog_entry>& catalog() {
    static const std::vector<catalog_entry> entries = [] {
        std::vector<catalog_entry> out;
        out.push_back({"orthant2", detail::orthant_cone(2, "orthant2"),
                       "moment cone of the round S^3 (positive quadrant)",
                       detail::sphere_anchors(2)});
        out.push_back({"orthant3", detail::orthant_cone(3, "orthant3"),
                       "moment cone of the round S^5 (positive octant)",
                       detail::sphere_anchors(3)});
        out.push_back({"orthant4", detail::orthant_cone(4, "orthant4"),
                       "moment cone of the round S^7",
                       detail::sphere_anchors(4)});
        out.push_back({"lens_2_1", detail::lens_cone(2, 1, "lens_2_1"),
                       "lens space L(2,1) cone, normals (1,0), (-1,2)", {}});
        out.push_back({"lens_3_1", detail::lens_cone(3, 1, "lens_3_1"),
                       "lens space L(3,1) cone, normals (1,0), (-1,3)", {}});
        out.push_back({"lens_3_2", detail::lens_cone(3, 2, "lens_3_2"),
                       "lens space L(3,2) cone, normals (1,0), (-2,3)", {}});
        out.push_back({"conifold", detail::ypq_cone(1, 0, "conifold"),
                       "cone over the square: the conifold T^{1,1} (Y^{1,0})", {}});
        out.push_back({"ypq_2_1", detail::ypq_cone(2, 1, "ypq_2_1"),
                       "Y^{2,1} quadrilateral cone", {}});
        out.push_back({"ypq_3_1", detail::ypq_cone(3, 1, "ypq_3_1"),
                       "Y^{3,1} quadrilateral cone", {}});
        out.push_back({"ypq_3_2", detail::ypq_cone(3, 2, "ypq_3_2"),
                       "Y^{3,2} quadrilateral cone", {}});
        return out;
    }();
    return entries;
}

/// Looks up a catalog entry by name; also accepts the dynamic families
/// "lens:p,q" and "ypq:p,q".
inline catalog_entry catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    auto parse_pair = [&](const std::string& args) {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw io_error("expected p,q in '" + name + "'");
        return std::pair<long, long>(std::stol(args.substr(0, comma)),
                                     std::stol(args.substr(comma + 1)));
    };
    if (name.rfind("lens:", 0) == 0) {
        auto [p, q] = parse_pair(name.substr(5));
        return {name, detail::lens_cone(p, q, name), "lens space family", {}};
    }
    if (name.rfind("ypq:", 0) == 0) {
        auto [p, q] = parse_pair(name.substr(4));
        return {name, detail::ypq_cone(p, q, name), "Y^{p,q} family", {}};
    }
    throw io_error("unknown catalog entry '" + name + "'");
}

}  // namespace reebcone
