#pragma once

#include <stdexcept>
#include <string>

namespace reebcone {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cone input fails a structural precondition (empty interior, contains a
/// line, duplicate or redundant facets, malformed data).
struct not_strongly_convex_error : error { using error::error; };
struct degenerate_input_error : error { using error::error; };

/// A proper face whose primitivized facet normals do not span the full
/// sublattice of their real span.
struct not_good_error : error {
    explicit not_good_error(std::string face, const std::string& msg)
        : error(msg), face_id(std::move(face)) {}
    std::string face_id;
};

/// A cone ray lies on more than rank-1 facets; the slice vertex is not simple.
struct not_simple_error : error {
    explicit not_simple_error(int vertex_, const std::string& msg) : error(msg), vertex(vertex_) {}
    int vertex;
};

struct degenerate_edge_error : error { using error::error; };

/// Reeb vector outside the open dual cone.
struct infeasible_reeb_error : error { using error::error; };

/// Some weight pairing <kappa_j, b> is exactly zero; the localized sum is not
/// defined at b and the caller should route through the limit evaluator.
struct vanishing_weight_error : error {
    vanishing_weight_error(int component_, int weight_, const std::string& msg)
        : error(msg), component(component_), weight(weight_) {}
    int component;
    int weight;
};

struct mixed_truncation_error : error { using error::error; };
struct zero_volume_error : error { using error::error; };

struct direction_not_generic_error : error { using error::error; };
struct pole_at_zero_error : error { using error::error; };
struct ambiguous_minimizer_error : error { using error::error; };

struct not_transversal_error : error { using error::error; };
struct non_convergence_error : error { using error::error; };
struct grid_too_coarse_error : error { using error::error; };

struct io_error : error { using error::error; };

}  // namespace reebcone
