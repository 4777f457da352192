#include <catch2/catch_amalgamated.hpp>

#include <reebcone/cone.hpp>
#include <reebcone/slice.hpp>

using namespace reebcone;

namespace {
zmat orthant(int k) {
    zmat n(k, zvec(k, 0));
    for (int i = 0; i < k; ++i) n[i][i] = 1;
    return n;
}
qvec q(std::initializer_list<int> v) {
    qvec out;
    for (int x : v) out.push_back(rational(x));
    return out;
}
}  // namespace

TEST_CASE("orthant slices are the coordinate simplices at level 1/2") {
    good_cone c2 = validate_good_cone(orthant(2), 2);
    slice_polytope s2 = slice_cone(c2, q({1, 1}));
    REQUIRE(s2.vertices.size() == 2);
    for (const auto& x : s2.vertices) CHECK(dot(s2.b_ref, x) == rational(1, 2));
    std::set<qvec> vs(s2.vertices.begin(), s2.vertices.end());
    CHECK(vs.count({rational(1, 2), rational(0)}) == 1);
    CHECK(vs.count({rational(0), rational(1, 2)}) == 1);
    REQUIRE(s2.edges.size() == 1);

    good_cone c3 = validate_good_cone(orthant(3), 3);
    slice_polytope s3 = slice_cone(c3, q({1, 1, 1}));
    CHECK(s3.vertices.size() == 3);
    CHECK(s3.edges.size() == 3);
    for (const auto& x : s3.vertices) CHECK(dot(s3.b_ref, x) == rational(1, 2));
}

TEST_CASE("slicing field is primitivized so rescaling does not change the slice") {
    good_cone c2 = validate_good_cone(orthant(2), 2);
    slice_polytope a = slice_cone(c2, q({1, 1}));
    slice_polytope b = slice_cone(c2, {rational(7, 3), rational(7, 3)});
    CHECK(a.b_ref == b.b_ref);
    CHECK(a.vertices == b.vertices);
}

TEST_CASE("conifold slice is a quadrilateral") {
    good_cone con = validate_good_cone({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, 3);
    slice_polytope s = slice_cone(con, {rational(1), rational(1, 2), rational(1, 2)});
    CHECK(s.b_ref == zvec{2, 1, 1});
    REQUIRE(s.vertices.size() == 4);
    CHECK(s.edges.size() == 4);  // quadrilateral, no diagonals
    for (const auto& x : s.vertices) CHECK(dot(s.b_ref, x) == rational(1, 2));
}

TEST_CASE("infeasible slicing fields are rejected") {
    good_cone c2 = validate_good_cone(orthant(2), 2);
    CHECK_THROWS_AS(slice_cone(c2, q({1, -1})), infeasible_reeb_error);
    CHECK_THROWS_AS(slice_cone(c2, q({1, 0})), infeasible_reeb_error);
}

TEST_CASE("vertex weights on the orthant match the pinned normalization") {
    good_cone c2 = validate_good_cone(orthant(2), 2);
    slice_polytope s2 = slice_cone(c2, q({1, 1}));
    // Locate the vertex (1/2, 0).
    int v = s2.vertices[0][0] == rational(1, 2) ? 0 : 1;
    vertex_weights w = weights_at(c2, s2, v);
    CHECK(w.d == 1);
    CHECK(w.kappa[0] == qvec{rational(1), rational(0)});
    CHECK(w.kappa[1] == qvec{rational(-2), rational(2)});

    good_cone c3 = validate_good_cone(orthant(3), 3);
    slice_polytope s3 = slice_cone(c3, q({1, 1, 1}));
    int v1 = -1;
    for (std::size_t i = 0; i < s3.vertices.size(); ++i)
        if (s3.vertices[i][0] == rational(1, 2)) v1 = static_cast<int>(i);
    REQUIRE(v1 >= 0);
    vertex_weights w3 = weights_at(c3, s3, v1);
    CHECK(w3.d == 1);
    CHECK(w3.kappa[0] == qvec{rational(1), rational(0), rational(0)});
    CHECK(w3.kappa[1] == qvec{rational(-2), rational(2), rational(0)});
    CHECK(w3.kappa[2] == qvec{rational(-2), rational(0), rational(2)});
}

TEST_CASE("weight pairings with the slicing field are exact") {
    good_cone con = validate_good_cone({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, 3);
    qvec fields[] = {q({2, 1, 1}), q({3, 1, 1}), q({5, 2, 1}), {rational(4), rational(5, 2), rational(1, 2)}};
    for (const auto& b_o : fields) {
        slice_polytope s = slice_cone(con, b_o);
        qvec beta = to_qvec(s.b_ref);
        for (std::size_t v = 0; v < s.vertices.size(); ++v) {
            vertex_weights w = weights_at(con, s, static_cast<int>(v));
            CHECK(w.d >= 1);
            CHECK(dot(w.kappa[0], beta) == 1);
            CHECK(w.kappa[0] == rational(2) * s.vertices[v]);
            for (std::size_t i = 1; i < w.kappa.size(); ++i)
                CHECK(dot(w.kappa[i], beta) == 0);
        }
    }
}

TEST_CASE("orbifold label scales the order and divides the edge weight") {
    good_cone c = validate_good_cone({{2, 0}, {0, 1}}, 2);
    slice_polytope s = slice_cone(c, q({1, 1}));
    for (std::size_t v = 0; v < s.vertices.size(); ++v) {
        vertex_weights w = weights_at(c, s, static_cast<int>(v));
        if (s.vertices[v][0] == 0) {  // vertex on the labeled facet's ray
            CHECK(w.d == 2);
            CHECK(w.kappa[0] == qvec{rational(0), rational(1)});
            CHECK(w.kappa[1] == qvec{rational(1), rational(-1)});
        } else {
            CHECK(w.d == 1);
            CHECK(w.kappa[1] == qvec{rational(-2), rational(2)});
        }
    }
}

TEST_CASE("non-diagonal slicing fields produce non-unimodular vertex orders") {
    good_cone c3 = validate_good_cone(orthant(3), 3);
    slice_polytope s = slice_cone(c3, q({1, 1, 2}));
    int v3 = -1;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        if (s.vertices[i][2] != 0) v3 = static_cast<int>(i);
    REQUIRE(v3 >= 0);
    vertex_weights w = weights_at(c3, s, v3);
    CHECK(s.vertices[v3] == qvec{rational(0), rational(0), rational(1, 4)});
    CHECK(w.d == 2);
    CHECK(w.kappa[0] == qvec{rational(0), rational(0), rational(1, 2)});
    CHECK(w.kappa[1] == qvec{rational(2), rational(0), rational(-1)});
    CHECK(w.kappa[2] == qvec{rational(0), rational(2), rational(-1)});
}

TEST_CASE("a good cone with a non-simple ray is rejected at slicing") {
    // Lift of the conifold normals to rank 4 plus one closing facet: the ray
    // (0,0,0,1) lies on four facets, one more than a simple vertex allows,
    // while every face still spans a saturated lattice.
    zmat lifted = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 1, 0}, {-1, 0, 0, 1}};
    good_cone c = validate_good_cone(lifted, 4);
    CHECK_THROWS_AS(slice_cone(c, q({3, 1, 1, 1})), not_simple_error);
}
