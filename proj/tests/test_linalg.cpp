#include <catch2/catch_amalgamated.hpp>

#include <reebcone/linalg.hpp>
#include <reebcone/polynomial.hpp>
#include <reebcone/rational.hpp>

using namespace reebcone;

TEST_CASE("rational parsing and formatting round-trip") {
    CHECK(parse_rational("3/4") == rational(3, 4));
    CHECK(parse_rational("-6/8") == rational(-3, 4));
    CHECK(parse_rational("5") == rational(5));
    CHECK(format_rational(rational(-3, 4)) == "-3/4");
    CHECK(format_rational(rational(10, 5)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rationalize finds bounded-denominator approximations") {
    CHECK(rationalize(0.5, 1000000) == rational(1, 2));
    CHECK(rationalize(1.0 / 3.0, 1000000) == rational(1, 3));
    double x = 355.0 / 113.0;
    CHECK(rationalize(x, 113) == rational(355, 113));
    // Exact dyadics with small denominators come back unchanged.
    CHECK(rationalize(0.375, 1000000) == rational(3, 8));
    rational pi_approx = rationalize(3.141592653589793, 1000000);
    CHECK(denominator(pi_approx) <= 1000000);
    CHECK(abs(pi_approx - exact_from_double(3.141592653589793)) < rational(1, 100000000000LL));
}

TEST_CASE("exact determinant and solve") {
    qmat a = {{rational(1), rational(2)}, {rational(3), rational(4)}};
    CHECK(det(a) == rational(-2));
    qvec x = solve(a, {rational(5), rational(6)});
    CHECK(x[0] == rational(-4));
    CHECK(x[1] == rational(9, 2));

    zmat zi = {{2, 0}, {1, 1}};
    CHECK(det(zi) == 2);
    CHECK(rank(zi) == 2);
    zmat deficient = {{1, 2}, {2, 4}};
    CHECK(rank(deficient) == 1);
}

TEST_CASE("primitivize clears denominators and content") {
    zvec p = primitivize(qvec{rational(1, 2), rational(0), rational(-1, 4)});
    CHECK(p == zvec{2, 0, -1});
    CHECK(primitivize(qvec{rational(4), rational(6)}) == zvec{2, 3});
    CHECK_THROWS_AS(primitivize(qvec{rational(0), rational(0)}), degenerate_input_error);
}

TEST_CASE("kernel generator of a corank-1 system") {
    qmat rows = {{rational(1), rational(1), rational(0)}, {rational(0), rational(1), rational(2)}};
    zvec g = kernel_generator(rows, 3);
    CHECK(dot(g, qvec{rational(1), rational(1), rational(0)}) == 0);
    CHECK(dot(g, qvec{rational(0), rational(1), rational(2)}) == 0);
    CHECK(content(g) == 1);
}

TEST_CASE("lattice index detects non-saturated spans") {
    CHECK(lattice_index({{1, 0}, {0, 1}}) == 1);
    CHECK(lattice_index({{2, 0}}) == 2);
    CHECK(lattice_index({{0, 1, 1}, {0, 1, -1}}) == 2);
    CHECK(lattice_index({{1, 0, 0}, {1, 1, 0}}) == 1);
    // Smith normal form by hand: diag(1, 2).
    auto div = snf_divisors({{2, 0}, {0, 1}});
    REQUIRE(div.size() == 2);
    CHECK(div[0] == 1);
    CHECK(div[1] == 2);
}

TEST_CASE("lattice kernel basis spans the saturated sublattice") {
    zvec u = {2, 4, 6};
    zmat basis = lattice_kernel_basis(u);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(dot(v, u) == 0);
    CHECK(rank(basis) == 2);
    CHECK(lattice_index(basis) == 1);

    zmat b2 = lattice_kernel_basis(zvec{0, 1});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0][1] == 0);
    CHECK(abs(b2[0][0]) == 1);
}

TEST_CASE("polynomial arithmetic and gcd") {
    poly t = poly::linear(rational(0), rational(1));
    poly p = (t + poly(rational(1))) * (t - poly(rational(2)));  // t^2 - t - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(rational(2)) == 0);
    CHECK(p.eval(rational(-1)) == 0);
    poly q = (t + poly(rational(1))) * (t + poly(rational(3)));
    poly g = poly_gcd(p, q);
    REQUIRE(g.degree() == 1);
    CHECK(g.eval(rational(-1)) == 0);

    CHECK(derivative(p).eval(rational(0)) == rational(-1));
}

TEST_CASE("rational functions reduce and expose limits at zero") {
    rat_func t = rat_func::variable();
    // (t^2 - t) / t reduces to t - 1.
    rat_func f = (t * t - t) / t;
    CHECK(f.at0() == rational(-1));
    CHECK(f.num.degree() == 1);

    rat_func g = rat_func(rational(1)) / t;  // pole at zero
    CHECK_THROWS_AS(g.at0(), pole_at_zero_error);
    auto [order, lead] = g.leading_at0();
    CHECK(order == -1);
    CHECK(lead == rational(1));

    rat_func h = (rat_func(rational(2)) + t) / (rat_func(rational(1)) - t);
    CHECK(h.eval(rational(1, 2)) == rational(5));
    // d/dt [(2+t)/(1-t)] = 3/(1-t)^2
    CHECK(h.derivative_fn().eval(rational(0)) == rational(3));
}
