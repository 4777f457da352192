#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <reebcone/truncated_class.hpp>

using namespace reebcone;

using qclass = truncated_class<rational>;

namespace {

qclass random_class(std::mt19937& rng, int m, int symbols) {
    std::uniform_int_distribution<int> coeff(-6, 6), den(1, 4), deg(0, m);
    qclass out(m, symbols);
    for (int term = 0; term < 5; ++term) {
        std::vector<int> mono(symbols, 0);
        int total = deg(rng);
        for (int i = 0; i < total; ++i) mono[std::uniform_int_distribution<int>(0, symbols - 1)(rng)]++;
        out.add_term(mono, rational(coeff(rng), den(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("products truncate silently above the component degree") {
    // (1 + E_0)(1 - E_0) at m = 1: the E_0^2 term is dropped.
    qclass one = qclass::one(1, 2);
    qclass e0 = qclass::symbol(1, 2, 0);
    qclass plus = one + e0;
    qclass minus = one + rational(-1) * e0;
    qclass prod = class_multiply(plus, minus);
    CHECK(prod.coeff == qclass::one(1, 2).coeff);
}

TEST_CASE("unit law and hand expansion") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        qclass a = random_class(rng, 3, 3);
        CHECK(class_multiply(qclass::one(3, 3), a).coeff == a.coeff);
    }

    // (E_0 + E_1)^2 at m = 2.
    qclass sum = qclass::symbol(2, 3, 0) + qclass::symbol(2, 3, 1);
    qclass sq = class_multiply(sum, sum);
    qclass expected(2, 3);
    expected.add_term({2, 0, 0}, rational(1));
    expected.add_term({1, 1, 0}, rational(2));
    expected.add_term({0, 2, 0}, rational(1));
    CHECK(sq.coeff == expected.coeff);
}

TEST_CASE("ring axioms hold on random classes") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        qclass a = random_class(rng, 2, 3), b = random_class(rng, 2, 3), c = random_class(rng, 2, 3);
        CHECK(class_multiply(a, b).coeff == class_multiply(b, a).coeff);
        CHECK(class_multiply(class_multiply(a, b), c).coeff ==
              class_multiply(a, class_multiply(b, c)).coeff);
        CHECK(class_multiply(a, b + c).coeff ==
              (class_multiply(a, b) + class_multiply(a, c)).coeff);
    }
}

TEST_CASE("mixed truncation data is rejected") {
    CHECK_THROWS_AS(class_multiply(qclass::one(1, 2), qclass::one(2, 2)), mixed_truncation_error);
    CHECK_THROWS_AS(class_multiply(qclass::one(1, 2), qclass::one(1, 3)), mixed_truncation_error);
    chern_table t = chern_table::point(2);
    CHECK_THROWS_AS(integrate(qclass::one(1, 2), t), mixed_truncation_error);
}

TEST_CASE("inverse Euler class at truncation zero is the reciprocal product") {
    std::vector<rational> pairings = {rational(2), rational(3)};
    qclass c = inverse_euler_pairings(pairings, 0, 3);
    CHECK(c.coeff == qclass::scalar(0, 3, rational(1, 6)).coeff);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(1, 9);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<rational> w = {rational(num(rng)), rational(-num(rng)), rational(num(rng), 7)};
        qclass s = inverse_euler_pairings(w, 0, 4);
        CHECK(s.coeff == qclass::scalar(0, 4, rational(1) / (w[0] * w[1] * w[2])).coeff);
    }
}

TEST_CASE("inverse Euler class expands one geometric series per weight") {
    // Single weight with pairing w at m = 1: (1/w)(1 + E_0/w).
    rational w(5, 2);
    qclass c = inverse_euler_pairings<rational>({w}, 1, 2);
    qclass expected(1, 2);
    expected.add_term({0, 0}, rational(1) / w);
    expected.add_term({1, 0}, rational(1) / (w * w));
    CHECK(c.coeff == expected.coeff);
}

TEST_CASE("a vanishing pairing raises the non-generic signal") {
    CHECK_THROWS_AS(inverse_euler_pairings<rational>({rational(1), rational(0)}, 0, 3),
                    vanishing_weight_error);
}

TEST_CASE("integration pairs top-degree monomials against the table") {
    // Point component: a scalar integrates to itself.
    chern_table pt = chern_table::point(2);
    CHECK(integrate(qclass::scalar(0, 2, rational(7, 3)), pt) == rational(7, 3));

    // m = 1 with a single pairing int E_0 = r.
    chern_table t;
    t.degree = 1;
    t.num_symbols = 2;
    t.integrals.emplace(std::vector<int>{1, 0}, rational(4, 5));
    CHECK(integrate(qclass::symbol(1, 2, 0, rational(3)), t) == rational(12, 5));
    // Class with no top-degree monomials integrates to zero.
    CHECK(integrate(qclass::one(1, 2), t) == 0);
}

TEST_CASE("integration is bilinear") {
    std::mt19937 rng(23);
    chern_table t;
    t.degree = 2;
    t.num_symbols = 3;
    t.integrals.emplace(std::vector<int>{2, 0, 0}, rational(1, 2));
    t.integrals.emplace(std::vector<int>{1, 1, 0}, rational(-3));
    t.integrals.emplace(std::vector<int>{0, 0, 2}, rational(5, 7));
    for (int rep = 0; rep < 15; ++rep) {
        qclass a = random_class(rng, 2, 3), a2 = random_class(rng, 2, 3), b = random_class(rng, 2, 3);
        rational lam(std::uniform_int_distribution<int>(-5, 5)(rng), 3);
        rational lhs = integrate(class_multiply(a + lam * a2, b), t);
        rational rhs = integrate(class_multiply(a, b), t) + lam * integrate(class_multiply(a2, b), t);
        CHECK(lhs == rhs);
    }
}
