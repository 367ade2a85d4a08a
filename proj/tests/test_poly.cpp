#include <doctest.h>

#include <random>

#include "daisy/poly.hpp"

using daisy::Error;
using daisy::ErrorCode;
using daisy::Poly1;
using daisy::Poly2;

namespace {

Poly1 p1(std::vector<std::pair<int, int64_t>> ts) { return Poly1::from_terms(ts); }

Poly1 random_poly(std::mt19937_64& gen) {
    Poly1 p;
    int terms = static_cast<int>(gen() % 5);
    for (int i = 0; i < terms; ++i) p.add_term(static_cast<int>(gen() % 8), 1 + gen() % 9);
    return p;
}

}  // namespace

TEST_CASE("canonical form drops zeros") {
    Poly1 p = p1({{2, 5}, {0, 3}});
    Poly1 q = p1({{2, 5}, {0, 3}, {7, 0}});
    CHECK(p == q);
    CHECK(p.coef(7) == 0);
    CHECK(p.degree() == 2);
    CHECK(Poly1{}.degree() == -1);
    CHECK(p.to_string() == "5x^2 + 3");
}

TEST_CASE("shift by one") {
    // 1 + x + x^2 + x^3 shifted: counts the faces of a path's labels.
    Poly1 w = p1({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(daisy::shift1(w) == p1({{0, 4}, {1, 6}, {2, 4}, {3, 1}}));
    // 1 + 3x + 3x^2 shifted.
    Poly1 w2 = p1({{0, 1}, {1, 3}, {2, 3}});
    CHECK(daisy::shift1(w2) == p1({{0, 7}, {1, 9}, {2, 3}}));
    // Linearity: shift1(p + q) == shift1(p) + shift1(q).
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        Poly1 a = random_poly(gen), b = random_poly(gen);
        CHECK(daisy::shift1(a + b) == daisy::shift1(a) + daisy::shift1(b));
    }
}

TEST_CASE("substitute x + y") {
    Poly1 w = p1({{0, 1}, {1, 3}, {2, 1}});
    Poly2 d = daisy::subst_sum(w);
    CHECK(d == Poly2::from_terms(
                   {{0, 0, 1}, {1, 0, 3}, {0, 1, 3}, {2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
    // Specializing y = 1 recovers the shift; x = 0 recovers the original.
    CHECK(daisy::spec_y1(d) == daisy::shift1(w));
    CHECK(daisy::spec_x0(d) == w);
}

TEST_CASE("substitute x + y - 1") {
    // 5x^2 + 14x + 10 becomes 5x^2 + 10xy + 5y^2 + 4x + 4y + 1.
    Poly1 c = p1({{2, 5}, {1, 14}, {0, 10}});
    Poly2 d = daisy::subst_shift_sum(c);
    CHECK(d == Poly2::from_terms(
                   {{2, 0, 5}, {1, 1, 10}, {0, 2, 5}, {1, 0, 4}, {0, 1, 4}, {0, 0, 1}}));
    // (x + y - 1) applied to x + 1 is x + y: composing with shift1 undoes it.
    std::mt19937_64 gen(12);
    for (int t = 0; t < 50; ++t) {
        Poly1 p = random_poly(gen);
        CHECK(daisy::subst_shift_sum(daisy::shift1(p)) == daisy::subst_sum(p));
    }
    // A negative outcome throws: x^2 - nothing to cancel the -2x... term of
    // (x + y - 1)^2 when lower coefficients are absent.
    CHECK_THROWS_AS(daisy::subst_shift_sum(p1({{2, 1}})), Error);
}

TEST_CASE("evaluation agrees with substitution") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 50; ++t) {
        Poly1 p = random_poly(gen);
        int64_t a = static_cast<int64_t>(gen() % 5), b = static_cast<int64_t>(gen() % 5);
        CHECK(daisy::subst_sum(p).eval2(a, b) == p.eval1(a + b));
        CHECK(daisy::shift1(p).eval1(a) == p.eval1(a + 1));
    }
}

TEST_CASE("coefficient order is a partial order") {
    std::mt19937_64 gen(14);
    for (int t = 0; t < 100; ++t) {
        Poly1 a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
        CHECK(daisy::leq(a, a));
        if (daisy::leq(a, b) && daisy::leq(b, a)) CHECK(a == b);
        if (daisy::leq(a, b) && daisy::leq(b, c)) CHECK(daisy::leq(a, c));
        CHECK(daisy::leq(a, a + b));
    }
    // Incomparable pair: agreement on totals does not give comparability.
    CHECK(!daisy::leq(p1({{0, 2}, {1, 1}}), p1({{0, 1}, {1, 2}})));
    CHECK(!daisy::leq(p1({{0, 1}, {1, 2}}), p1({{0, 2}, {1, 1}})));
}

TEST_CASE("bivariate order") {
    Poly2 a = Poly2::from_terms({{0, 3, 2}, {0, 2, 3}});
    Poly2 b = Poly2::from_terms({{0, 2, 5}});
    // a has 2y^3 against b's none; b has 5y^2 against a's 3y^2.
    CHECK(!daisy::leq(a, b));
    CHECK(!daisy::leq(b, a));
    CHECK(daisy::leq(a, a + b));
}

TEST_CASE("arithmetic overflow throws instead of wrapping") {
    Poly1 big = p1({{0, INT64_MAX}});
    CHECK_THROWS_AS(big + big, Error);
    CHECK_THROWS_AS(big.scaled(2), Error);
    CHECK_THROWS_AS(p1({{1, INT64_MAX}}).eval1(2), Error);
    CHECK(big.eval1(5) == INT64_MAX);
    Poly1 x40 = p1({{40, INT64_MAX / 2}});
    CHECK_THROWS_AS(daisy::shift1(x40), Error);
    CHECK(daisy::binomial(64, 32) == 1832624140942590534LL);
    CHECK_THROWS_AS(daisy::binomial(68, 34), Error);
}

TEST_CASE("multiplication for clique identities") {
    Poly1 a = p1({{0, 1}, {1, 2}});
    Poly1 b = p1({{0, 1}, {1, 3}, {2, 1}});
    CHECK(a * b == p1({{0, 1}, {1, 5}, {2, 7}, {3, 2}}));
}
