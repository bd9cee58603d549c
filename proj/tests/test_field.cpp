#include <doctest.h>

#include <random>

#include "aode/factor.hpp"
#include "aode/field.hpp"

using namespace aode;

namespace {

UniPoly poly(std::vector<long> c, const std::string& v = "z") {
    dense::Poly p;
    for (long x : c) p.push_back(Elem(x));
    return UniPoly(v, p);
}

std::pair<Field, Elem> sqrt2() { return Field().adjoin_root(poly({-2, 0, 1}).coeffs(), "alpha"); }

Elem random_elem(std::mt19937& rng, const Elem& g, int deg) {
    Elem e;
    for (int i = 0; i < deg; ++i) {
        Rational q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1);
        e += Elem(q) * g.pow(i);
    }
    return e;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    Elem a(Rational(6, -4));
    CHECK(a.rational() == Rational(-3, 2));
    CHECK(a.rational().get_den() > 0);
    CHECK(!Elem(Rational(1, 3)).is_zero());
}

TEST_CASE("quadratic adjunction") {
    auto [K, a] = sqrt2();
    CHECK(K.degree() == 2);
    CHECK(a * a == Elem(2));
    CHECK((a * a - Elem(2)).is_zero());
    // (1 + a)(a - 1) = 1
    Elem inv = Elem(1) / (Elem(1) + a);
    CHECK(inv == a - Elem(1));
    CHECK((Elem(1) + a) * (a - Elem(1)) == Elem(1));
}

TEST_CASE("degree one adjunction collapses") {
    auto [K, r] = Field().adjoin_root(poly({-3, 1}).coeffs());
    CHECK(K.is_rational());
    CHECK(r == Elem(3));
}

TEST_CASE("cube root of 6") {
    auto [K, b] = adjoin_checked(Field(), poly({-6, 0, 0, 1}));
    CHECK(K.degree() == 3);
    CHECK((b.pow(3) - Elem(6)).is_zero());
    CHECK(b * b * b == Elem(6));
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(adjoin_checked(Field(), poly({-4, 0, 1})), ReducibleModulus);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Elem(1) / Elem(0), DivisionByZero);
    auto [K, a] = sqrt2();
    CHECK_THROWS_AS((a * a - Elem(2)).inverse(), DivisionByZero);
}

TEST_CASE("field axioms on sampled elements") {
    auto [K, a] = sqrt2();
    auto [L, b] = adjoin_checked(K, poly({-3, 0, 1}));
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        Elem x = random_elem(rng, a, 2) + random_elem(rng, b, 2) * a;
        Elem y = random_elem(rng, b, 2);
        Elem z = random_elem(rng, a, 2) * b;
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Elem(1));
    }
}

TEST_CASE("canonical forms") {
    auto [K, a] = sqrt2();
    Elem x = (a + Elem(1)) * (a + Elem(1));  // 3 + 2a
    Elem y = Elem(3) + Elem(2) * a;
    CHECK(x == y);
    CHECK(x.str() == y.str());
    CHECK(compare(x, y) == 0);
    CHECK(!(x == a));
}

TEST_CASE("coercion into an extension commutes with arithmetic") {
    auto [K, a] = sqrt2();
    Elem p(Rational(2, 3)), q(Rational(-5, 7));
    Elem lifted = (p * q) + a * Elem(0);
    CHECK(lifted == Elem(p.rational() * q.rational()));
    CHECK((p + a) - a == p);
    CHECK(((p + a) * (q + a)) == p * q + (p + q) * a + Elem(2));
}

TEST_CASE("transcendental level") {
    auto [K, c] = Field().adjoin_symbol("c");
    Elem f = (c * c - Elem(1)) / (c - Elem(1));
    CHECK(f == c + Elem(1));
    CHECK(((Elem(1) / c) * c) == Elem(1));
    CHECK(!(c == Elem(0)));
}

TEST_CASE("embedding to a conjugate") {
    auto [K, a] = sqrt2();
    Embedding s;
    s.map(K.top(), -a);
    Elem x = Elem(3) + Elem(2) * a;
    CHECK(s(x) == Elem(3) - Elem(2) * a);
    CHECK(s(x * x) == s(x) * s(x));
}

TEST_CASE("tower cap") {
    std::size_t old = max_tower_degree();
    set_max_tower_degree(2);
    auto [K, a] = sqrt2();
    CHECK_THROWS_AS(K.adjoin_root(poly({-3, 0, 1}).coeffs()), TowerLimit);
    set_max_tower_degree(old);
}
