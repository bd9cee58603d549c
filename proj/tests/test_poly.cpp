#include <doctest.h>

#include <random>

#include "aode/bivariate.hpp"
#include "aode/factor.hpp"
#include "aode/parse.hpp"
#include "aode/resultant.hpp"

using namespace aode;

namespace {

BiPoly eq(const std::string& s) { return parse_equation(s); }

UniPoly uni(std::vector<long> c, const std::string& v = "y") {
    dense::Poly p;
    for (long x : c) p.push_back(Elem(x));
    return UniPoly(v, p);
}

// Determinant of the Sylvester matrix of two univariate polynomials over Q.
Rational sylvester(const dense::Poly& f, const dense::Poly& g) {
    int m = dense::degree(f), n = dense::degree(g), N = m + n;
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + m - i] = f[i].rational();
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = g[i].rational();
    Rational det = 1;
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int r = c; r < N; ++r)
            if (M[r][c] != 0) piv = r;
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (int r = c + 1; r < N; ++r) {
            Rational f2 = M[r][c] / M[c][c];
            for (int k = c; k < N; ++k) M[r][k] -= f2 * M[c][k];
        }
    }
    return det;
}

void check_resultant_by_sylvester(const BiPoly& f, const BiPoly& g) {
    UniPoly R = resultant(f, g, "p");
    for (long v = -4; v <= 4; ++v) {
        Elem y0(v);
        UniPoly fy = f.eval(0, y0), gy = g.eval(0, y0);
        if (fy.degree() != f.degree(1) || gy.degree() != g.degree(1)) continue;
        CHECK(R(y0).rational() == sylvester(fy.coeffs(), gy.coeffs()));
    }
}

bool constant_gcd(const BiPoly& f, const BiPoly& g) { return bivariate_gcd(f, g).is_constant(); }

}  // namespace

TEST_CASE("partial derivatives") {
    CHECK(eq("y'^2 - y").partial(1) == eq("2*y'"));
    CHECK(eq("y'^2 - y").partial(0) == eq("-1"));
    CHECK(eq("4*y'^2*y - 1").partial(1) == eq("8*y'*y"));
}

TEST_CASE("squarefree normalization") {
    auto a = squarefree_normalize(eq("(y'^2 - y)^2"));
    CHECK(primitive_form(a.F) == eq("y'^2 - y"));
    REQUIRE(a.removed.size() == 1);
    CHECK(a.removed[0].reason == "repeated");

    auto b = squarefree_normalize(eq("y*(y'^2 - y)"));
    CHECK(primitive_form(b.F) == eq("y'^2 - y"));
    REQUIRE(b.removed.size() == 1);
    CHECK(primitive_form(b.removed[0].factor) == eq("y"));

    auto c = squarefree_normalize(eq("y'^2 + y^2 - 1"));
    CHECK(c.F == eq("y'^2 + y^2 - 1"));
    CHECK(c.removed.empty());
}

TEST_CASE("squarefree output has constant gcd with its partials") {
    for (const char* s : {"(y'^2 - y)^2*(y' - 1)", "(y' - y)*(y' - y)*(y'^2 + y^2 - 1)", "y^3*(4*y'^2*y - 1)^2"}) {
        BiPoly F = squarefree_normalize(eq(s)).F;
        CHECK(constant_gcd(F, F.partial(0)));
        CHECK(constant_gcd(F, F.partial(1)));
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(eq("y'^2 - y"), eq("2*y'"), "p") == uni({0, -4}));
    CHECK(resultant(eq("y'^2 + y^2 - 1"), eq("2*y'"), "p") == uni({-4, 0, 4}));
    CHECK(resultant(eq("y' - y"), eq("1"), "p") == uni({1}));
    check_resultant_by_sylvester(eq("y'^2 - y"), eq("2*y'"));
    check_resultant_by_sylvester(eq("y'^2 + y^2 - 1"), eq("2*y'"));
    check_resultant_by_sylvester(eq("4*y'^2*y - 1"), eq("8*y'*y"));
    check_resultant_by_sylvester(eq("y'^3 - y*y' + 2*y^2"), eq("3*y'^2 - y + 1"));
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    std::mt19937 rng(11);
    auto random_poly = [&](int dy, int dp) {
        BiPoly f;
        for (int i = 0; i <= dy; ++i)
            for (int j = 0; j <= dp; ++j) f.add_term(i, j, Elem(static_cast<long>(rng() % 7) - 3));
        f.add_term(0, dp, Elem(1) - f.coeff(0, dp) + Elem(static_cast<long>(rng() % 2) + 1));
        return f;
    };
    for (int it = 0; it < 10; ++it) {
        BiPoly h = random_poly(1, 1), a = random_poly(1, 1), b = random_poly(1, 1);
        CHECK(resultant(h * a, h * b, "p").is_zero());
        if (constant_gcd(a, b)) CHECK(!resultant(a, b, "p").is_zero());
    }
}

TEST_CASE("univariate factorization") {
    auto f = factor_univariate(uni({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly.degree() == 1);
    CHECK(f[1].poly.degree() == 1);

    auto g = factor_univariate(uni({-2, 0, 1}));
    REQUIRE(g.size() == 1);
    CHECK(g[0].poly == uni({-2, 0, 1}));

    auto [K, a] = Field().adjoin_root(uni({-2, 0, 1}).coeffs());
    auto h = factor_univariate(uni({-2, 0, 1}), K);
    REQUIRE(h.size() == 2);
    for (const auto& fc : h) {
        CHECK(fc.poly.degree() == 1);
        Elem r = -fc.poly.coeff(0);
        CHECK((r == a || r == -a));
    }
}

TEST_CASE("factor products reproduce the input") {
    std::vector<UniPoly> inputs{uni({6, -5, 1}) * uni({-2, 0, 1}) * uni({-2, 0, 1}), uni({1, 0, 0, 0, 1}) * uni({-6, 0, 0, 1}),
                                uni({-1, 0, 0, 0, 0, 0, 1}), uni({4, 0, 0, 0, 1}) * uni({3, 1})};
    for (const auto& f : inputs) {
        UniPoly prod = uni({1});
        for (const auto& fc : factor_univariate(f)) {
            CHECK(is_irreducible(fc.poly));
            for (int k = 0; k < fc.multiplicity; ++k) prod = prod * fc.poly;
        }
        CHECK(prod == f.monic());
    }
}

TEST_CASE("roots in the closure") {
    auto r = roots_in_closure(uni({-1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].root == Elem(-1));
    CHECK(r[1].root == Elem(1));

    auto s = roots_in_closure(uni({-2, 0, 1}));
    REQUIRE(s.size() == 1);
    CHECK(s[0].degree() == 2);
    CHECK(s[0].root * s[0].root == Elem(2));

    CHECK_THROWS_AS(roots_in_closure(uni({1})), Error);
}

TEST_CASE("bivariate components") {
    auto c = bivariate_components(squarefree_normalize(eq("(y'^2 - y)*(4*y'^2*y - 1)")).F);
    CHECK(c.status == Components::Status::factored);
    CHECK(c.factors.size() == 2);
    auto d = bivariate_components(eq("y'^2 + y^2 - 1"));
    CHECK(d.factors.size() == 1);
}
