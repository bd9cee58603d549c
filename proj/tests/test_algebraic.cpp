#include <doctest.h>

#include "aode/algebraic.hpp"
#include "aode/bivariate.hpp"
#include "aode/parse.hpp"
#include "oracle.hpp"

using namespace aode;

namespace {

BiPoly eq(const std::string& s) { return parse_equation(s); }
Series S(const std::string& s) { return parse_truncation(s); }

BiPoly xy(std::vector<std::tuple<int, int, long>> ts) {
    BiPoly G("x", "y");
    for (auto [i, j, c] : ts) G.add_term(i, j, Elem(c));
    return G;
}

// Exact truncation of e^x through x^k.
Series exp_series(long k) {
    Series::Terms t;
    for (long i = 0; i <= k; ++i) t[i] = Elem(Rational(1, oracle::factorial(i)));
    return Series(t, 1, Rational(k + 1));
}

}  // namespace

TEST_CASE("reconstruction from a polynomial truncation") {
    auto A = reconstruct_candidate(S("x^2/4"), 2, 3, Rational(0));
    REQUIRE(A);
    CHECK(primitive_form(*A) == primitive_form(xy({{0, 1, 4}, {2, 0, -1}})));
}

TEST_CASE("no candidate for the exponential") {
    CHECK(!reconstruct_candidate(exp_series(13), 1, 2, Rational(0)));
}

TEST_CASE("reconstruction from a ramified solution") {
    SolveReport r = puiseux_solve(eq("4*y'^2*y - 1"), Rational(14));
    const SolutionTruncation* t = nullptr;
    for (const auto& s : r.at_zero)
        if (s.n == 3) t = &s;
    REQUIRE(t);
    auto A = reconstruct_candidate(t->series, 2, 3, Rational(0));
    REQUIRE(A);
    CHECK(primitive_form(*A) == primitive_form(xy({{0, 3, 16}, {2, 0, -9}})));
}

TEST_CASE("short truncations are rejected") {
    CHECK_THROWS_AS(reconstruct_candidate(S("x^2/4 + O(x^3)"), 2, 3, Rational(0)), Error);
}

TEST_CASE("differential pseudo-remainder") {
    BiPoly A = xy({{0, 1, 4}, {2, 0, -1}});
    CHECK(diff_pseudo_remainder(eq("y'^2 - y"), A).is_zero());
    BiPoly r = diff_pseudo_remainder(eq("y' - y"), A);
    CHECK(!r.is_zero());
    // x/2 - y reduced by 4y - x^2 is proportional to 2x - x^2.
    CHECK(primitive_form(r) == primitive_form(xy({{1, 0, 2}, {2, 0, -1}})));
    CHECK(!diff_pseudo_remainder(eq("y'^2 + y^2 - 1"), xy({{0, 1, 1}, {0, 0, -2}})).is_zero());
    CHECK(!diff_pseudo_remainder(eq("4*y'^2*y - 1"), xy({{0, 1, 1}, {0, 0, -3}})).is_zero());
}

TEST_CASE("shifted families") {
    for (const auto& G : {xy({{0, 1, 4}, {2, 0, -1}}), xy({{0, 3, 16}, {2, 0, -9}}), xy({{0, 1, 1}, {1, 0, -1}})}) {
        BiPoly H = shift_family(G, "c");
        Elem c = Elem::generator(H.field().top());
        CHECK(!c.is_rational());
        CHECK(H.translate(0, -c) == G);
        CHECK(H.degree(0) == G.degree(0));
        CHECK(H.degree(1) == G.degree(1));
    }
    // y - x -> y - x - c
    BiPoly H = shift_family(xy({{0, 1, 1}, {1, 0, -1}}), "c");
    Elem c = Elem::generator(H.field().top());
    CHECK(H.coeff(0, 0) == -c);
    CHECK(H.coeff(1, 0) == Elem(-1));
    CHECK(H.coeff(0, 1) == Elem(1));
}

TEST_CASE("worked algebraic solutions") {
    auto a = algebraic_solution(eq("y'^2 - y"));
    REQUIRE(a.size() == 1);
    CHECK(primitive_form(a[0].G) == primitive_form(xy({{0, 1, 4}, {2, 0, -1}})));
    CHECK(a[0].dx == 2);
    CHECK(a[0].dy == 3);

    auto b = algebraic_solution(eq("4*y'^2*y - 1"));
    REQUIRE(b.size() == 1);
    CHECK(primitive_form(b[0].G) == primitive_form(xy({{0, 3, 16}, {2, 0, -9}})));

    CHECK(algebraic_solution(eq("y' - y")).empty());
}

TEST_CASE("degree bounds, certification and shift closure") {
    for (std::string s : {"y'^2 - y", "4*y'^2*y - 1", "y'^2 - 4*y^3", "y' - y^2", "y'^3 - y^2", "y'^2 + y^2 - 1", "y' - y"}) {
        BiPoly F = eq(s);
        INFO(s);
        for (const auto& res : algebraic_solution(F)) {
            const BiPoly& Fc = res.component;
            CHECK(res.G.degree(0) == Fc.degree(1));
            CHECK(res.G.degree(1) <= Fc.degree(0) + Fc.degree(1));
            CHECK(diff_pseudo_remainder(Fc, res.G).is_zero());
            CHECK(diff_pseudo_remainder(Fc, res.family).is_zero());
            CHECK(diff_pseudo_remainder(Fc, shift_family(res.G, "k")).is_zero());
            auto comps = bivariate_components(res.G);
            CHECK((comps.status != Components::Status::factored || comps.factors.size() == 1));

            // The seed annihilates the candidate A to the required order, and
            // the returned G is A up to a shift in x.
            Rational N0 = Rational(2 * res.dx * res.dy) - 2 * res.nu * (res.dy - 1);
            Series ybar = prolong_truncation(Fc, res.seed.series, N0, Point::zero, res.seed.guarantee);
            auto A = reconstruct_candidate(ybar, res.dx, res.dy, res.nu);
            REQUIRE(A);
            oracle::Sum x{{Rational(1), Elem(1)}};
            oracle::Sum val = oracle::eval(*A, x, oracle::of(ybar));
            Rational need = Rational(2 * res.dx * res.dy) - res.nu * (res.dy - 1);
            Rational known = *ybar.known() + Rational(res.dy - 1) * res.nu;
            CHECK(known > need);
            for (const auto& [e, c] : val)
                if (e < known) CHECK(e > need);
            const int m = res.dx;
            int j = 0;
            while (res.G.coeff(m, j).is_zero()) ++j;
            BiPoly As = *A * (res.G.coeff(m, j) / A->coeff(m, j));
            Elem c0 = (As.coeff(m - 1, j) - res.G.coeff(m - 1, j)) / (Elem(m) * res.G.coeff(m, j));
            CHECK(res.G.translate(0, c0) == As);
        }
    }
}

TEST_CASE("soundness of none") {
    for (const char* s : {"y' - y", "y'^2 + y^2 - 1"}) {
        BiPoly F = eq(s);
        CHECK(algebraic_solution(F).empty());
        SolutionTruncation seed = choose_seed(F);
        int dx = F.degree(1), dy = F.degree(0) + F.degree(1);
        Rational nu = std::min(Rational(0), seed.series.is_zero() ? Rational(0) : *seed.series.order());
        Rational N = Rational(2 * dx * dy) - 2 * nu * (dy - 1) + Rational(1, seed.n);
        Series y = prolong_truncation(F, seed.series, N, Point::zero);
        auto A = reconstruct_candidate(y, dx, dy, nu);
        CHECK((!A || !diff_pseudo_remainder(F, *A).is_zero()));
    }
}

TEST_CASE("seed preference") {
    SolutionTruncation a = choose_seed(eq("y'^2 + y^2 - 1"));
    CHECK(a.n == 1);
    CHECK(a.field.is_rational());
    // The ramified solution at (0, oo) loses to a regular rational one.
    SolutionTruncation b = choose_seed(eq("4*y'^2*y - 1"));
    CHECK(b.n == 1);
    CHECK(b.field.is_rational());
    CHECK(oracle::solves(eq("4*y'^2*y - 1"), prolong_truncation(eq("4*y'^2*y - 1"), b.series, Rational(6), Point::zero)));
}
