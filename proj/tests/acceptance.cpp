// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "aode/algebraic.hpp"
#include "aode/bivariate.hpp"
#include "aode/parse.hpp"
#include "aode/solver.hpp"
#include "bruteforce.hpp"
#include "oracle.hpp"

using namespace aode;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Rational default_order(const BiPoly& F, long N) {
    BiPoly R = squarefree_normalize(F).F;
    return Rational(std::max(truncation_bound(R), N));
}

SolveReport solve(const std::string& eq, long N) {
    BiPoly F = parse_equation(eq);
    return puiseux_solve(F, default_order(F, N));
}

Elem symbol_of(const Field& K) { return Elem::generator(K.top()); }

Outcome criterion1() {
    Outcome o;
    BiPoly F = parse_equation("4*y'^2*y - 1");
    SolveReport r = solve("4*y'^2*y - 1", 0);
    const SolutionTruncation* s = nullptr;
    for (const auto& t : r.at_zero)
        if (t.n == 3) s = &t;
    if (!s) {
        o.fail("no ramified solution at zero");
        return o;
    }
    if (!s->sigma1 || !(*s->sigma1 == UniPoly("Z", {Elem(-6), Elem(), Elem(), Elem(1)})))
        o.fail("sigma1 is not Z^3 - 6");
    if (s->conjugates != 3) o.fail("expected 3 conjugates");
    if (!oracle::solves(F, s->series)) o.fail("residual order below the claimed order");
    const auto& terms = s->series.terms();
    if (terms.size() != 1 || s->series.ramification() != 3 || terms.begin()->first != 2) {
        o.fail("expected the single term c x^(2/3)");
        return o;
    }
    // c = g^2 / 4 with g^3 = 6: then g = 16 c^2 / 6.
    Elem c = terms.begin()->second;
    Elem g = Elem(16) * c * c / Elem(6);
    if (!(g.pow(3) == Elem(6)) || !(g * g == Elem(4) * c)) o.fail("coefficient differs from 6^(2/3)/4");
    if (!(c.pow(3) == Elem(Rational(9, 16)))) o.fail("y^3 = 9/16 x^2 fails");
    if (!s->series.known() || *s->series.known() <= r.order) o.fail("known order below the requested order");
    return o;
}

Outcome criterion2() {
    Outcome o;
    SolveReport r = solve("y'^2 + y^2 - 1", 10);
    std::vector<Elem> consts;
    for (const auto& c : r.constants) consts.push_back(c.root);
    if (consts.size() != 2 || !(consts[0] == Elem(-1)) || !(consts[1] == Elem(1))) o.fail("constants are not -1, 1");
    const SolutionTruncation* s = nullptr;
    for (const auto& t : r.at_zero)
        if (t.initial.y0 && t.initial.p0 && *t.initial.y0 == Elem(1) && t.initial.p0->is_zero()) s = &t;
    if (!s) {
        o.fail("no truncation at (1, 0)");
        return o;
    }
    oracle::Sum cos;
    for (long k = 0; 2 * k <= 10; ++k) cos[Rational(2 * k)] = Elem(Rational(k % 2 ? -1 : 1, oracle::factorial(2 * k)));
    oracle::Sum got;
    for (const auto& [e, c] : oracle::of(s->series))
        if (e <= 10) got[e] = c;
    if (got != cos) o.fail("truncation at (1, 0) differs from the Taylor polynomial of cos x");
    if (!s->series.known() || *s->series.known() <= 10) o.fail("truncation not known through x^10");
    if (r.generic.size() != 1) {
        o.fail("expected one generic family");
        return o;
    }
    const auto& g = r.generic[0];
    BiPoly want(g.relation.vars()[0], g.relation.vars()[1]);
    want.add_term(0, 2, Elem(1));
    want.add_term(2, 0, Elem(1));
    want.add_term(0, 0, Elem(-1));
    if (!(g.relation == want)) o.fail("generic relation is not _P^2 = 1 - _CC^2");
    return o;
}

Outcome criterion3() {
    Outcome o;
    SolveReport r = solve("y'^2 - 4*y^3", 5);
    const SolutionTruncation* s = nullptr;
    for (const auto& t : r.at_infinity)
        if (t.free_parameter) s = &t;
    if (!s) {
        o.fail("no one-parameter family at infinity");
        return o;
    }
    // z^2 / (1 + c z)^2 = sum (-1)^k (k + 1) c^k z^(k + 2); read c off z^3.
    Elem c = -s->series.coeff(Rational(3)) / Elem(2);
    if (c.is_rational()) o.fail("the z^3 coefficient does not involve the parameter");
    for (long e = 0; e <= 5; ++e) {
        Elem want = e < 2 ? Elem() : c.pow(e - 2) * Elem((e - 2) % 2 ? -(e - 1) : (e - 1));
        if (!(s->series.coeff(Rational(e)) == want)) o.fail("z^" + std::to_string(e) + " coefficient differs");
    }
    if (!s->series.known() || *s->series.known() <= 5) o.fail("family not known through z^5");
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto xy = [](std::vector<std::tuple<int, int, long>> ts) {
        BiPoly G("x", "y");
        for (auto [i, j, c] : ts) G.add_term(i, j, Elem(c));
        return G;
    };
    std::vector<std::pair<std::string, std::optional<BiPoly>>> cases{
        {"y'^2 - y", xy({{0, 1, 4}, {2, 0, -1}})},
        {"4*y'^2*y - 1", xy({{0, 3, 16}, {2, 0, -9}})},
        {"y' - y", std::nullopt},
    };
    for (const auto& [eq, want] : cases) {
        BiPoly F = parse_equation(eq);
        auto rs = algebraic_solution(F);
        if (!want) {
            if (!rs.empty()) o.fail(eq + ": expected none");
            continue;
        }
        if (rs.size() != 1) {
            o.fail(eq + ": expected one minimal polynomial");
            continue;
        }
        const auto& m = rs[0];
        if (!(primitive_form(m.G) == primitive_form(*want))) o.fail(eq + ": wrong minimal polynomial");
        Elem c = symbol_of(m.family.field());
        if (!(m.family.translate(0, -c) == m.G)) o.fail(eq + ": family is not G(x + c, y)");
        if (m.G.degree(0) != F.degree(1)) o.fail(eq + ": deg_x G != deg_p F");
        if (m.G.degree(1) > F.degree(0) + F.degree(1)) o.fail(eq + ": deg_y G too large");
        if (!diff_pseudo_remainder(F, m.G).is_zero()) o.fail(eq + ": not certified");
    }
    return o;
}

// Products and perturbations of the worked examples.
std::vector<BiPoly> curve_family() {
    std::vector<std::string> base{"y'^2 - y", "y'^2 + y^2 - 1", "4*y'^2*y - 1",
                                  "y'^2 - 4*y^3", "y' - y", "y' - y^2"};
    std::vector<BiPoly> B;
    for (const auto& b : base) B.push_back(parse_equation(b));
    std::mt19937 rng(20261018);
    std::vector<BiPoly> out;
    std::size_t products = 0;
    while (out.size() < 20) {
        std::size_t i = rng() % B.size(), j = rng() % B.size();
        bool product = products < 7 && rng() % 2 == 0;
        BiPoly F;
        if (product) {
            if (i == j || B[i].degree(1) + B[j].degree(1) > 3) continue;
            F = B[i] * B[j];
        } else {
            long a = static_cast<long>(rng() % 4) - 2;
            if (a >= 0) ++a;
            int u = static_cast<int>(rng() % 3), v = static_cast<int>(rng() % 2);
            F = B[i];
            F.add_term(u, v, Elem(a));
        }
        BiPoly R = squarefree_normalize(F).F;
        if (R.degree(0) < 1 || R.degree(1) < 1) continue;
        bool dup = false;
        for (const auto& G : out) dup = dup || G == R;
        if (dup) continue;
        out.push_back(R);
        products += product ? 1 : 0;
    }
    return out;
}

std::string describe(const BiPoly& F) { return render_equation(F); }

Outcome criterion5(const std::vector<BiPoly>& curves) {
    Outcome o;
    long passing = 0, failing = 0, brute = 0;
    for (const auto& F : curves) {
        long terms = truncation_bound(F) + 2;
        std::vector<CurvePoint> centers = critical_points(F);
        std::vector<Elem> ys;
        for (const auto& c : centers)
            if (c.y0 && std::find(ys.begin(), ys.end(), *c.y0) == ys.end()) ys.push_back(*c.y0);
        for (const auto& y0 : ys) {
            long cy = y0.is_rational() ? 1 : y0.level()->min_degree();
            long expected = 0;
            for (const auto& c : centers) {
                if (!c.y0 || !(*c.y0 == y0)) continue;
                for (const auto& P : local_parametrizations(F, c, terms)) {
                    auto chk = check_solution_place(P, 0);
                    if (!chk.solution_place) {
                        ++failing;
                        continue;
                    }
                    ++passing;
                    long count = 0;
                    for (const auto& s : solve_reparametrization(extend_place(P, terms), chk.n, 0)) {
                        if (s.free_index) o.fail(describe(F) + ": free parameter at a finite center");
                        count += s.conjugates;
                    }
                    if (count != chk.n)
                        o.fail(describe(F) + " at " + c.str() + ": " + std::to_string(count) + " solutions, n = " +
                               std::to_string(chk.n));
                    expected += chk.n * P.conjugates * (c.conjugates / cy);
                }
            }
            bruteforce::Result b = bruteforce::count_critical(F, y0, Rational(6));
            brute += b.count;
            if (!b.ok) {
                o.fail(describe(F) + " at y0 = " + y0.str() + ": " + b.note);
            } else if (b.count != expected) {
                o.fail(describe(F) + " at y0 = " + y0.str() + ": brute force " + std::to_string(b.count) +
                       ", places " + std::to_string(expected));
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(passing) + " passing and " + std::to_string(failing) + " failing places, " +
                   std::to_string(brute) + " brute-force solutions";
    return o;
}

Outcome criterion6(const std::vector<BiPoly>& curves) {
    Outcome o;
    std::mt19937 rng(6);
    for (const auto& F : curves) {
        long terms = truncation_bound(F) + 2;
        std::vector<CurvePoint> centers = critical_points(F);
        for (const auto& c : centers)
            for (const auto& P : local_parametrizations(F, c, terms))
                if (!oracle::parametrizes(F, P.a, P.b)) o.fail(describe(F) + ": place at " + c.str() + " does not vanish");
        int found = 0;
        while (found < 5) {
            Elem y0(Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1));
            bool critical = false;
            for (const auto& c : centers) critical = critical || (c.y0 && *c.y0 == y0);
            if (critical) continue;
            ++found;
            UniPoly fp = F.eval(0, y0);
            long branches = 0;
            for (const auto& rc : roots_in_closure(fp)) {
                CurvePoint c{y0, rc.root, rc.field, rc.degree()};
                for (const auto& P : local_parametrizations(F, c, terms)) {
                    if (!oracle::parametrizes(F, P.a, P.b)) o.fail(describe(F) + ": place at " + c.str() + " does not vanish");
                    branches += static_cast<long>(rc.degree()) * P.conjugates;
                }
            }
            if (branches != F.degree(1))
                o.fail(describe(F) + " at y0 = " + y0.str() + ": " + std::to_string(branches) + " branches");
        }
    }
    return o;
}

std::vector<SolutionTruncation> guaranteed(const SolveReport& r) {
    std::vector<SolutionTruncation> out;
    for (const auto* v : {&r.at_zero, &r.at_infinity})
        for (const auto& t : *v)
            if (t.guarantee) out.push_back(t);
    return out;
}

Outcome criterion7(const std::vector<BiPoly>& curves) {
    Outcome o;
    for (const auto& F : curves) {
        auto t0 = std::chrono::steady_clock::now();
        SolveReport r = puiseux_solve(F, default_order(F, 0));
        auto t1 = std::chrono::steady_clock::now();
        for (const auto& t : guaranteed(r)) {
            Series a = prolong_truncation(r.reduced, prolong_truncation(r.reduced, t.series, Rational(8), t.point),
                                          Rational(16), t.point);
            Series b = prolong_truncation(r.reduced, t.series, Rational(16), t.point);
            if (!(a == b)) o.fail(describe(F) + ": two-step prolongation differs");
            if (!t.free_parameter && !oracle::solves(r.reduced, b)) o.fail(describe(F) + ": prolonged truncation is not a solution");
        }
        if (std::getenv("ACC_TIMING"))
            std::cerr << describe(F) << " solve " << std::chrono::duration<double>(t1 - t0).count() << " total "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "\n";
    }
    return o;
}

bool distinct(const SolutionTruncation& a, const SolutionTruncation& b) {
    if (!(a.initial == b.initial)) return true;
    Rational T = *min_known(a.series.known(), b.series.known());
    return !(a.series.truncate(T) == b.series.truncate(T));
}

Outcome criterion8() {
    Outcome o;
    for (const auto& [eq, N] : std::vector<std::pair<std::string, long>>{{"4*y'^2*y - 1", 0}, {"y'^2 + y^2 - 1", 10}}) {
        SolveReport r = solve(eq, N);
        std::vector<SolutionTruncation> z;
        for (const auto& t : r.at_zero)
            if (t.guarantee) z.push_back(t);
        if (z.empty()) o.fail(eq + ": no guaranteed truncation at zero");
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = i + 1; j < z.size(); ++j)
                if (!distinct(z[i], z[j])) o.fail(eq + ": repeated initial segment");
        for (const auto& t : z) {
            auto all = expand_conjugates(t, r.reduced.field());
            if (static_cast<int>(all.size()) != t.conjugates) o.fail(eq + ": conjugate count mismatch");
        }
    }
    return o;
}

}  // namespace

int main() {
    std::vector<BiPoly> curves = curve_family();
    std::vector<std::pair<std::string, std::function<Outcome()>>> items{
        {"ramified exact pipeline", criterion1},
        {"trigonometric case", criterion2},
        {"family at infinity", criterion3},
        {"algebraic decisions", criterion4},
        {"solution-place filter", [&] { return criterion5(curves); }},
        {"Newton-Puiseux oracle", [&] { return criterion6(curves); }},
        {"prolongation determinism", [&] { return criterion7(curves); }},
        {"uniqueness bookkeeping", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = items[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << items[i].first;
        line.precision(2);
        line << std::fixed << "  (" << secs << " s)";
        if (!o.detail.empty()) line << "  " << o.detail;
        std::cout << line.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed;
}
