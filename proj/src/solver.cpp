#include "aode/solver.hpp"

#include <algorithm>
#include <future>

#include "aode/bivariate.hpp"

namespace aode {

namespace {

Rational lattice_step(long n) {
    Rational s(1, n);
    s.canonicalize();
    return s;
}

bool known_through(const Series& s, const Rational& T) { return !s.known() || *s.known() >= T; }

Series cut(const Series& s, const Rational& T) { return Series(s.terms(), s.ramification(), T, s.point()).truncate(T); }

struct Context {
    BiPoly F;
    long bound = 0;
    bool guarantee = true;
    Rational order;
};

// Truncations at x = 0 (h = 0) or x = infinity (h = 2) from the places of F at `center`.
std::vector<SolutionTruncation> solve_center(const Context& cx, const CurvePoint& center, int h, const Rational& extra) {
    std::vector<SolutionTruncation> out;
    for (Place place : local_parametrizations(cx.F, center, cx.bound)) {
        auto chk = check_solution_place(place, h);
        if (!chk.solution_place) continue;
        const long n = chk.n;
        const Rational Tx = cx.order + extra + lattice_step(n);
        Rational need_t = Tx * n;
        long need = need_t.get_num().get_si() / need_t.get_den().get_si() + 1 + std::abs(place.k);
        if (need > cx.bound) place = extend_place(place, need);
        long terms = std::max(need, cx.bound);
        for (int attempt = 0;; ++attempt) {
            std::vector<SolutionTruncation> found;
            bool enough = true;
            for (const auto& sol : solve_reparametrization(place, n, h)) {
                Series y = solution_from_reparametrization(place, sol, n, h);
                if (!known_through(y, Tx)) {
                    enough = false;
                    break;
                }
                SolutionTruncation st;
                st.series = cut(y, Tx);
                st.initial = center;
                st.n = n;
                st.point = h == 2 ? Point::infinity : Point::zero;
                st.guarantee = cx.guarantee;
                st.field = sol.field;
                st.conjugates = center.conjugates * place.conjugates * sol.conjugates;
                st.sigma1 = sol.sigma1_minpoly;
                if (sol.free_symbol) st.free_parameter = sol.free_symbol->str();
                found.push_back(std::move(st));
            }
            if (enough) {
                for (auto& s : found) out.push_back(std::move(s));
                break;
            }
            if (attempt > 8) throw Error("internal: solution truncation does not reach the requested order");
            terms *= 2;
            place = extend_place(place, terms);
        }
    }
    return out;
}

// y = y0 + p0 x + ... through regular tuples (y0, p0) with p0 != 0 and F_p(y0, p0) != 0.
std::vector<SolutionTruncation> regular_solutions(const BiPoly& F, const Elem& y0, const Field& K, int conj,
                                                  const Rational& target) {
    std::vector<SolutionTruncation> out;
    UniPoly fp = F.eval(0, y0);
    if (fp.degree() < 1) return out;
    BiPoly Fp = F.partial(1);
    for (const auto& rc : roots_in_closure(fp, K.join(field_of(y0)))) {
        if (rc.root.is_zero() || Fp.eval(0, y0)(rc.root).is_zero()) continue;
        Series s(Series::Terms{{0, y0}, {1, rc.root}});
        SolutionTruncation st;
        st.series = target >= 2 ? prolong_truncation(F, s, target, Point::zero) : cut(s, target + 1);
        st.initial = {y0, rc.root, rc.field, conj * rc.degree()};
        st.field = rc.field;
        st.conjugates = conj * rc.degree();
        st.guarantee = true;
        st.regular = true;
        out.push_back(std::move(st));
    }
    return out;
}

// Negative-order solutions at zero: reciprocals of positive-order solutions
// of the inverted equation.
std::vector<SolutionTruncation> inverted_solutions(const Context& cx) {
    std::vector<SolutionTruncation> out;
    Normalized inv = squarefree_normalize(invert_equation(cx.F));
    const BiPoly& G = inv.F;
    CurvePoint infinity{std::nullopt, std::nullopt, cx.F.field(), 1};
    for (const auto& r : inv.removed) {
        if (r.reason == "repeated" || r.factor.degree(0) >= 1) continue;
        for (const auto& rc : roots_in_closure(r.factor.coeff_in(0, 0), cx.F.field())) {
            if (rc.root.is_zero()) continue;
            SolutionTruncation y;
            y.series = cut(Series::monomial(rc.root.inverse(), -1), cx.order + 1);
            y.initial = infinity;
            y.initial.field = rc.field;
            y.initial.conjugates = rc.degree();
            y.field = rc.field;
            y.conjugates = rc.degree();
            y.guarantee = cx.guarantee;
            out.push_back(std::move(y));
        }
    }
    if (G.degree(0) < 1 || G.degree(1) < 1) return out;
    Context gx = cx;
    gx.F = G;
    gx.bound = std::max(cx.bound, truncation_bound(G));
    Field K = G.field();
    Rational extra(0);
    for (int attempt = 0;; ++attempt) {
        std::vector<SolutionTruncation> tilde;
        for (const auto& c : critical_points(G))
            if (c.y0 && c.y0->is_zero()) {
                auto v = solve_center(gx, c, 0, extra);
                tilde.insert(tilde.end(), v.begin(), v.end());
            }
        for (auto& r : regular_solutions(G, Elem(), K, 1, cx.order + extra)) tilde.push_back(std::move(r));
        bool enough = true;
        std::vector<SolutionTruncation> got = out;
        for (auto& t : tilde) {
            const Series& s = t.series;
            if (s.is_zero() || *s.order() <= 0) continue;
            Rational v = *s.order();
            Rational Tx = cx.order + lattice_step(t.n);
            if (*s.known() - 2 * v < Tx) {
                enough = false;
                extra = std::max(extra, Rational(2 * v));
                continue;
            }
            SolutionTruncation y = t;
            y.series = cut(s.inverse(Tx), Tx);
            y.initial = infinity;
            y.initial.field = t.field;
            y.initial.conjugates = t.conjugates;
            y.regular = false;
            y.guarantee = cx.guarantee;
            got.push_back(std::move(y));
        }
        if (enough) return got;
        if (attempt > 4) throw Error("internal: inverted solutions do not reach the requested order");
    }
}

std::vector<std::pair<Field, Elem>> all_roots(const UniPoly& f, const Field& K) {
    std::vector<std::pair<Field, Elem>> out;
    for (const auto& rc : roots_in_closure(f, K)) {
        out.emplace_back(rc.field, rc.root);
        if (rc.degree() > 1) {
            dense::Poly lin{-rc.root, Elem(1)};
            UniPoly rest(f.var(), dense::exact_div(rc.minpoly.coeffs(), lin));
            for (auto& r : all_roots(rest, rc.field)) out.push_back(std::move(r));
        }
    }
    return out;
}

bool series_starts_with(const Series& s, const Elem& iv) {
    if (s.is_zero()) return iv.is_zero();
    if (*s.order() < 0) return false;
    return s.coeff(Rational(0)) == iv;
}

}  // namespace

BiPoly invert_equation(const BiPoly& F) {
    int M = 0;
    for (const auto& [e, c] : F.terms()) M = std::max(M, e.first + 2 * e.second);
    BiPoly out(F.vars()[0], F.vars()[1]);
    for (const auto& [e, c] : F.terms()) out.add_term(M - e.first - 2 * e.second, e.second, e.second % 2 ? -c : c);
    return out;
}

std::vector<RootClass> constant_solutions(const BiPoly& F) {
    UniPoly f0 = F.eval(1, Elem());
    if (f0.is_zero()) throw Error("F(y, 0) vanishes identically; remove the factor p first (squarefree_normalize)");
    if (f0.degree() < 1) return {};
    return roots_in_closure(f0, F.field());
}

std::vector<GenericSolution> generic_solution_truncation(const BiPoly& F, const Rational& order, bool irreducible) {
    if (F.is_constant()) throw Error("the equation is constant");
    std::vector<BiPoly> comps{F};
    if (!irreducible) {
        auto c = bivariate_components(F);
        if (c.status == Components::Status::factored) comps = c.factors;
    }
    std::vector<GenericSolution> out;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const BiPoly& G = comps[ci];
        if (G.degree(0) < 1 || G.degree(1) < 1) continue;
        GenericSolution gs;
        gs.component = static_cast<int>(ci);
        try {
            auto [K1, CC] = G.field().adjoin_symbol("_CC");
            UniPoly gp = G.eval(0, CC);
            auto [K2, P] = K1.adjoin_root(gp.coeffs(), "_P");
            gs.field = K2;
            gs.CC = CC;
            gs.P = P;
            Series s(Series::Terms{{0, CC}, {1, P}});
            gs.truncation = order >= 2 ? prolong_truncation(G, s, order, Point::zero) : cut(s, order + 1);
        } catch (const ReducibleModulus&) {
            if (!irreducible) throw;
            return generic_solution_truncation(F, order, false);
        }
        gs.relation = G.renamed("_CC", "_P");
        const int dp = G.degree(1);
        BiPoly pvar = BiPoly::var(gs.relation, 1);
        UniPoly lc = G.coeff_in(1, dp);
        std::vector<BiPoly> ex;
        auto add = [&](const BiPoly& c) {
            if (c.is_constant()) return;
            BiPoly pc = primitive_form(c);
            if (std::find(ex.begin(), ex.end(), pc) == ex.end()) ex.push_back(pc);
        };
        auto from_cc = [&](const UniPoly& u) {
            BiPoly r("_CC", "_P");
            for (int k = 0; k <= u.degree(); ++k) r.add_term(k, 0, u.coeff(k));
            return r;
        };
        if (dp == 1) {
            add(from_cc(G.eval(1, Elem())));
        } else {
            add(pvar);
            add(G.partial(1).renamed("_CC", "_P"));
        }
        add(from_cc(lc));
        gs.exceptional = std::move(ex);
        out.push_back(std::move(gs));
    }
    return out;
}

std::vector<SolutionTruncation> expand_conjugates(const SolutionTruncation& s, const Field& base) {
    struct State {
        Embedding phi;
        Field target;
    };
    std::vector<State> states{{Embedding{}, base}};
    for (const auto& L : s.field.levels()) {
        if (is_ancestor(L, base.top())) continue;
        std::vector<State> next;
        for (const auto& st : states) {
            if (L->kind == LevelKind::transcendental) {
                auto [K1, g] = st.target.adjoin_symbol(L->name);
                State ns = st;
                ns.phi.map(L, g);
                ns.target = K1;
                next.push_back(std::move(ns));
                continue;
            }
            dense::Poly mp;
            for (const auto& c : L->minpoly) mp.push_back(st.phi(c));
            for (auto& [K1, r] : all_roots(UniPoly("Z", mp), st.target)) {
                State ns = st;
                ns.phi.map(L, r);
                ns.target = K1;
                next.push_back(std::move(ns));
            }
        }
        states = std::move(next);
    }
    std::vector<SolutionTruncation> out;
    for (const auto& st : states) {
        SolutionTruncation c = s;
        c.series = s.series.map_coeffs([&](const Elem& e) { return st.phi(e); });
        c.field = st.target;
        c.conjugates = 1;
        auto mapc = [&](const Coord& x) -> Coord { return x ? Coord(st.phi(*x)) : std::nullopt; };
        c.initial.y0 = mapc(s.initial.y0);
        c.initial.p0 = mapc(s.initial.p0);
        c.initial.conjugates = 1;
        c.initial.field = st.target;
        if (s.sigma1) c.sigma1 = UniPoly(s.sigma1->var(), [&] {
            dense::Poly m;
            for (const auto& x : s.sigma1->coeffs()) m.push_back(st.phi(x));
            return m;
        }());
        out.push_back(std::move(c));
    }
    return out;
}

SolveReport puiseux_solve(const BiPoly& F0, const Rational& order, const SolveOptions& opts) {
    if (F0.is_zero() || F0.is_constant()) throw Error("the equation is constant");
    SolveReport rep;
    rep.equation = F0;
    rep.order = order;
    Normalized nz = squarefree_normalize(F0);
    const BiPoly& F = nz.F;
    rep.reduced = F;
    const Field K = F0.field();
    const bool curve = F.degree(0) >= 1 && F.degree(1) >= 1;
    for (const auto& r : nz.removed) rep.transforms.push_back("removed factor " + r.factor.str() + " (" + r.reason + ")");

    dense::Poly yfactors{Elem(1)};
    for (const auto& r : nz.removed) {
        if (r.reason == "repeated") continue;
        if (r.factor.degree(1) >= 1)
            rep.slopes.push_back(r.factor.coeff_in(0, 0));
        else
            yfactors = dense::mul(yfactors, r.factor.coeff_in(1, 0).coeffs());
    }

    if (opts.constants) {
        dense::Poly c = yfactors;
        if (curve) c = dense::mul(c, F.eval(1, Elem()).coeffs());
        if (dense::degree(c) >= 1) {
            for (const auto& [sq, mult] : dense::squarefree(c))
                for (auto rc : roots_in_closure(UniPoly("y", sq), K)) {
                    rc.multiplicity = 1;
                    rep.constants.push_back(std::move(rc));
                }
            std::stable_sort(rep.constants.begin(), rep.constants.end(), [](const RootClass& a, const RootClass& b) {
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                return canonical_less(a.root, b.root);
            });
        }
        if (opts.iv)
            std::erase_if(rep.constants, [&](const RootClass& r) { return !(r.root == *opts.iv); });
    }
    if (!curve) return rep;

    const long def_bound = truncation_bound(F);
    rep.bound = opts.bound_override ? *opts.bound_override : def_bound;
    Context cx{F, std::max(rep.bound, 1L), rep.bound >= def_bound, order};

    if (opts.generic) {
        if (opts.iv) {
            for (auto& r : regular_solutions(F, *opts.iv, K, 1, order)) rep.at_zero.push_back(std::move(r));
            for (const auto& g : rep.slopes)
                for (const auto& rc : roots_in_closure(g, K)) {
                    if (rc.root.is_zero()) continue;
                    SolutionTruncation st;
                    st.series = cut(Series(Series::Terms{{0, *opts.iv}, {1, rc.root}}), order + 1);
                    st.initial = {*opts.iv, rc.root, rc.field, rc.degree()};
                    st.field = rc.field;
                    st.conjugates = rc.degree();
                    st.guarantee = true;
                    st.regular = true;
                    rep.at_zero.push_back(std::move(st));
                }
        } else {
            rep.generic = generic_solution_truncation(F, opts.generic_order.value_or(order), opts.irreducible);
        }
    }

    std::vector<CurvePoint> crit = critical_points(F);
    struct Task {
        CurvePoint center;
        int h;
    };
    std::vector<Task> tasks;
    if (opts.finite)
        for (const auto& c : crit)
            if (c.y0) tasks.push_back({c, 0});
    if (opts.infinity)
        for (const auto& c : crit)
            if (!c.y0 || (c.p0 && c.p0->is_zero())) tasks.push_back({c, 2});

    std::vector<std::vector<SolutionTruncation>> results(tasks.size() + 1);
    auto run = [&](std::size_t i) {
        if (i == tasks.size()) {
            if (opts.finite && infinity_infinity_on_curve(F)) {
                rep.transforms.push_back("inversion y -> 1/y: " + invert_equation(F).str());
                results[i] = inverted_solutions(cx);
            }
            return;
        }
        results[i] = solve_center(cx, tasks[i].center, tasks[i].h, Rational(0));
    };
    const std::size_t total = tasks.size() + 1;
    if (opts.jobs <= 1) {
        for (std::size_t i = 0; i < total; ++i) run(i);
    } else {
        for (std::size_t start = 0; start < total; start += opts.jobs) {
            std::vector<std::future<void>> fs;
            for (std::size_t i = start; i < std::min(total, start + opts.jobs); ++i)
                fs.push_back(std::async(std::launch::async, run, i));
            for (auto& f : fs) f.get();
        }
    }
    for (std::size_t i = 0; i < total; ++i) {
        bool inf = i < tasks.size() && tasks[i].h == 2;
        auto& dst = inf ? rep.at_infinity : rep.at_zero;
        for (auto& s : results[i]) dst.push_back(std::move(s));
    }
    if (opts.iv) {
        auto bad = [&](const SolutionTruncation& s) { return !series_starts_with(s.series, *opts.iv); };
        std::erase_if(rep.at_zero, bad);
        std::erase_if(rep.at_infinity, bad);
    }
    if (opts.expand_conjugates) {
        for (auto* list : {&rep.at_zero, &rep.at_infinity}) {
            std::vector<SolutionTruncation> ex;
            for (const auto& s : *list) {
                if (s.conjugates == 1) {
                    ex.push_back(s);
                    continue;
                }
                for (auto& c : expand_conjugates(s, K)) ex.push_back(std::move(c));
            }
            *list = std::move(ex);
        }
    }
    return rep;
}

}  // namespace aode
