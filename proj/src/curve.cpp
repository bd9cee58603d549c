#include "aode/curve.hpp"

#include <algorithm>
#include <numeric>

#include "aode/resultant.hpp"

namespace aode {

namespace detail {

struct Step {
    Elem lambda;
    Elem mu;
    long d = 1;
    long m = 1;
};

// Chain of Newton polygon substitutions ending in a polynomial with a
// simple root at the origin: leaf(u, t) = 0 has a unique solution u(t), u(0) = 0.
struct Branch {
    std::vector<Step> steps;
    BiPoly leaf;
    Field field;
    int conjugates = 1;
};

}  // namespace detail

namespace {

using detail::Branch;
using detail::Step;

std::string name_or(const NameFn& name, const Elem& e) { return e.str(name); }

int compare_coord(const Coord& a, const Coord& b) {
    if (!a && !b) return 0;
    if (!a) return 1;
    if (!b) return -1;
    return compare(*a, *b);
}

UniPoly lead_in(const BiPoly& F, int which) { return F.coeff_in(which, F.degree(which)); }

long ord_v(const UniPoly& c) {
    for (int j = 0; j <= c.degree(); ++j)
        if (!c.coeff(j).is_zero()) return j;
    return -1;
}

Elem binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Elem(r);
}

// a*d - b*m = 1 with 1 <= a <= m.
std::pair<long, long> bezout(long d, long m) {
    for (long a = 1; a <= m; ++a)
        if ((a * d - 1) % m == 0) return {a, (a * d - 1) / m};
    throw Error("internal: no Bezout pair");
}

// G(lambda t^d, t^m (mu + u1)) / t^L in variables (u1, t).
BiPoly substitute_step(const BiPoly& G, const Step& s, long L) {
    BiPoly out(G.vars()[0], G.vars()[1]);
    int du = G.degree(0);
    std::vector<Elem> mupow{Elem(1)};
    for (int i = 1; i <= du; ++i) mupow.push_back(mupow.back() * s.mu);
    for (const auto& [e, c] : G.terms()) {
        auto [i, j] = e;
        Elem base = c * s.lambda.pow(j);
        long texp = s.d * j + s.m * i - L;
        for (int l = 0; l <= i; ++l) out.add_term(l, static_cast<int>(texp), base * binomial(i, l) * mupow[i - l]);
    }
    return out;
}

void expand(const BiPoly& G, const Field& K, std::vector<Step> steps, int conj, std::vector<Branch>& out) {
    if (!G.coeff(1, 0).is_zero()) {
        out.push_back({std::move(steps), G, K, conj});
        return;
    }
    auto coeffs = G.as_poly_in(0);
    int i0 = -1;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        if (!coeffs[i].is_zero() && ord_v(coeffs[i]) == 0) {
            i0 = i;
            break;
        }
    if (i0 < 0) throw Error("internal: curve has a vertical component at the center");
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= i0; ++i)
        if (!coeffs[i].is_zero()) pts.emplace_back(i, ord_v(coeffs[i]));
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            auto [x0, y0] = hull[hull.size() - 2];
            auto [x1, y1] = hull.back();
            long cross = (x1 - x0) * (p.second - y0) - (y1 - y0) * (p.first - x0);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    struct Edge {
        long i1, j1, d, m, L;
    };
    std::vector<Edge> edges;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        auto [i1, j1] = hull[e];
        auto [i2, j2] = hull[e + 1];
        long di = i2 - i1, dj = j1 - j2;
        long g = std::gcd(di, dj);
        long d = di / g, m = dj / g;
        edges.push_back({i1, j1, d, m, j1 * d + i1 * m});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.m * b.d < b.m * a.d; });
    for (const auto& ed : edges) {
        dense::Poly phi;
        for (const auto& [e, c] : G.terms()) {
            auto [i, j] = e;
            if (j * ed.d + i * ed.m != ed.L) continue;
            long idx = (i - ed.i1) / ed.d;
            if (static_cast<long>(phi.size()) <= idx) phi.resize(idx + 1);
            phi[idx] = c;
        }
        UniPoly ph("Z", phi);
        auto [a, b] = bezout(ed.d, ed.m);
        for (const auto& rc : roots_in_closure(ph, K)) {
            Step s{rc.root.pow(b), rc.root.pow(a), ed.d, ed.m};
            BiPoly G1 = substitute_step(G, s, ed.L);
            auto next = steps;
            next.push_back(s);
            expand(G1, rc.field, std::move(next), conj * rc.degree(), out);
        }
    }
}

// Unique u(t) with leaf(u(t), t) = 0, u(0) = 0, known up to t^target.
Series solve_leaf(const BiPoly& leaf, long target) {
    BiPoly du = leaf.partial(0);
    Series t = Series::monomial(Elem(1), 1);
    Series u = Series::zero(Rational(1));
    long prec = 1;
    while (prec < target) {
        prec = std::min(2 * prec, target);
        Series ue(u.terms());
        Rational cap(prec);
        Series g = substitute_poly(leaf, ue, t, cap);
        Series gu = substitute_poly(du, ue, t, cap);
        u = (ue - g * gu.inverse(cap)).truncate(cap);
    }
    return u;
}

struct Unwound {
    Series U;  // u as a series in t
    Elem Lambda;
    long E = 1;
};

Unwound unwind(const Branch& br, long target) {
    Unwound w{solve_leaf(br.leaf, target), Elem(1), 1};
    for (std::size_t s = br.steps.size(); s-- > 0;) {
        const Step& st = br.steps[s];
        Series mono = Series::monomial(w.Lambda.pow(st.m), w.E * st.m);
        w.U = mono * (Series::constant(st.mu) + w.U);
        w.Lambda = st.lambda * w.Lambda.pow(st.d);
        w.E *= st.d;
    }
    return w;
}

Place make_place(const Branch& br, const CurvePoint& center, long terms) {
    long target = terms + 1;
    for (int attempt = 0;; ++attempt) {
        Unwound w = unwind(br, target);
        if (!w.U.is_zero()) {
            long ordU = w.U.order()->get_num().get_si();
            Rational TU = *w.U.known();
            if (TU >= ordU + terms) {
                Place pl;
                pl.center = center;
                if (center.p0) {
                    Series::Terms bt{{w.E, w.Lambda}};
                    if (!center.p0->is_zero()) bt.emplace(0, *center.p0);
                    pl.b = Series(bt);
                    pl.r = center.p0->is_zero() ? w.E : 0;
                } else {
                    pl.b = Series::monomial(w.Lambda.inverse(), -w.E);
                    pl.r = -w.E;
                }
                if (center.y0) {
                    pl.a = Series::constant(*center.y0) + w.U;
                    pl.k = ordU;
                } else {
                    pl.a = w.U.inverse(TU - 2 * ordU);
                    pl.k = -ordU;
                }
                pl.field = br.field;
                pl.conjugates = br.conjugates;
                pl.branch = std::make_shared<const Branch>(br);
                return pl;
            }
        }
        if (attempt > 12) throw Error("internal: place expansion does not converge");
        target *= 2;
    }
}

}  // namespace

std::string coord_str(const Coord& c, const NameFn& name) { return c ? name_or(name, *c) : "infinity"; }

std::string CurvePoint::str(const NameFn& name) const { return "(" + coord_str(y0, name) + ", " + coord_str(p0, name) + ")"; }

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return compare_coord(a.y0, b.y0) == 0 && compare_coord(a.p0, b.p0) == 0;
}

BiPoly local_polynomial(const BiPoly& F, const Coord& y0, const Coord& p0) {
    BiPoly G = F;
    if (y0) {
        G = G.translate(0, *y0);
    } else {
        int dy = G.degree(0);
        BiPoly H(G.vars()[0], G.vars()[1]);
        for (const auto& [e, c] : G.terms()) H.add_term(dy - e.first, e.second, c);
        G = H;
    }
    if (p0) {
        G = G.translate(1, *p0);
    } else {
        int dp = G.degree(1);
        BiPoly H(G.vars()[0], G.vars()[1]);
        for (const auto& [e, c] : G.terms()) H.add_term(e.first, dp - e.second, c);
        G = H;
    }
    return G.renamed("u", "v");
}

bool on_curve(const BiPoly& F, const Coord& y0, const Coord& p0) { return local_polynomial(F, y0, p0).coeff(0, 0).is_zero(); }

bool infinity_infinity_on_curve(const BiPoly& F) { return F.coeff(F.degree(0), F.degree(1)).is_zero(); }

std::vector<CurvePoint> critical_points(const BiPoly& F) {
    if (F.degree(0) < 1 || F.degree(1) < 1) throw Error("critical points need F to depend on y and p");
    Field K = F.field();
    BiPoly Fp = F.partial(1);
    std::vector<UniPoly> sources{F.eval(1, Elem()), lead_in(F, 1)};
    UniPoly R = resultant(F, Fp, "p");
    sources.push_back(R);
    std::vector<UniPoly> ys;
    for (const auto& s : sources) {
        if (s.is_zero() || s.degree() < 1) continue;
        for (const auto& f : factor_univariate(s, K))
            if (std::find(ys.begin(), ys.end(), f.poly) == ys.end()) ys.push_back(f.poly);
    }
    BiPoly pFp = Fp * BiPoly::var(F, 1);
    std::vector<CurvePoint> out;
    for (const auto& yf : ys) {
        auto [K1, y0] = K.adjoin_root(yf.coeffs());
        int cy = yf.degree();
        UniPoly f1 = F.eval(0, y0), f2 = pFp.eval(0, y0);
        UniPoly h("p", dense::gcd(f1.coeffs(), f2.coeffs()));
        if (h.degree() >= 1)
            for (const auto& rc : roots_in_closure(h, K1)) out.push_back({y0, rc.root, rc.field, cy * rc.degree()});
        if (lead_in(F, 1)(y0).is_zero()) out.push_back({y0, std::nullopt, K1, cy});
    }
    UniPoly ly = lead_in(F, 0);
    if (ly.degree() >= 1)
        for (const auto& rc : roots_in_closure(ly, K)) out.push_back({std::nullopt, rc.root, rc.field, rc.degree()});
    if (infinity_infinity_on_curve(F)) out.push_back({std::nullopt, std::nullopt, K, 1});
    std::stable_sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) {
        int c = compare_coord(a.y0, b.y0);
        if (c) return c < 0;
        return compare_coord(a.p0, b.p0) < 0;
    });
    return out;
}

long truncation_bound(const BiPoly& F) {
    long dp = F.degree(1), dy = F.degree(0);
    bool monic = lead_in(F, 1).degree() == 0;
    return monic ? 2 * (dp - 1) * dy + 1 : 2 * dp * dy + 1;
}

std::vector<Place> local_parametrizations(const BiPoly& F, const CurvePoint& center, long terms) {
    BiPoly G = local_polynomial(F, center.y0, center.p0);
    if (!G.coeff(0, 0).is_zero()) throw Error("center " + center.str() + " is not on the curve");
    Field K = G.field().join(center.field);
    std::vector<Branch> branches;
    expand(G, K, {}, 1, branches);
    std::vector<Place> out;
    for (const auto& br : branches) out.push_back(make_place(br, center, terms));
    return out;
}

Place extend_place(const Place& place, long terms) { return make_place(*place.branch, place.center, terms); }

}  // namespace aode
