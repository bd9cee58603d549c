#include "aode/briot_bouquet.hpp"

#include <algorithm>

namespace aode {

namespace {

Series relative_a(const Place& place) {
    return place.center.y0 ? place.a - Series::constant(*place.center.y0) : place.a;
}

Rational ceil_lattice(const Rational& T, long n) {
    Rational v = T * n;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Rational(q, n);
}

Elem coeff_or_zero(const Series& s, const Rational& e) {
    if (s.known() && e >= *s.known()) throw OrderUnknown(*s.known());
    return s.coeff(e);
}

Series exact_part(const Series& s) { return Series(s.terms(), s.ramification(), std::nullopt, s.point()); }

Series eval_exact(const BiPoly& f, const Series& y, const Series& p) {
    int dy = std::max(f.degree(0), 0), dp = std::max(f.degree(1), 0);
    std::vector<Series> yp{Series::constant(Elem(1))}, pp{Series::constant(Elem(1))};
    for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * y);
    for (int j = 1; j <= dp; ++j) pp.push_back(pp.back() * p);
    Series acc = Series::zero();
    for (const auto& [e, c] : f.terms()) acc = acc + yp[e.first] * pp[e.second] * c;
    return acc;
}

}  // namespace

SolutionPlaceCheck check_solution_place(const Place& place, int h) {
    long N = place.k - place.r;
    if (h == 0) return {N > 0, N > 0 ? N : 0};
    return {N < 0, N < 0 ? -N : 0};
}

CoreResult briot_bouquet_core(const CoefficientRecursion& rec, std::vector<Elem> initial, long last,
                              const std::string& free_name) {
    CoreResult out;
    if (initial.empty()) initial.emplace_back();
    out.sigma = std::move(initial);
    for (long i = static_cast<long>(out.sigma.size()); i <= last; ++i) {
        Elem L = rec.L(i);
        Elem R = rec.R(i, out.sigma);
        if (!L.is_zero()) {
            out.sigma.push_back(R / L);
        } else if (R.is_zero()) {
            std::string nm = out.free_symbol ? free_name + std::to_string(i) : free_name;
            auto [K, c] = field_of(out.sigma).adjoin_symbol(nm);
            if (!out.free_index) {
                out.free_index = i;
                out.free_symbol = c;
            }
            out.sigma.push_back(c);
        } else {
            out.consistent = false;
            out.inconsistent_index = i;
            return out;
        }
    }
    return out;
}

std::vector<ReparamSolution> solve_reparametrization(const Place& place, long n, int h, long terms) {
    const long N = n * (1 - h);
    const long k = place.k;
    Series arel = relative_a(place);
    Elem alpha = arel.leading_coeff();
    Elem beta = place.b.leading_coeff();
    Elem c = Elem(N) * beta / (Elem(k) * alpha);
    if (N < 0) c = c.inverse();
    dense::Poly zp(n + 1);
    zp[0] = -c;
    zp[n] = Elem(1);
    UniPoly zpoly("Z", zp);

    Series da = place.a.derivative();
    Series db = place.b.derivative();
    Series tN1 = Series::monomial(Elem(N), N - 1);
    long Ta = k + 64;
    if (place.a.known()) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), place.a.known()->get_num_mpz_t(), place.a.known()->get_den_mpz_t());
        Ta = q.get_si();
    }
    long last = Ta - k;  // sigma_i computable for i < Ta - k + 1
    if (terms > 0) last = std::min(last, terms);

    std::vector<ReparamSolution> out;
    for (const auto& rc : roots_in_closure(zpoly, place.field)) {
        Elem s1 = rc.root;
        // Block data of the linearization at s_m, valid for m < i <= 2m.
        long m = 0;
        Series A, B, E;
        auto refresh = [&](long i, const std::vector<Elem>& sigma) {
            m = i - 1;
            Series::Terms st;
            for (long l = 1; l <= m; ++l) st.emplace(l, sigma[l]);
            Series sm(st);
            Rational cap(k - 1 + 2 * m + 2);
            A = compose(da, sm, cap);
            B = tN1 * compose(db, sm, cap + 1);
            E = A * sm.derivative() - tN1 * compose(place.b, sm, cap + 1);
        };
        CoefficientRecursion rec;
        rec.L = [&](long i) {
            if (m == 0) {
                std::vector<Elem> sig{Elem(), s1};
                refresh(2, sig);
            }
            return Elem(k - 1 + i) * coeff_or_zero(A, Rational(k - 1)) - coeff_or_zero(B, Rational(k - 2));
        };
        rec.R = [&](long i, const std::vector<Elem>& sigma) {
            if (i > 2 * m) refresh(i, sigma);
            Elem r = -coeff_or_zero(E, Rational(k - 2 + i));
            for (long l = m + 1; l < i; ++l)
                r -= (Elem(k - 1 + i) * coeff_or_zero(A, Rational(k - 1 + i - l)) -
                      coeff_or_zero(B, Rational(k - 2 + i - l))) *
                     sigma[l];
            return r;
        };
        CoreResult core;
        long reached = last;
        for (;;) {
            m = 0;
            try {
                core = briot_bouquet_core(rec, {Elem(), s1}, reached);
                break;
            } catch (const OrderUnknown&) {
                if (--reached < 1) throw Error("insufficient truncation for the reparametrization");
            }
        }
        if (!core.consistent) continue;
        Series::Terms st;
        for (long l = 1; l < static_cast<long>(core.sigma.size()); ++l) st.emplace(l, core.sigma[l]);
        ReparamSolution sol;
        sol.s = Series(st, 1, Rational(reached + 1));
        sol.field = core.free_symbol ? field_of(*core.free_symbol) : rc.field;
        sol.sigma1_minpoly = rc.minpoly;
        sol.conjugates = rc.degree();
        sol.free_index = core.free_index;
        sol.free_symbol = core.free_symbol;
        out.push_back(std::move(sol));
    }
    return out;
}

Series solution_from_reparametrization(const Place& place, const ReparamSolution& sol, long n, int h) {
    Rational cap = place.a.known() ? *place.a.known() : Rational(place.k + 64);
    Series y = compose(place.a, sol.s, cap).ramify(n);
    return y.at(h == 2 ? Point::infinity : Point::zero);
}

Series differential_image(const Series& y, int h) {
    Series d = y.derivative();
    if (h == 2) d = d * Series::monomial(Elem(-1), 2);
    return d.at(y.point());
}

Series prolong_truncation(const BiPoly& F, const Series& s, const Rational& target, Point point, bool guaranteed) {
    if (!guaranteed) throw Error("prolongation needs a truncation with a uniqueness guarantee");
    if (s.is_zero() && !s.exact()) throw Error("cannot prolong an empty truncation");
    const int h = point == Point::infinity ? 2 : 0;
    const long n = s.ramification();
    Rational next;
    if (s.known()) {
        next = ceil_lattice(*s.known(), n);
    } else {
        long kmax = s.terms().empty() ? 0 : s.terms().rbegin()->first;
        next = Rational(kmax + 1, n);
        next.canonicalize();
    }
    Series cur = exact_part(s).at(point);
    Series Fy = eval_exact(F.partial(0), cur, differential_image(cur, h));
    Series Fp = eval_exact(F.partial(1), cur, differential_image(cur, h));
    if (Fy.is_zero() && Fp.is_zero()) throw Error("degenerate truncation: both partial derivatives vanish");
    Rational omega;
    bool have = false;
    if (!Fy.is_zero()) {
        omega = *Fy.order();
        have = true;
    }
    if (!Fp.is_zero()) {
        Rational w = *Fp.order() + (h - 1);
        omega = have ? std::min(omega, w) : w;
    }
    Elem Acoef = Fy.is_zero() ? Elem() : Fy.coeff(omega);
    Elem Bcoef = Fp.is_zero() ? Elem() : Fp.coeff(omega - (h - 1));
    Rational step(1, n);
    Rational cap = omega + target + step;
    Series res = substitute_poly(F, cur, differential_image(cur, h), cap);
    for (const auto& [key, c] : res.terms()) {
        Rational e(key, res.ramification());
        e.canonicalize();
        if (e < omega + next) throw Error("not a valid truncation: residual of order " + e.get_str());
    }
    // F(cur + d, D(cur + d)) is linear in d below the order of its terms of
    // degree >= 2 in (d, D(d)); coefficients are solved blockwise up to there.
    auto quadratic_order = [&](const Rational& e) -> std::optional<Rational> {
        auto vy = cur.valuation_bound(), vp = differential_image(cur, h).valuation_bound();
        std::optional<Rational> q;
        for (const auto& [ex, c] : F.terms()) {
            auto [a, b] = ex;
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j) {
                    if (i + j < 2 || (a > i && !vy) || (b > j && !vp)) continue;
                    Rational v = i * e + j * (e - 1 + h);
                    if (a > i) v += (a - i) * *vy;
                    if (b > j) v += (b - j) * *vp;
                    q = q ? std::min(*q, v) : v;
                }
        }
        return q;
    };
    Rational e = next;
    bool first = true;
    while (e <= target) {
        Series D = differential_image(cur, h);
        if (!first) {
            res = substitute_poly(F, cur, D, cap);
            if (!res.is_zero() && *res.order() < omega + e) throw Error("the extension of this truncation is not determined");
        }
        first = false;
        Series Fy1 = substitute_poly(F.partial(0), cur, D, cap);
        Series Fp1 = substitute_poly(F.partial(1), cur, D, cap);
        auto q = quadratic_order(e);
        Rational end = q ? std::max(Rational(e + step), Rational(*q - omega)) : Rational(target + step);
        std::vector<std::pair<Rational, Elem>> delta;
        for (; e <= target && e < end; e += step) {
            Rational X = omega + e;
            Elem r = res.coeff(X);
            for (const auto& [k, c] : delta) {
                r += Fy1.coeff(Rational(X - k)) * c;
                r += Fp1.coeff(Rational(X - k + 1 - h)) * c * Elem(Rational((1 - h) * k));
            }
            Elem L = Acoef + Elem(Rational((1 - h) * e)) * Bcoef;
            if (L.is_zero()) {
                if (r.is_zero()) throw Error("the extension of this truncation is not unique");
                throw Error("not a valid truncation: inconsistent coefficient at exponent " + e.get_str());
            }
            Elem ce = -r / L;
            if (!ce.is_zero()) delta.emplace_back(e, ce);
        }
        for (const auto& [k, c] : delta) {
            Rational kn = k * n;
            cur = cur + Series::monomial(c, kn.get_num().get_si(), n).at(point);
        }
    }
    res = substitute_poly(F, cur, differential_image(cur, h), cap);
    if (!res.is_zero() && *res.order() < cap) throw Error("the extension of this truncation is not determined");
    return Series(cur.terms(), cur.ramification(), target + step, point).truncate(target + step);
}

}  // namespace aode
