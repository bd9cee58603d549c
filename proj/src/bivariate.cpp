#include "aode/bivariate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aode/factor.hpp"
#include "aode/resultant.hpp"

namespace aode {

namespace {

// Leading term in lex order with var1 major.
std::pair<BiPoly::Exp, Elem> lex_lead(const BiPoly& f) {
    BiPoly::Exp best{-1, -1};
    Elem c;
    for (const auto& [e, x] : f.terms())
        if (e.second > best.second || (e.second == best.second && e.first > best.first)) {
            best = e;
            c = x;
        }
    return {best, c};
}

BiPoly from_uni(const BiPoly& like, int which, const UniPoly& u) {
    BiPoly r(like.vars()[0], like.vars()[1]);
    for (int k = 0; k <= u.degree(); ++k) {
        if (which == 0)
            r.add_term(k, 0, u.coeff(k));
        else
            r.add_term(0, k, u.coeff(k));
    }
    return r;
}

// gcd of the coefficients of f as a polynomial in var[which]; a polynomial in the other variable.
UniPoly content(const BiPoly& f, int which) {
    dense::Poly g;
    for (const auto& c : f.as_poly_in(which)) {
        if (c.is_zero()) continue;
        g = dense::gcd(g, c.coeffs());
        if (dense::degree(g) == 0) break;
    }
    return UniPoly(f.vars()[1 - which], g);
}

BiPoly divide_exact(const BiPoly& f, const BiPoly& g) {
    BiPoly q;
    if (!divides(f, g, &q)) throw Error("internal: inexact bivariate division");
    return q;
}

BiPoly make_monic(const BiPoly& f) {
    if (f.is_zero()) return f;
    return f * lex_lead(f).second.inverse();
}

}  // namespace

BiPoly primitive_form(const BiPoly& f) {
    if (f.is_zero()) return f;
    bool rational = true;
    for (const auto& [e, c] : f.terms()) rational = rational && c.is_rational();
    if (!rational) return make_monic(f);
    Integer den = 1, num = 0;
    for (const auto& [e, c] : f.terms()) den = lcm(den, c.rational().get_den());
    for (const auto& [e, c] : f.terms()) num = gcd(num, Rational(c.rational() * den).get_num());
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(lex_lead(f).second.rational()) < 0) scale = -scale;
    return f * Elem(scale);
}

bool divides(const BiPoly& f, const BiPoly& g, BiPoly* quotient) {
    if (g.is_zero()) return false;
    auto [eg, cg] = lex_lead(g);
    Elem inv = cg.inverse();
    BiPoly r = f;
    BiPoly q(f.vars()[0], f.vars()[1]);
    while (!r.is_zero()) {
        auto [er, cr] = lex_lead(r);
        if (er.first < eg.first || er.second < eg.second) return false;
        BiPoly t(f.vars()[0], f.vars()[1]);
        t.add_term(er.first - eg.first, er.second - eg.second, cr * inv);
        q = q + t;
        r = r - t * g;
    }
    if (quotient) *quotient = q;
    return true;
}

BiPoly bivariate_gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    UniPoly cf = content(f, 1), cg = content(g, 1);
    UniPoly c(f.vars()[0], dense::gcd(cf.coeffs(), cg.coeffs()));
    BiPoly a = divide_exact(f, from_uni(f, 0, cf));
    BiPoly b = divide_exact(g, from_uni(f, 0, cg));
    if (a.degree(1) < b.degree(1)) std::swap(a, b);
    BiPoly prim = BiPoly::constant(f, Elem(1));
    if (b.degree(1) >= 1) {
        while (true) {
            BiPoly r = pseudo_remainder(a, b, f.vars()[1]);
            if (r.is_zero()) {
                prim = b;
                break;
            }
            if (r.degree(1) == 0) break;
            a = b;
            b = divide_exact(r, from_uni(f, 0, content(r, 1)));
        }
    }
    return make_monic(prim * from_uni(f, 0, c));
}

Normalized squarefree_normalize(const BiPoly& f) {
    if (f.is_zero() || f.is_constant()) throw Error("the equation is constant");
    Normalized out;
    BiPoly F = f;
    UniPoly cy = content(F, 1);
    if (cy.degree() >= 1) {
        BiPoly c = from_uni(F, 0, cy.monic());
        out.removed.push_back({c, "depends only on " + F.vars()[0]});
        F = divide_exact(F, c);
    }
    UniPoly cp = content(F, 0);
    if (cp.degree() >= 1) {
        BiPoly c = from_uni(F, 1, cp.monic());
        out.removed.push_back({c, "depends only on " + F.vars()[1]});
        F = divide_exact(F, c);
    }
    if (F.degree(1) >= 1) {
        BiPoly g = bivariate_gcd(F, F.partial(1));
        if (!g.is_constant()) {
            out.removed.push_back({g, "repeated"});
            F = divide_exact(F, g);
        }
    }
    out.F = F;
    return out;
}

Components bivariate_components(const BiPoly& F, std::size_t max_univariate_factors) {
    Components out;
    out.factors = {F};
    Field K = F.field();
    if (K.has_transcendental() || F.is_constant()) return out;
    const int D = F.degree(1) + 1;
    dense::Poly image;
    for (const auto& [e, c] : F.terms()) {
        std::size_t idx = static_cast<std::size_t>(e.first) * D + e.second;
        if (image.size() <= idx) image.resize(idx + 1);
        image[idx] = c;
    }
    std::vector<UniPoly> pieces;
    for (const auto& fac : factor_univariate(UniPoly("z", image), K))
        for (int m = 0; m < fac.multiplicity; ++m) pieces.push_back(fac.poly);
    if (pieces.size() > max_univariate_factors) return out;
    auto back = [&](const UniPoly& h) {
        BiPoly r(F.vars()[0], F.vars()[1]);
        for (int e = 0; e <= h.degree(); ++e) r.add_term(e / D, e % D, h.coeff(e));
        return r;
    };
    std::vector<BiPoly> found;
    BiPoly rest = F;
    std::size_t s = 1;
    while (2 * s <= pieces.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            UniPoly prod("z", {Elem(1)});
            for (auto i : idx) prod = prod * pieces[i];
            BiPoly cand = back(prod);
            BiPoly q;
            if (!cand.is_constant() && cand.degree(1) >= 0 && divides(rest, cand, &q) && !q.is_constant()) {
                found.push_back(primitive_form(cand));
                rest = q;
                std::vector<UniPoly> remaining;
                for (std::size_t i = 0; i < pieces.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(pieces[i]);
                pieces = std::move(remaining);
                hit = true;
                break;
            }
            std::size_t i = s;
            while (i-- > 0 && idx[i] == pieces.size() - s + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (found.empty()) {
        out.status = Components::Status::irreducible;
        return out;
    }
    found.push_back(primitive_form(rest));
    out.status = Components::Status::factored;
    out.factors = std::move(found);
    return out;
}

}  // namespace aode
