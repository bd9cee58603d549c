// Brute-force count of Puiseux solutions y = y0 + sum c_i x^(g_i) of
// F(y, y') = 0 at x = 0 by undetermined coefficients: each new term c x^g
// must cancel the lowest order of F(psi + c x^g, psi' + c g x^(g-1)), found
// from the Taylor coefficients of F at (psi, psi'). Only solutions with a
// critical initial derivative (0, infinity or a root of F_p) are counted.
#pragma once

#include <set>
#include <string>

#include "aode/factor.hpp"
#include "oracle.hpp"

namespace bruteforce {

using aode::BiPoly;
using aode::Elem;
using aode::Rational;
using aode::Integer;
using oracle::Sum;

struct Result {
    bool ok = true;
    long count = 0;
    std::string note;
};

namespace detail {

inline Integer binom(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

struct Point {
    long q;   // i + j
    long j;   // power of the derivative
    Rational w;  // ord A_ij - j
    Elem lead;
};

class Search {
public:
    Search(const BiPoly& F, const Elem& y0, const Rational& limit) : F_(F), y0_(y0), limit_(limit) {}

    Result run() {
        Sum psi;
        if (!y0_.is_zero()) psi[Rational(0)] = y0_;
        step(psi, aode::field_of(y0_), Rational(0), 1, true);
        return res_;
    }

private:
    std::vector<Point> points(const Sum& psi, Sum& A00) {
        Sum dpsi = oracle::d_dx(psi);
        std::vector<Point> out;
        int dy = F_.degree(0), dp = F_.degree(1);
        for (int i = 0; i <= dy; ++i)
            for (int j = 0; j <= dp; ++j) {
                Sum A;
                for (const auto& [e, c] : F_.terms()) {
                    if (e.first < i || e.second < j) continue;
                    Sum t = oracle::one();
                    for (int k = 0; k < e.first - i; ++k) t = oracle::mul(t, psi);
                    for (int k = 0; k < e.second - j; ++k) t = oracle::mul(t, dpsi);
                    A = oracle::add(A, t, c * Elem(Integer(binom(e.first, i) * binom(e.second, j))));
                }
                if (i == 0 && j == 0) {
                    A00 = A;
                    continue;
                }
                if (A.empty()) continue;
                out.push_back({i + j, j, A.begin()->first - j, A.begin()->second});
            }
        return out;
    }

    static Rational value(const Point& p, const Rational& g) { return p.w + p.q * g; }

    void step(const Sum& psi, const aode::Field& K, const Rational& last, long mult, bool first) {
        if (!res_.ok) return;
        if (++nodes_ > 20000) {
            res_.ok = false;
            res_.note = "search too large";
            return;
        }
        Sum A00;
        std::vector<Point> pts = points(psi, A00);
        std::vector<Point> all = pts;
        if (!A00.empty()) all.push_back({0, 0, A00.begin()->first, A00.begin()->second});

        auto min_at = [&](const Rational& g) {
            Rational m = value(all[0], g);
            for (const auto& p : all) m = std::min(m, value(p, g));
            return m;
        };

        // Exponents where c is free: a single group attains the minimum and
        // its coefficient vanishes identically.
        std::set<long> qs;
        for (const auto& p : pts) qs.insert(p.q);
        for (long q : qs) {
            Rational wmin;
            bool have = false;
            for (const auto& p : pts)
                if (p.q == q && (!have || p.w < wmin)) wmin = p.w, have = true;
            aode::dense::Poly P;
            for (const auto& p : pts)
                if (p.q == q && p.w == wmin) {
                    if (static_cast<long>(P.size()) <= p.j) P.resize(p.j + 1);
                    P[p.j] += p.lead;
                }
            aode::dense::strip(P);
            if (aode::dense::degree(P) < 1) continue;
            for (const auto& rc : aode::roots_in_closure(aode::UniPoly("g", P), K)) {
                if (!rc.root.is_rational() || rc.degree() != 1) continue;
                Rational g = rc.root.rational();
                if (g <= last) continue;
                bool alone = true;
                for (const auto& p : all)
                    if (p.q != q && value(p, g) <= wmin + q * g) alone = false;
                if (alone) {
                    res_.ok = false;
                    res_.note = "free coefficient at exponent " + aode::to_string(g);
                    return;
                }
            }
        }

        std::set<Rational, oracle::QLess> gs;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b) {
                if (all[a].q == all[b].q) continue;
                Rational g = (all[a].w - all[b].w) / Rational(all[b].q - all[a].q);
                if (g > last) gs.insert(g);
            }
        if (A00.empty() && !first) res_.count += mult;
        for (const auto& g : gs) {
            Rational m = min_at(g);
            aode::dense::Poly Phi;
            for (const auto& p : all) {
                if (value(p, g) != m) continue;
                if (static_cast<long>(Phi.size()) <= p.q) Phi.resize(p.q + 1);
                Phi[p.q] += p.lead * Elem(g).pow(p.j);
            }
            aode::dense::strip(Phi);
            if (Phi.empty()) {
                res_.ok = false;
                res_.note = "cancelling groups at exponent " + aode::to_string(g);
                return;
            }
            std::size_t low = 0;
            while (Phi[low].is_zero()) ++low;
            Phi.erase(Phi.begin(), Phi.begin() + static_cast<long>(low));
            if (aode::dense::degree(Phi) < 1) continue;
            for (const auto& rc : aode::roots_in_closure(aode::UniPoly("c", Phi), K)) {
                if (first && g == 1 && !F_.partial(1).eval(0, y0_)(rc.root).is_zero()) continue;
                long m2 = mult * rc.degree();
                if (g > limit_) {
                    res_.count += m2;
                    continue;
                }
                Sum next = psi;
                next[g] = rc.root;
                step(next, rc.field, g, m2, false);
                if (!res_.ok) return;
            }
        }
    }

    BiPoly F_;
    Elem y0_;
    Rational limit_;
    Result res_;
    long nodes_ = 0;
};

}  // namespace detail

/// Number of nonzero solutions through y0 (over the field of y0) with a
/// critical initial derivative, terms compared up to x^limit.
inline Result count_critical(const BiPoly& F, const Elem& y0, const Rational& limit) {
    return detail::Search(F, y0, limit).run();
}

}  // namespace bruteforce
