#include "aode/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "aode/resultant.hpp"

namespace aode {

namespace {

using dense::Poly;

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31.

using ZP = std::vector<std::int64_t>;

void zp_strip(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t md(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t zp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = md(a, p), s0 = 0, s1 = 1;
    while (r1) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return md(s0, p);
}

ZP zp_sub(const ZP& a, const ZP& b, std::int64_t p) {
    ZP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = md((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
    zp_strip(r);
    return r;
}

ZP zp_mul(const ZP& a, const ZP& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    zp_strip(r);
    return r;
}

std::pair<ZP, ZP> zp_divrem(const ZP& a, const ZP& b, std::int64_t p) {
    ZP r = a;
    zp_strip(r);
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(r.size()) - 1 < db) return {{}, r};
    ZP q(r.size() - b.size() + 1, 0);
    std::int64_t inv = zp_inv(b.back(), p);
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        int k = static_cast<int>(r.size()) - 1 - db;
        std::int64_t c = r.back() * inv % p;
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[i + k] = md(r[i + k] - c * b[i], p);
        zp_strip(r);
    }
    zp_strip(q);
    return {q, r};
}

ZP zp_monic(const ZP& a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = zp_inv(a.back(), p);
    ZP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
    return r;
}

ZP zp_gcd(ZP a, ZP b, std::int64_t p) {
    zp_strip(a);
    zp_strip(b);
    while (!b.empty()) {
        ZP r = zp_divrem(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ZP, ZP> zp_bezout(const ZP& a, const ZP& b, std::int64_t p) {
    ZP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = zp_divrem(r0, r1, p);
        ZP s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZP t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::int64_t inv = zp_inv(r0.at(0), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

ZP zp_powmod(const ZP& base, const Integer& e, const ZP& mod, std::int64_t p) {
    ZP result{1};
    ZP b = zp_divrem(base, mod, p).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = zp_divrem(zp_mul(result, result, p), mod, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_divrem(zp_mul(result, b, p), mod, p).second;
    }
    return result;
}

ZP zp_derivative(const ZP& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    ZP r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i) % p;
    zp_strip(r);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product of degree-d factors.
void zp_edf(const ZP& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ZP>& out) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    while (true) {
        ZP a(n);
        for (auto& c : a) c = dist(rng);
        zp_strip(a);
        if (a.size() < 2) continue;
        ZP b = zp_sub(zp_powmod(a, e, f, p), ZP{1}, p);
        ZP g = zp_gcd(f, b, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < n) {
            zp_edf(g, d, p, rng, out);
            zp_edf(zp_divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<ZP> zp_factor(ZP f, std::int64_t p) {
    std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(p));
    std::vector<ZP> out;
    ZP x{0, 1};
    ZP h = x;
    int i = 0;
    Integer pz(static_cast<long>(p));
    while (static_cast<int>(f.size()) - 1 >= 2 * (i + 1)) {
        ++i;
        h = zp_powmod(h, pz, f, p);
        ZP g = zp_gcd(f, zp_sub(h, x, p), p);
        if (g.size() > 1) {
            zp_edf(g, i, p, rng, out);
            f = zp_divrem(f, g, p).first;
            h = zp_divrem(h, f, p).second;
        }
    }
    if (f.size() > 1) out.push_back(zp_monic(f, p));
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z / M.

using ZM = std::vector<Integer>;

Integer mdz(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (sgn(r) < 0) r += m;
    return r;
}

void zm_strip(ZM& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZM zm_mul(const ZM& a, const ZM& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZM r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = mdz(c, m);
    zm_strip(r);
    return r;
}

ZM zm_from_zp(const ZP& a) {
    ZM r;
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

ZP zp_from_zm(const ZM& a, std::int64_t p) {
    ZP r;
    Integer pz(static_cast<long>(p));
    for (const auto& c : a) r.push_back(mdz(c, pz).get_si());
    zp_strip(r);
    return r;
}

// Lifts f = g*h (mod p), g, h monic and coprime mod p, f monic mod M, to mod M = p^k.
std::pair<ZM, ZM> hensel_lift(const ZM& f, const ZP& g0, const ZP& h0, std::int64_t p, const Integer& M) {
    auto [s, t] = zp_bezout(g0, h0, p);
    ZM g = zm_from_zp(g0), h = zm_from_zp(h0);
    Integer pz(static_cast<long>(p));
    for (Integer m = pz; m < M; m *= pz) {
        Integer mp = m * pz;
        ZM gh = zm_mul(g, h, mp);
        ZM e(std::max(f.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = mdz((i < f.size() ? f[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0)), mp) / m;
        ZP ep = zp_from_zm(e, p);
        ZP dg = zp_divrem(zp_mul(t, ep, p), g0, p).second;
        ZP dh = zp_divrem(zp_mul(s, ep, p), h0, p).second;
        for (std::size_t i = 0; i < dg.size(); ++i) g[i] = mdz(g[i] + m * dg[i], mp);
        for (std::size_t i = 0; i < dh.size(); ++i) h[i] = mdz(h[i] + m * dh[i], mp);
    }
    for (auto& c : g) c = mdz(c, M);
    for (auto& c : h) c = mdz(c, M);
    return {g, h};
}

std::vector<ZM> hensel_lift_all(const ZM& f, const std::vector<ZP>& factors, std::int64_t p, const Integer& M) {
    if (factors.size() == 1) {
        ZM r = f;
        for (auto& c : r) c = mdz(c, M);
        return {r};
    }
    ZP rest{1};
    for (std::size_t i = 1; i < factors.size(); ++i) rest = zp_mul(rest, factors[i], p);
    auto [g, h] = hensel_lift(f, factors[0], rest, p, M);
    std::vector<ZP> tail(factors.begin() + 1, factors.end());
    auto lifted = hensel_lift_all(h, tail, p, M);
    lifted.insert(lifted.begin(), g);
    return lifted;
}

Integer content(const ZM& f) {
    Integer g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZM primitive(ZM f) {
    Integer g = content(f);
    if (g != 0 && g != 1)
        for (auto& c : f) c /= g;
    if (!f.empty() && sgn(f.back()) < 0)
        for (auto& c : f) c = -c;
    return f;
}

// Exact division over Z; returns false if b does not divide a.
bool zz_divides(const ZM& a, const ZM& b, ZM& q) {
    ZM r = a;
    zm_strip(r);
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(r.size()) - 1 < db) return false;
    q.assign(r.size() - b.size() + 1, Integer(0));
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        int k = static_cast<int>(r.size()) - 1 - db;
        if (r.back() % b.back() != 0) return false;
        Integer c = r.back() / b.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[i + k] -= c * b[i];
        zm_strip(r);
    }
    return r.empty();
}

const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = [] {
        std::vector<std::int64_t> v;
        for (std::int64_t n = 3; v.size() < 200; n += 2) {
            bool prime = true;
            for (std::int64_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            if (prime) v.push_back(n);
        }
        return v;
    }();
    return primes;
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (f(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// ---------------------------------------------------------------------------

std::vector<UniPoly> factor_squarefree(const UniPoly& f, const Field& K);

std::vector<UniPoly> factor_rational(const UniPoly& f) {
    // Clear denominators.
    Integer den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, c.rational().get_den());
    ZM z;
    for (const auto& c : f.coeffs()) z.push_back(Rational(c.rational() * den).get_num());
    z = primitive(z);
    std::vector<UniPoly> out;
    for (const auto& g : detail::factor_integer_squarefree(z)) {
        Poly p;
        for (const auto& c : g) p.emplace_back(c);
        out.emplace_back(f.var(), dense::monic(p));
    }
    return out;
}

// Lifts an element of level L (or below) to a polynomial in the generator of L.
Poly as_gen_poly(const Elem& e, const LevelPtr& L) {
    if (e.level() == L) return e.coeffs();
    if (e.is_zero()) return {};
    return {e};
}

std::vector<UniPoly> factor_trager(const UniPoly& f, const Field& K) {
    const LevelPtr& L = K.top();
    Field base(L->parent);
    Elem alpha = Elem::generator(L);
    BiPoly m("a", "x");
    for (int i = 0; i <= L->min_degree(); ++i) m.add_term(i, 0, L->minpoly[i]);
    for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, 7L, 8L}) {
        // fs(x) = f(x - s*alpha)
        Poly shifted = dense::compose(f.coeffs(), Poly{-Elem(s) * alpha, Elem(1)});
        BiPoly fs("a", "x");
        for (std::size_t j = 0; j < shifted.size(); ++j) {
            Poly c = as_gen_poly(shifted[j], L);
            for (std::size_t i = 0; i < c.size(); ++i) fs.add_term(static_cast<int>(i), static_cast<int>(j), c[i]);
        }
        UniPoly norm = resultant(m, fs, "a");
        Poly nd = dense::derivative(norm.coeffs());
        if (dense::degree(dense::gcd(norm.coeffs(), nd)) > 0) continue;
        std::vector<UniPoly> out;
        Poly rest = shifted;
        for (const auto& ni : factor_squarefree(norm.monic(), base)) {
            Poly h = dense::gcd(rest, ni.coeffs());
            if (dense::degree(h) < 1) continue;
            rest = dense::exact_div(rest, h);
            out.emplace_back(f.var(), dense::monic(dense::compose(h, Poly{Elem(s) * alpha, Elem(1)})));
        }
        return out;
    }
    throw Error("no admissible shift for the norm computation");
}

std::vector<UniPoly> factor_squarefree(const UniPoly& f, const Field& K) {
    if (f.degree() <= 1) return {f.monic()};
    if (K.is_rational()) return factor_rational(f);
    if (K.top()->kind == LevelKind::transcendental)
        throw Error("factorization over a transcendental extension is not supported");
    if (!K.contains(field_of(f.coeffs()).top() ? Elem::generator(field_of(f.coeffs()).top()) : Elem()))
        throw IncompatibleFields();
    return factor_trager(f, K);
}

}  // namespace

namespace detail {

std::vector<std::vector<Integer>> factor_integer_squarefree(const std::vector<Integer>& f0) {
    ZM f = primitive(f0);
    zm_strip(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    const Integer lc = f.back();

    // Choose a prime among several good ones minimizing the number of modular factors.
    std::int64_t best_p = 0;
    std::vector<ZP> best;
    int tried = 0;
    for (auto p : small_primes()) {
        Integer pz(static_cast<long>(p));
        if (lc % pz == 0) continue;
        ZP fp = zp_monic(zp_from_zm(f, p), p);
        if (static_cast<int>(fp.size()) - 1 != n) continue;
        if (zp_gcd(fp, zp_derivative(fp, p), p).size() != 1) continue;
        auto fac = zp_factor(fp, p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1 || ++tried >= 5) break;
    }
    if (best_p == 0) throw Error("no suitable prime for factorization");
    if (best.size() == 1) return {f};

    // Coefficient bound for factors of f times lc.
    Integer maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
    Integer bound = 2 * abs(lc) * maxc * (n + 1);
    bound <<= n;
    Integer pz(static_cast<long>(best_p));
    Integer M = pz;
    while (M <= bound) M *= pz;

    // Monic image of f mod M.
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZM fm(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fm[i] = mdz(f[i] * lcinv, M);
    std::vector<ZM> lifted = hensel_lift_all(fm, best, best_p, M);

    std::vector<std::vector<Integer>> out;
    ZM rest = f;
    Integer half = M / 2;
    int s = 1;
    while (2 * s <= static_cast<int>(lifted.size())) {
        bool found = false;
        for_each_subset(static_cast<int>(lifted.size()), s, [&](const std::vector<int>& idx) {
            ZM cand{rest.back()};
            for (int i : idx) cand = zm_mul(cand, lifted[i], M);
            for (auto& c : cand)
                if (c > half) c -= M;
            cand = primitive(cand);
            ZM q;
            if (!zz_divides(rest, cand, q)) return false;
            out.push_back(cand);
            rest = primitive(q);
            std::vector<ZM> remaining;
            for (int i = 0; i < static_cast<int>(lifted.size()); ++i)
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
            lifted = std::move(remaining);
            found = true;
            return true;
        });
        if (!found) ++s;
    }
    if (rest.size() > 1) out.push_back(rest);
    return out;
}

}  // namespace detail

std::vector<Factor> factor_univariate(const UniPoly& f, const Field& K) {
    if (f.is_zero()) throw Error("cannot factor the zero polynomial");
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    for (const auto& [part, mult] : dense::squarefree(f.coeffs()))
        for (auto& g : factor_squarefree(UniPoly(f.var(), part), K)) out.push_back({g, mult});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        const auto& ca = a.poly.coeffs();
        const auto& cb = b.poly.coeffs();
        for (std::size_t i = ca.size(); i-- > 0;) {
            int c = compare(ca[i], cb[i]);
            if (c) return c > 0;  // linear factors x - r: larger constant term means smaller root
        }
        return false;
    });
    return out;
}

bool is_irreducible(const UniPoly& f, const Field& K) {
    if (f.degree() < 1) return false;
    auto fac = factor_univariate(f, K);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

std::vector<RootClass> roots_in_closure(const UniPoly& f, const Field& K) {
    if (f.is_zero() || f.degree() < 1) throw Error("roots_in_closure needs a non-constant polynomial");
    Field base = K.join(f.field());
    std::vector<RootClass> out;
    for (const auto& fac : factor_univariate(f, base)) {
        RootClass rc;
        rc.multiplicity = fac.multiplicity;
        rc.minpoly = fac.poly;
        auto [field, root] = base.adjoin_root(fac.poly.coeffs());
        rc.field = field;
        rc.root = root;
        out.push_back(std::move(rc));
    }
    return out;
}

std::pair<Field, Elem> adjoin_checked(const Field& K, const UniPoly& minpoly) {
    Field base = K.join(minpoly.field());
    auto fac = factor_univariate(minpoly, base);
    if (fac.empty()) throw Error("cannot adjoin a root of a constant");
    if (fac.size() > 1 || fac[0].multiplicity > 1) throw ReducibleModulus(base.top(), fac[0].poly.coeffs());
    return base.adjoin_root(minpoly.coeffs());
}

}  // namespace aode
