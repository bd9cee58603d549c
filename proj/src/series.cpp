#include "aode/series.hpp"

#include <algorithm>
#include <numeric>

namespace aode {

namespace {

Rational ex(long k, long n) {
    Rational r(k, n);
    r.canonicalize();
    return r;
}

// Smallest integer key k with k/n >= T.
long key_ceil(const Rational& T, long n) {
    Rational v = T * n;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q.get_si();
}

std::string exponent_text(const std::string& var, const Rational& e) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (e.get_den() == 1 && sgn(e) > 0) return var + "^" + e.get_str();
    return var + "^(" + e.get_str() + ")";
}

}  // namespace

std::optional<Rational> min_known(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Series::Series(Terms c, long n, std::optional<Rational> T, Point pt) : c_(std::move(c)), n_(n), T_(std::move(T)), pt_(pt) {
    if (n_ <= 0) throw Error("ramification must be positive");
    normalize();
}

Series Series::constant(const Elem& c, std::optional<Rational> T) { return Series({{0, c}}, 1, std::move(T)); }

Series Series::monomial(const Elem& c, long k, long n, std::optional<Rational> T) { return Series({{k, c}}, n, std::move(T)); }

Series Series::zero(std::optional<Rational> T, Point pt) { return Series({}, 1, std::move(T), pt); }

void Series::normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero() || (T_ && ex(it->first, n_) >= *T_))
            it = c_.erase(it);
        else
            ++it;
    }
    long g = n_;
    for (const auto& [k, c] : c_) g = std::gcd(g, k);
    if (c_.empty()) g = n_;
    if (g > 1) {
        Terms r;
        for (auto& [k, c] : c_) r.emplace(k / g, std::move(c));
        c_ = std::move(r);
        n_ /= g;
    }
}

Series Series::at(Point pt) const {
    Series r = *this;
    r.pt_ = pt;
    return r;
}

std::optional<Rational> Series::order() const {
    if (c_.empty()) {
        if (T_) throw OrderUnknown(*T_);
        return std::nullopt;
    }
    return ex(c_.begin()->first, n_);
}

std::optional<Rational> Series::valuation_bound() const {
    if (c_.empty()) return T_;
    return ex(c_.begin()->first, n_);
}

Elem Series::coeff(const Rational& e) const {
    if (T_ && e >= *T_) throw OrderUnknown(*T_);
    Rational k = e * n_;
    if (k.get_den() != 1) return Elem();
    auto it = c_.find(k.get_num().get_si());
    return it == c_.end() ? Elem() : it->second;
}

Elem Series::leading_coeff() const {
    if (c_.empty()) throw Error("leading coefficient of a zero series");
    return c_.begin()->second;
}

Series::Terms Series::terms_on(long m) const {
    if (m % n_) throw Error("ramification does not divide the target lattice");
    long f = m / n_;
    Terms r;
    for (const auto& [k, c] : c_) r.emplace(k * f, c);
    return r;
}

Series Series::truncate(const Rational& T) const { return Series(c_, n_, min_known(T_, T), pt_); }

Series Series::ramify(long m) const {
    std::optional<Rational> T;
    if (T_) T = *T_ / m;
    return Series(c_, n_ * m, T, pt_);
}

Series Series::map_coeffs(const std::function<Elem(const Elem&)>& f) const {
    Terms r;
    for (const auto& [k, c] : c_) r.emplace(k, f(c));
    return Series(std::move(r), n_, T_, pt_);
}

Series operator+(const Series& a, const Series& b) {
    long m = std::lcm(a.n_, b.n_);
    Series::Terms r = a.terms_on(m);
    for (const auto& [k, c] : b.terms_on(m)) {
        auto [it, inserted] = r.try_emplace(k, c);
        if (!inserted) it->second += c;
    }
    return Series(std::move(r), m, min_known(a.T_, b.T_), a.pt_);
}

Series Series::operator-() const {
    Terms r;
    for (const auto& [k, c] : c_) r.emplace(k, -c);
    return Series(std::move(r), n_, T_, pt_);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Elem& c) {
    if (c.is_zero()) return Series::zero(a.T_ ? std::optional<Rational>(*a.T_ + 0) : std::nullopt, a.pt_);
    return a.map_coeffs([&](const Elem& x) { return x * c; });
}

Series operator*(const Series& a, const Series& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Series::zero(std::nullopt, a.pt_);
    std::optional<Rational> T;
    if (a.T_) T = *a.T_ + *b.valuation_bound();
    if (b.T_) T = min_known(T, *b.T_ + *a.valuation_bound());
    long m = std::lcm(a.n_, b.n_);
    Series::Terms ta = a.terms_on(m), tb = b.terms_on(m), r;
    long limit = T ? key_ceil(*T, m) : 0;
    for (const auto& [ka, ca] : ta)
        for (const auto& [kb, cb] : tb) {
            if (T && ka + kb >= limit) break;
            auto [it, inserted] = r.try_emplace(ka + kb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    return Series(std::move(r), m, T, a.pt_);
}

bool operator==(const Series& a, const Series& b) { return a.n_ == b.n_ && a.c_ == b.c_ && a.T_ == b.T_; }

Series Series::inverse(const Rational& cap) const {
    if (is_exact_zero()) throw DivisionByZero();
    Rational v = *order();
    long k0 = c_.begin()->first;
    Elem inv = c_.begin()->second.inverse();
    if (c_.size() == 1 && !T_) return Series({{-k0, inv}}, n_, std::nullopt, pt_);
    Rational Tres = T_ ? std::min(Rational(*T_ - 2 * v), cap) : cap;
    // s = a0 x^v (1 + u); relative keys j >= 0.
    long count = key_ceil(Tres + v, n_);
    std::vector<Elem> a(std::max<long>(count, 1)), b(std::max<long>(count, 1));
    for (const auto& [k, c] : c_)
        if (k - k0 < count) a[k - k0] = c;
    for (long j = 0; j < count; ++j) {
        if (j == 0) {
            b[0] = inv;
            continue;
        }
        Elem acc;
        for (long i = 1; i <= j; ++i)
            if (!a[i].is_zero()) acc += a[i] * b[j - i];
        b[j] = -acc * inv;
    }
    Terms r;
    for (long j = 0; j < count; ++j) r.emplace(j - k0, b[j]);
    return Series(std::move(r), n_, Tres, pt_);
}

Series Series::pow(long e, const Rational& cap) const {
    if (e < 0) {
        Rational v = *order();
        Rational extra = v > 0 ? Rational(v * (-e - 1)) : Rational(0);
        return inverse(cap + extra).pow(-e, cap);
    }
    Series r = constant(Elem(1)).at(pt_);
    if (e == 0) return r;
    auto vb = valuation_bound();
    Rational neg = vb && *vb < 0 ? Rational(-*vb) : Rational(0);
    for (long i = 1; i <= e; ++i) r = (r * *this).truncate(cap + neg * (e - i));
    return r;
}

Series Series::derivative() const {
    Terms r;
    for (const auto& [k, c] : c_)
        if (k != 0) r.emplace(k - n_, c * Elem(ex(k, n_)));
    std::optional<Rational> T;
    if (T_) T = *T_ - 1;
    return Series(std::move(r), n_, T, pt_);
}

std::string Series::str(const std::string& var, const NameFn& name) const {
    std::vector<std::pair<Elem, std::string>> terms;
    for (const auto& [k, c] : c_) terms.emplace_back(c, exponent_text(var, ex(k, n_)));
    std::string out = c_.empty() && T_ ? std::string() : render_sum(terms, name);
    if (T_) {
        std::string o = "O(" + (*T_ == 0 ? std::string("1") : exponent_text(var, *T_)) + ")";
        out = out.empty() ? o : out + " + " + o;
    }
    return out;
}

Series substitute_poly(const BiPoly& f, const Series& ys, const Series& ps, const Rational& cap) {
    int dy = std::max(f.degree(0), 0), dp = std::max(f.degree(1), 0);
    auto neg = [](const Series& s) {
        auto v = s.valuation_bound();
        return v && *v < 0 ? Rational(-*v) : Rational(0);
    };
    Rational work = cap + neg(ys) * dy + neg(ps) * dp;
    std::vector<Series> yp{Series::constant(Elem(1))}, pp{Series::constant(Elem(1))};
    for (int i = 1; i <= dy; ++i) yp.push_back((yp.back() * ys).truncate(work));
    for (int j = 1; j <= dp; ++j) pp.push_back((pp.back() * ps).truncate(work));
    Series acc = Series::zero();
    for (const auto& [e, c] : f.terms()) acc = acc + yp[e.first] * pp[e.second] * c;
    return acc.truncate(cap).at(ys.point());
}

Series compose(const Series& a, const Series& s, const Rational& cap) {
    if (a.ramification() != 1) throw Error("compose needs an outer series with integer exponents");
    if (s.is_exact_zero()) throw Error("compose with the zero series");
    Rational os = *s.order();
    if (os < 1) throw Error("compose needs an inner series of order at least 1");
    if (a.is_exact_zero()) return Series::zero(std::nullopt, s.point());
    std::optional<Rational> T;
    if (a.known()) T = *a.known() * os;
    long kmin = 0, kmax = 0;
    bool any = false;
    for (const auto& [k, c] : a.terms()) {
        if (!any) kmin = k;
        kmax = k;
        any = true;
    }
    if (a.terms().empty()) return Series::zero(T, s.point());
    if (s.known()) {
        for (const auto& [k, c] : a.terms())
            if (k != 0) {
                T = min_known(T, Rational((k - 1) * os + *s.known()));
                break;
            }
    }
    if (!(a.exact() && s.exact() && kmin >= 0)) T = min_known(T, cap);
    Series acc = Series::zero(T, s.point());
    auto add = [&](long k, const Series& pk) {
        auto it = a.terms().find(k);
        if (it != a.terms().end()) acc = acc + pk * it->second;
    };
    Rational lim = T ? *T : Rational(0);
    for (long k = kmin; k < 0 && k <= kmax; ++k) {
        if (!a.terms().count(k)) continue;
        Series inv = s.inverse(lim + (-k - 1) * os);
        add(k, inv.pow(-k, lim));
    }
    Series pk = Series::constant(Elem(1)).at(s.point());
    for (long k = 0; k <= kmax; ++k) {
        if (k > 0) pk = T ? (pk * s).truncate(*T) : pk * s;
        if (k >= kmin) add(k, pk);
    }
    return T ? acc.truncate(*T) : acc;
}

}  // namespace aode
