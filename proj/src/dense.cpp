#include "aode/dense.hpp"

#include <algorithm>

namespace aode::dense {

void strip(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size())
            r[i] = a[i] + b[i];
        else if (i < a.size())
            r[i] = a[i];
        else
            r[i] = b[i];
    }
    strip(r);
    return r;
}

Poly neg(const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    strip(r);
    return r;
}

Poly scale(const Poly& a, const Elem& c) {
    if (c.is_zero()) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    strip(r);
    return r;
}

Poly shift(const Poly& a, int k) {
    if (a.empty()) return {};
    Poly r(k, Elem());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

Poly pow(const Poly& a, int e) {
    Poly result{Elem(1)};
    Poly base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Elem(static_cast<long>(i));
    strip(r);
    return r;
}

Poly monic(const Poly& a) {
    if (a.empty() || lead(a).is_one()) return a;
    return scale(a, lead(a).inverse());
}

Elem eval(const Poly& a, const Elem& x) {
    Elem acc;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

Poly compose(const Poly& a, const Poly& b) {
    Poly acc;
    for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, b), a[i].is_zero() ? Poly{} : Poly{a[i]});
    return acc;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero();
    Poly r = a;
    strip(r);
    int db = degree(b);
    if (degree(r) < db) return {{}, r};
    Poly q(r.size() - b.size() + 1);
    Elem inv = lead(b).inverse();
    while (!r.empty() && degree(r) >= db) {
        int k = degree(r) - db;
        Elem c = lead(r) * inv;
        q[k] = c;
        for (int i = 0; i < db; ++i)
            if (!b[i].is_zero()) r[i + k] -= c * b[i];
        r.pop_back();
        strip(r);
    }
    strip(q);
    return {q, r};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.empty()) throw Error("inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    strip(x);
    strip(y);
    while (!y.empty()) {
        Poly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    strip(r0);
    strip(r1);
    Poly s0{Elem(1)}, s1{}, t0{}, t1{Elem(1)};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {{}, {}, {}};
    Elem inv = lead(r0).inverse();
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& a) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic(a);
    if (degree(f) < 1) return out;
    Poly fp = derivative(f);
    Poly g = gcd(f, fp);
    Poly w = exact_div(f, g);
    Poly y = exact_div(fp, g);
    Poly z = sub(y, derivative(w));
    int i = 1;
    while (degree(w) > 0) {
        Poly h = gcd(w, z);
        if (degree(h) > 0) out.emplace_back(h, i);
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = sub(y, derivative(w));
        ++i;
    }
    return out;
}

Elem resultant(const Poly& a0, const Poly& b0) {
    Poly a = a0, b = b0;
    strip(a);
    strip(b);
    if (a.empty() || b.empty()) return {};
    Elem res(1);
    while (true) {
        int da = degree(a), db = degree(b);
        if (db == 0) return res * lead(b).pow(da);
        if (da < db) {
            if ((da % 2) && (db % 2)) res = -res;
            std::swap(a, b);
            continue;
        }
        Poly r = rem(a, b);
        if (r.empty()) return {};
        // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        int dr = degree(r);
        if ((da % 2) && (db % 2)) res = -res;
        res *= lead(b).pow(da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace aode::dense
