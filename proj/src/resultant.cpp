#include "aode/resultant.hpp"

#include <utility>

namespace aode {

namespace {

using dense::Poly;
using DPoly = std::vector<Poly>;  // coefficients in K[z], indexed by power of the main variable

void strip(DPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const DPoly& p) { return static_cast<int>(p.size()) - 1; }

DPoly to_dpoly(const BiPoly& f, int which) {
    DPoly out;
    for (const auto& u : f.as_poly_in(which)) out.push_back(u.coeffs());
    strip(out);
    return out;
}

DPoly scale(const DPoly& a, const Poly& c) {
    DPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dense::mul(a[i], c);
    strip(r);
    return r;
}

DPoly divide_exact(const DPoly& a, const Poly& c) {
    DPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dense::exact_div(a[i], c);
    return r;
}

DPoly prem(const DPoly& a, const DPoly& b) {
    int n = deg(b);
    DPoly r = a;
    int e = deg(a) - n + 1;
    if (e <= 0) return r;
    const Poly& lc = b.back();
    while (!r.empty() && deg(r) >= n) {
        int k = deg(r) - n;
        Poly t = r.back();
        for (auto& c : r) c = dense::mul(c, lc);
        for (int i = 0; i <= n; ++i) r[i + k] = dense::sub(r[i + k], dense::mul(t, b[i]));
        strip(r);
        --e;
    }
    if (e > 0) r = scale(r, dense::pow(lc, e));
    return r;
}

}  // namespace

UniPoly resultant(const BiPoly& f, const BiPoly& g, const std::string& var) {
    int which = f.index_of(var);
    std::string other = f.vars()[1 - which];
    DPoly a = to_dpoly(f, which);
    DPoly b = to_dpoly(g, which);
    if (a.empty() || b.empty()) return UniPoly(other);
    Poly s{Elem(1)};
    if (deg(a) < deg(b)) {
        if ((deg(a) % 2) && (deg(b) % 2)) s = {Elem(-1)};
        std::swap(a, b);
    }
    if (deg(b) == 0) return UniPoly(other, dense::mul(s, dense::pow(b[0], deg(a))));
    Poly g_{Elem(1)}, h{Elem(1)};
    while (true) {
        int delta = deg(a) - deg(b);
        if ((deg(a) % 2) && (deg(b) % 2)) s = dense::neg(s);
        DPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return UniPoly(other);
        b = divide_exact(r, dense::mul(g_, dense::pow(h, delta)));
        g_ = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g_;
        } else {
            h = dense::exact_div(dense::pow(g_, delta), dense::pow(h, delta - 1));
        }
        if (deg(b) == 0) {
            int da = deg(a);
            Poly hh;
            if (da == 0)
                hh = h;
            else if (da == 1)
                hh = b[0];
            else
                hh = dense::exact_div(dense::pow(b[0], da), dense::pow(h, da - 1));
            return UniPoly(other, dense::mul(s, hh));
        }
    }
}

BiPoly pseudo_remainder(const BiPoly& f, const BiPoly& g, const std::string& var) {
    int which = f.index_of(var);
    DPoly r = prem(to_dpoly(f, which), to_dpoly(g, which));
    std::vector<UniPoly> coeffs;
    for (auto& c : r) coeffs.emplace_back(f.vars()[1 - which], std::move(c));
    return BiPoly::from_poly_in(f, which, coeffs);
}

}  // namespace aode
