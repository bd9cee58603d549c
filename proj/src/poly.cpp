#include "aode/poly.hpp"

#include <algorithm>

namespace aode {

std::string render_sum(const std::vector<std::pair<Elem, std::string>>& terms, const NameFn& name) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        bool negative = false;
        std::string body;
        if (c.is_rational()) {
            Rational q = c.rational();
            if (sgn(q) < 0) {
                negative = true;
                q = -q;
            }
            if (mono.empty())
                body = to_string(q);
            else if (q == 1)
                body = mono;
            else
                body = to_string(q) + "*" + mono;
        } else {
            std::string inner = c.str(name);
            body = mono.empty() ? inner : "(" + inner + ")*" + mono;
            if (mono.empty() && !first) body = "(" + inner + ")";
        }
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {
std::string power(const std::string& v, int k) {
    if (k == 0) return "";
    if (k == 1) return v;
    return v + "^" + std::to_string(k);
}
}  // namespace

UniPoly::UniPoly(std::string var, dense::Poly coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
    dense::strip(c_);
}

UniPoly UniPoly::constant(std::string var, const Elem& c) { return UniPoly(std::move(var), {c}); }

UniPoly UniPoly::monomial(std::string var, const Elem& c, int k) {
    dense::Poly p(k + 1);
    p[k] = c;
    return UniPoly(std::move(var), std::move(p));
}

std::string UniPoly::str(const NameFn& name) const {
    std::vector<std::pair<Elem, std::string>> terms;
    for (int i = degree(); i >= 0; --i)
        if (!c_[i].is_zero()) terms.emplace_back(c_[i], power(var_, i));
    return render_sum(terms, name);
}

BiPoly BiPoly::constant(const BiPoly& like, const Elem& c) {
    BiPoly r(like.vars_[0], like.vars_[1]);
    r.add_term(0, 0, c);
    return r;
}

BiPoly BiPoly::var(const BiPoly& like, int which) {
    BiPoly r(like.vars_[0], like.vars_[1]);
    r.add_term(which == 0 ? 1 : 0, which == 1 ? 1 : 0, Elem(1));
    return r;
}

int BiPoly::index_of(const std::string& v) const {
    if (v == vars_[0]) return 0;
    if (v == vars_[1]) return 1;
    throw Error("unknown variable " + v);
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Elem BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Elem() : it->second;
}

void BiPoly::add_term(int i, int j, const Elem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree(int which) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, which == 0 ? e.first : e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

Field BiPoly::field() const {
    LevelPtr top;
    for (const auto& [e, c] : terms_) top = join(top, c.level());
    return Field(top);
}

UniPoly BiPoly::coeff_in(int which, int k) const {
    dense::Poly p;
    for (const auto& [e, c] : terms_) {
        int mine = which == 0 ? e.first : e.second;
        int other = which == 0 ? e.second : e.first;
        if (mine != k) continue;
        if (static_cast<int>(p.size()) <= other) p.resize(other + 1);
        p[other] = c;
    }
    return UniPoly(vars_[1 - which], std::move(p));
}

std::vector<UniPoly> BiPoly::as_poly_in(int which) const {
    int d = degree(which);
    std::vector<dense::Poly> raw(std::max(d + 1, 0));
    for (const auto& [e, c] : terms_) {
        int mine = which == 0 ? e.first : e.second;
        int other = which == 0 ? e.second : e.first;
        auto& p = raw[mine];
        if (static_cast<int>(p.size()) <= other) p.resize(other + 1);
        p[other] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.emplace_back(vars_[1 - which], std::move(p));
    return out;
}

BiPoly BiPoly::from_poly_in(const BiPoly& like, int which, const std::vector<UniPoly>& coeffs) {
    BiPoly r(like.vars_[0], like.vars_[1]);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (int o = 0; o <= coeffs[k].degree(); ++o) {
            const Elem& c = coeffs[k].coeffs()[o];
            if (which == 0)
                r.add_term(static_cast<int>(k), o, c);
            else
                r.add_term(o, static_cast<int>(k), c);
        }
    return r;
}

UniPoly BiPoly::eval(int which, const Elem& value) const {
    auto coeffs = as_poly_in(which);
    UniPoly acc(vars_[1 - which]);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * UniPoly::constant(vars_[1 - which], value) + coeffs[k];
    return acc;
}

BiPoly BiPoly::partial(int which) const {
    BiPoly r(vars_[0], vars_[1]);
    for (const auto& [e, c] : terms_) {
        int k = which == 0 ? e.first : e.second;
        if (k == 0) continue;
        if (which == 0)
            r.add_term(e.first - 1, e.second, c * Elem(static_cast<long>(k)));
        else
            r.add_term(e.first, e.second - 1, c * Elem(static_cast<long>(k)));
    }
    return r;
}

BiPoly BiPoly::translate(int which, const Elem& s) const {
    if (s.is_zero()) return *this;
    BiPoly lin = var(*this, which) + constant(*this, s);
    int d = degree(which);
    std::vector<BiPoly> pows{constant(*this, Elem(1))};
    for (int k = 1; k <= d; ++k) pows.push_back(pows.back() * lin);
    BiPoly r(vars_[0], vars_[1]);
    for (const auto& [e, c] : terms_) {
        int k = which == 0 ? e.first : e.second;
        BiPoly mono(vars_[0], vars_[1]);
        mono.add_term(which == 0 ? 0 : e.first, which == 0 ? e.second : 0, c);
        r = r + mono * pows[k];
    }
    return r;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r(vars_[1], vars_[0]);
    for (const auto& [e, c] : terms_) r.add_term(e.second, e.first, c);
    return r;
}

BiPoly BiPoly::renamed(std::string v0, std::string v1) const {
    BiPoly r = *this;
    r.vars_ = {std::move(v0), std::move(v1)};
    return r;
}

BiPoly BiPoly::map_coeffs(const std::function<Elem(const Elem&)>& f) const {
    BiPoly r(vars_[0], vars_[1]);
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, f(c));
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.vars_[0], a.vars_[1]);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly operator*(const BiPoly& a, const Elem& c) {
    BiPoly r(a.vars_[0], a.vars_[1]);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.add_term(e.first, e.second, x * c);
    return r;
}

BiPoly BiPoly::pow(int e) const {
    BiPoly result = constant(*this, Elem(1));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string BiPoly::str(const NameFn& name) const {
    // Highest total degree first, then by descending power of var0.
    std::vector<std::pair<Exp, Elem>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        int tx = x.first.first + x.first.second, ty = y.first.first + y.first.second;
        if (tx != ty) return tx > ty;
        return x.first.second > y.first.second;
    });
    std::vector<std::pair<Elem, std::string>> terms;
    for (const auto& [e, c] : sorted) {
        std::string mono = power(vars_[1], e.second);
        std::string m0 = power(vars_[0], e.first);
        if (!m0.empty()) mono = mono.empty() ? m0 : mono + "*" + m0;
        terms.emplace_back(c, mono);
    }
    return render_sum(terms, name);
}

}  // namespace aode
