#include "aode/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "aode/dense.hpp"

namespace aode {

namespace {

std::atomic<std::uint64_t> g_serial{1};
std::atomic<std::size_t> g_max_tower{64};

using dense::Poly;

Poly poly_at(const Elem& x, const LevelPtr& level) {
    if (x.level() == level) return x.coeffs();
    if (x.is_zero()) return {};
    return {x};
}

std::pair<Poly, Poly> frac_at(const Elem& x, const LevelPtr& level) {
    if (x.level() == level) return {x.coeffs(), x.denominator()};
    if (x.is_zero()) return {{}, {Elem(1)}};
    return {{x}, {Elem(1)}};
}

std::string default_name(const FieldLevel& level) {
    if (!level.name.empty()) return level.name;
    return "_g" + std::to_string(level.serial);
}

// Renders sum of coef*monomial, highest first.
std::string render_terms(const std::vector<std::pair<Elem, std::string>>& terms,
                         const std::function<std::string(const FieldLevel&)>& name) {
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
        }
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string render_poly(const Poly& p, const std::string& var,
                        const std::function<std::string(const FieldLevel&)>& name) {
    std::vector<std::pair<Elem, std::string>> terms;
    for (int i = dense::degree(p); i >= 0; --i) {
        if (p[i].is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        terms.emplace_back(p[i], mono);
    }
    return render_terms(terms, name);
}

}  // namespace

std::string to_string(const Rational& q) {
    return q.get_str();
}

ReducibleModulus::ReducibleModulus(LevelPtr lv, std::vector<Elem> f)
    : Error("adjoined polynomial is reducible"), level(std::move(lv)), factor(std::move(f)) {}

std::size_t max_tower_degree() { return g_max_tower.load(); }
void set_max_tower_degree(std::size_t cap) { g_max_tower.store(cap); }

bool is_ancestor(const LevelPtr& below, const LevelPtr& above) {
    if (!below) return true;
    const FieldLevel* p = above.get();
    while (p && p->depth > below->depth) p = p->parent.get();
    return p == below.get();
}

LevelPtr join(const LevelPtr& a, const LevelPtr& b) {
    if (a == b) return a;
    if (!a) return b;
    if (!b) return a;
    if (a->depth <= b->depth) {
        if (is_ancestor(a, b)) return b;
    } else if (is_ancestor(b, a)) {
        return a;
    }
    throw IncompatibleFields();
}

const Rational& Elem::rational() const {
    if (level_) throw Error("element is not rational");
    return q_;
}

Elem Elem::generator(const LevelPtr& level) {
    assert(level);
    if (level->kind == LevelKind::algebraic) return normalize_alg(level, {Elem(), Elem(1)});
    return normalize_tr(level, {Elem(), Elem(1)}, {Elem(1)});
}

Elem Elem::from_poly(const LevelPtr& level, std::vector<Elem> coeffs) {
    if (!level) {
        dense::strip(coeffs);
        if (coeffs.size() > 1) throw Error("polynomial over Q has no tower level");
        return coeffs.empty() ? Elem() : coeffs[0];
    }
    if (level->kind == LevelKind::transcendental) return normalize_tr(level, std::move(coeffs), {Elem(1)});
    return normalize_alg(level, std::move(coeffs));
}

Elem Elem::fraction(const LevelPtr& level, std::vector<Elem> num, std::vector<Elem> den) {
    if (!level || level->kind != LevelKind::transcendental) throw Error("fraction needs a transcendental level");
    return normalize_tr(level, std::move(num), std::move(den));
}

Elem Elem::normalize_alg(const LevelPtr& level, std::vector<Elem> c) {
    dense::strip(c);
    if (static_cast<int>(c.size()) > level->min_degree()) c = dense::rem(c, level->minpoly);
    if (c.empty()) return {};
    if (c.size() == 1) return c[0];
    Elem r;
    r.level_ = level;
    r.num_ = std::move(c);
    return r;
}

Elem Elem::normalize_tr(const LevelPtr& level, std::vector<Elem> n, std::vector<Elem> d) {
    dense::strip(n);
    dense::strip(d);
    if (d.empty()) throw DivisionByZero();
    if (n.empty()) return {};
    if (d.size() > 1) {
        Poly g = dense::gcd(n, d);
        if (dense::degree(g) > 0) {
            n = dense::exact_div(n, g);
            d = dense::exact_div(d, g);
        }
    }
    Elem lc = dense::lead(d);
    if (!lc.is_one()) {
        Elem inv = lc.inverse();
        n = dense::scale(n, inv);
        d = dense::scale(d, inv);
    }
    if (d.size() == 1 && n.size() == 1) return n[0];
    Elem r;
    r.level_ = level;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

Elem Elem::operator-() const {
    if (!level_) return Elem(Rational(-q_));
    Elem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

Elem operator+(const Elem& a, const Elem& b) {
    if (!a.level_ && !b.level_) return Elem(Rational(a.q_ + b.q_));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LevelPtr L = join(a.level_, b.level_);
    if (L->kind == LevelKind::algebraic) return Elem::normalize_alg(L, dense::add(poly_at(a, L), poly_at(b, L)));
    auto [na, da] = frac_at(a, L);
    auto [nb, db] = frac_at(b, L);
    if (da == db) return Elem::normalize_tr(L, dense::add(na, nb), da);
    return Elem::normalize_tr(L, dense::add(dense::mul(na, db), dense::mul(nb, da)), dense::mul(da, db));
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
    if (!a.level_ && !b.level_) return Elem(Rational(a.q_ * b.q_));
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    LevelPtr L = join(a.level_, b.level_);
    if (L->kind == LevelKind::algebraic) {
        if (a.level_ != L) return Elem::normalize_alg(L, dense::scale(b.num_, a));
        if (b.level_ != L) return Elem::normalize_alg(L, dense::scale(a.num_, b));
        return Elem::normalize_alg(L, dense::mul(a.num_, b.num_));
    }
    auto [na, da] = frac_at(a, L);
    auto [nb, db] = frac_at(b, L);
    return Elem::normalize_tr(L, dense::mul(na, nb), dense::mul(da, db));
}

Elem operator/(const Elem& a, const Elem& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (!a.level_ && !b.level_) return Elem(Rational(a.q_ / b.q_));
    return a * b.inverse();
}

Elem Elem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!level_) return Elem(Rational(1 / q_));
    if (level_->kind == LevelKind::transcendental) return normalize_tr(level_, den_, num_);
    dense::Xgcd x = dense::xgcd(num_, level_->minpoly);
    if (dense::degree(x.g) > 0) throw ReducibleModulus(level_, x.g);
    return normalize_alg(level_, x.s);
}

Elem Elem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Elem result(1);
    Elem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Elem& a, const Elem& b) {
    if (a.level_ != b.level_) return false;
    if (!a.level_) return a.q_ == b.q_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

int compare(const Elem& a, const Elem& b) {
    if (a.is_rational() && b.is_rational()) return cmp(a.rational(), b.rational()) < 0 ? -1 : (a == b ? 0 : 1);
    if (a.is_rational()) return -1;
    if (b.is_rational()) return 1;
    if (a.level() != b.level()) {
        if (a.level()->depth != b.level()->depth) return a.level()->depth < b.level()->depth ? -1 : 1;
        return a.level()->serial < b.level()->serial ? -1 : 1;
    }
    auto cmp_vec = [](const Poly& x, const Poly& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = x.size(); i-- > 0;) {
            int c = compare(x[i], y[i]);
            if (c) return c;
        }
        return 0;
    };
    int c = cmp_vec(a.coeffs(), b.coeffs());
    return c ? c : cmp_vec(a.denominator(), b.denominator());
}

std::string Elem::str(const std::function<std::string(const FieldLevel&)>& name) const {
    if (!level_) return to_string(q_);
    auto nm = name ? name : default_name;
    std::string g = nm(*level_);
    if (level_->kind == LevelKind::algebraic) return render_poly(num_, g, nm);
    if (den_.size() == 1 && den_[0].is_one()) return render_poly(num_, g, nm);
    return "(" + render_poly(num_, g, nm) + ")/(" + render_poly(den_, g, nm) + ")";
}

std::vector<LevelPtr> Field::levels() const {
    std::vector<LevelPtr> out;
    for (LevelPtr p = top_; p; p = p->parent) out.push_back(p);
    std::reverse(out.begin(), out.end());
    return out;
}

bool Field::has_transcendental() const {
    for (const FieldLevel* p = top_.get(); p; p = p->parent.get())
        if (p->kind == LevelKind::transcendental) return true;
    return false;
}

std::pair<Field, Elem> Field::adjoin_root(std::vector<Elem> minpoly, std::string name) const {
    dense::strip(minpoly);
    if (minpoly.size() < 2) throw Error("cannot adjoin a root of a constant polynomial");
    for (const auto& c : minpoly)
        if (!contains(c)) throw IncompatibleFields();
    minpoly = dense::monic(minpoly);
    if (minpoly.size() == 2) return {*this, -minpoly[0]};
    auto level = std::make_shared<FieldLevel>();
    level->parent = top_;
    level->kind = LevelKind::algebraic;
    level->auto_name = name.empty();
    level->name = std::move(name);
    level->depth = depth() + 1;
    level->degree = degree() * (minpoly.size() - 1);
    if (level->degree > max_tower_degree()) throw TowerLimit(level->degree);
    level->minpoly = std::move(minpoly);
    level->serial = g_serial.fetch_add(1);
    LevelPtr lp = level;
    return {Field(lp), Elem::generator(lp)};
}

std::pair<Field, Elem> Field::adjoin_symbol(std::string name) const {
    auto level = std::make_shared<FieldLevel>();
    level->parent = top_;
    level->kind = LevelKind::transcendental;
    level->auto_name = false;
    level->name = std::move(name);
    level->depth = depth() + 1;
    level->degree = degree();
    level->serial = g_serial.fetch_add(1);
    LevelPtr lp = level;
    return {Field(lp), Elem::generator(lp)};
}

Field field_of(const Elem& e) { return Field(e.level()); }

Field field_of(const std::vector<Elem>& elems) {
    LevelPtr top;
    for (const auto& e : elems) top = join(top, e.level());
    return Field(top);
}

void Embedding::map(const LevelPtr& level, Elem image) {
    for (auto& [l, img] : images_)
        if (l == level) {
            img = std::move(image);
            return;
        }
    images_.emplace_back(level, std::move(image));
}

bool Embedding::maps(const LevelPtr& level) const {
    return std::any_of(images_.begin(), images_.end(), [&](const auto& p) { return p.first == level; });
}

Elem Embedding::operator()(const Elem& e) const {
    if (e.is_rational()) return e;
    const LevelPtr& L = e.level();
    Elem g;
    bool found = false;
    for (const auto& [l, img] : images_)
        if (l == L) {
            g = img;
            found = true;
        }
    if (!found) g = Elem::generator(L);
    auto horner = [&](const Poly& p) {
        Elem acc;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * g + (*this)(p[i]);
        return acc;
    };
    if (L->kind == LevelKind::algebraic) return horner(e.coeffs());
    Elem d = horner(e.denominator());
    if (d.is_zero()) throw DivisionByZero();
    return horner(e.coeffs()) / d;
}

}  // namespace aode
