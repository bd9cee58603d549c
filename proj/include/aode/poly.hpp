// Univariate and sparse bivariate polynomials over tower elements.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aode/dense.hpp"
#include "aode/field.hpp"

namespace aode {

using NameFn = std::function<std::string(const FieldLevel&)>;

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var, dense::Poly coeffs = {});
    static UniPoly constant(std::string var, const Elem& c);
    static UniPoly monomial(std::string var, const Elem& c, int k);

    const std::string& var() const { return var_; }
    const dense::Poly& coeffs() const { return c_; }
    int degree() const { return dense::degree(c_); }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Elem coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Elem(); }
    const Elem& lead() const { return c_.back(); }
    Elem operator()(const Elem& x) const { return dense::eval(c_, x); }
    UniPoly monic() const { return UniPoly(var_, dense::monic(c_)); }
    UniPoly derivative() const { return UniPoly(var_, dense::derivative(c_)); }
    Field field() const { return field_of(c_); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) { return UniPoly(a.pick(b), dense::add(a.c_, b.c_)); }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return UniPoly(a.pick(b), dense::sub(a.c_, b.c_)); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) { return UniPoly(a.pick(b), dense::mul(a.c_, b.c_)); }
    friend UniPoly operator*(const UniPoly& a, const Elem& c) { return UniPoly(a.var_, dense::scale(a.c_, c)); }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const NameFn& name = {}) const;

private:
    std::string pick(const UniPoly& b) const { return var_.empty() ? b.var_ : var_; }
    std::string var_;
    dense::Poly c_;
};

/// Sparse polynomial in two named variables; exponent pair (i, j) means var0^i var1^j.
class BiPoly {
public:
    using Exp = std::pair<int, int>;
    using Terms = std::map<Exp, Elem>;

    BiPoly() : vars_{"y", "p"} {}
    BiPoly(std::string v0, std::string v1) : vars_{std::move(v0), std::move(v1)} {}
    static BiPoly constant(const BiPoly& like, const Elem& c);
    static BiPoly var(const BiPoly& like, int which);

    const std::array<std::string, 2>& vars() const { return vars_; }
    int index_of(const std::string& var) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Elem coeff(int i, int j) const;
    void add_term(int i, int j, const Elem& c);
    int degree(int which) const;
    int total_degree() const;
    Field field() const;

    /// Coefficient of var[which]^k as a polynomial in the other variable.
    UniPoly coeff_in(int which, int k) const;
    /// Coefficients as polynomials in the other variable, indexed by power of var[which].
    std::vector<UniPoly> as_poly_in(int which) const;
    static BiPoly from_poly_in(const BiPoly& like, int which, const std::vector<UniPoly>& coeffs);
    /// Substitutes var[which] := value, giving a polynomial in the other variable.
    UniPoly eval(int which, const Elem& value) const;
    BiPoly partial(int which) const;
    /// Substitutes var[which] := var[which] + shift.
    BiPoly translate(int which, const Elem& shift) const;
    BiPoly swap_vars() const;
    BiPoly renamed(std::string v0, std::string v1) const;
    BiPoly map_coeffs(const std::function<Elem(const Elem&)>& f) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Elem& c);
    BiPoly operator-() const { return *this * Elem(-1); }
    BiPoly pow(int e) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    std::string str(const NameFn& name = {}) const;

private:
    std::array<std::string, 2> vars_;
    Terms terms_;
};

/// Textual polynomial rendering shared by the printers: terms sorted by the caller.
std::string render_sum(const std::vector<std::pair<Elem, std::string>>& terms, const NameFn& name);

}  // namespace aode
