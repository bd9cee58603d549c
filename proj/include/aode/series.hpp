// Truncated Puiseux series sum c_k x^(k/n) with a known order T: every
// coefficient of exponent < T is exact, nothing at or beyond T is claimed.
// T absent means the series is exact (a finite sum).
//
// Series at infinity are stored as series at zero in z = 1/x; the point tag
// only affects rendering.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aode/field.hpp"
#include "aode/poly.hpp"

namespace aode {

enum class Point { zero, infinity };

class OrderUnknown : public Error {
public:
    explicit OrderUnknown(const Rational& T) : Error("order unknown beyond " + to_string(T)) {}
};

class Series {
public:
    using Terms = std::map<long, Elem>;

    Series() = default;
    /// Sum c[k] x^(k/n), known up to T (nullopt: exact). Normalizes.
    Series(Terms c, long n = 1, std::optional<Rational> T = std::nullopt, Point pt = Point::zero);

    static Series constant(const Elem& c, std::optional<Rational> T = std::nullopt);
    /// c * x^(k/n)
    static Series monomial(const Elem& c, long k, long n = 1, std::optional<Rational> T = std::nullopt);
    /// Zero known up to T.
    static Series zero(std::optional<Rational> T = std::nullopt, Point pt = Point::zero);

    Point point() const { return pt_; }
    Series at(Point pt) const;
    long ramification() const { return n_; }
    const Terms& terms() const { return c_; }
    const std::optional<Rational>& known() const { return T_; }
    bool exact() const { return !T_; }
    bool is_zero() const { return c_.empty(); }  // zero as far as known
    bool is_exact_zero() const { return c_.empty() && !T_; }

    /// Least exponent with a nonzero coefficient; nullopt for the exact zero.
    /// Throws OrderUnknown for a zero stub with finite T.
    std::optional<Rational> order() const;
    /// Lower bound for the valuation: the order, or T for a zero stub; nullopt for exact zero.
    std::optional<Rational> valuation_bound() const;
    Elem coeff(const Rational& e) const;
    Elem leading_coeff() const;
    /// Coefficients with keys re-expressed on ramification m (n must divide m).
    Terms terms_on(long m) const;

    Series truncate(const Rational& T) const;
    /// Substitutes x -> x^(1/m): keys stay, ramification multiplies.
    Series ramify(long m) const;
    Series map_coeffs(const std::function<Elem(const Elem&)>& f) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Elem& c);
    Series operator-() const;
    friend bool operator==(const Series& a, const Series& b);

    /// 1/s; exact inputs yield a result truncated at `cap`.
    Series inverse(const Rational& cap) const;
    Series pow(long e, const Rational& cap) const;
    Series derivative() const;

    std::string str(const std::string& var = "x", const NameFn& name = {}) const;

private:
    void normalize();

    Terms c_;
    long n_ = 1;
    std::optional<Rational> T_;
    Point pt_ = Point::zero;
};

/// f(ys, ps) with y := ys, p := ps.
Series substitute_poly(const BiPoly& f, const Series& ys, const Series& ps, const Rational& cap);

/// a(s(x)); a must have integer exponents and order(s) >= 1.
Series compose(const Series& a, const Series& s, const Rational& cap);

std::optional<Rational> min_known(const std::optional<Rational>& a, const std::optional<Rational>& b);

}  // namespace aode
