// Exact arithmetic over Q and towers of simple extensions of Q.
//
// A tower is a chain of levels; each level is either algebraic (a generator
// with a monic minimal polynomial over the level below) or transcendental
// (a free symbol, elements are reduced fractions of polynomials over the
// level below). Elements are always stored at the lowest level at which their
// representation is non-constant, so rational numbers stay plain rationals and
// equality is structural.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aode {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class IncompatibleFields : public Error {
public:
    IncompatibleFields() : Error("elements live in unrelated field towers") {}
};

class TowerLimit : public Error {
public:
    explicit TowerLimit(std::size_t degree)
        : Error("field tower degree " + std::to_string(degree) + " exceeds the configured cap") {}
};

class Elem;
struct FieldLevel;
using LevelPtr = std::shared_ptr<const FieldLevel>;

/// Raised when an adjoined polynomial turns out to be reducible: a zero
/// divisor was met while inverting. `factor` is a non-trivial monic factor.
class ReducibleModulus : public Error {
public:
    ReducibleModulus(LevelPtr level, std::vector<Elem> factor);
    LevelPtr level;
    std::vector<Elem> factor;
};

enum class LevelKind { algebraic, transcendental };

/// Element of the top level of some tower (or of Q when the level is null).
class Elem {
public:
    Elem() = default;
    Elem(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Elem(const Rational& q) : q_(q) { q_.canonicalize(); }  // NOLINT
    Elem(const Integer& z) : q_(z) {}  // NOLINT

    static Elem generator(const LevelPtr& level);
    /// Element sum c[i]*g^i of an algebraic level; reduces modulo the minimal polynomial.
    static Elem from_poly(const LevelPtr& level, std::vector<Elem> coeffs);
    /// Element num(g)/den(g) of a transcendental level; reduces the fraction.
    static Elem fraction(const LevelPtr& level, std::vector<Elem> num, std::vector<Elem> den);

    bool is_zero() const { return !level_ && sgn(q_) == 0; }
    bool is_one() const { return !level_ && q_ == 1; }
    bool is_rational() const { return !level_; }
    const Rational& rational() const;
    const LevelPtr& level() const { return level_; }
    /// Algebraic: coefficients of the reduced polynomial. Transcendental: numerator.
    const std::vector<Elem>& coeffs() const { return num_; }
    const std::vector<Elem>& denominator() const { return den_; }

    Elem operator-() const;
    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b);
    Elem& operator+=(const Elem& b) { return *this = *this + b; }
    Elem& operator-=(const Elem& b) { return *this = *this - b; }
    Elem& operator*=(const Elem& b) { return *this = *this * b; }
    Elem& operator/=(const Elem& b) { return *this = *this / b; }
    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    Elem inverse() const;
    Elem pow(long e) const;

    /// Canonical text; `name` maps a level to the generator name used.
    std::string str(const std::function<std::string(const FieldLevel&)>& name = {}) const;

private:
    static Elem normalize_alg(const LevelPtr& level, std::vector<Elem> c);
    static Elem normalize_tr(const LevelPtr& level, std::vector<Elem> n, std::vector<Elem> d);

    LevelPtr level_;
    Rational q_;
    std::vector<Elem> num_;
    std::vector<Elem> den_;
};

struct FieldLevel {
    LevelPtr parent;
    LevelKind kind = LevelKind::algebraic;
    std::string name;
    bool auto_name = true;
    std::vector<Elem> minpoly;  // monic, coefficients in the levels below
    int depth = 1;
    std::size_t degree = 1;  // product of algebraic degrees of this level and below
    std::uint64_t serial = 0;

    int min_degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

/// Total order used for deterministic output. Rationals sort numerically and
/// before algebraic elements.
int compare(const Elem& a, const Elem& b);
inline bool canonical_less(const Elem& a, const Elem& b) { return compare(a, b) < 0; }

/// Common level of two levels in the same chain (the deeper one).
LevelPtr join(const LevelPtr& a, const LevelPtr& b);
/// True when `below` is `above` or one of its ancestors (null is an ancestor of all).
bool is_ancestor(const LevelPtr& below, const LevelPtr& above);

/// Handle on a tower; the empty tower is Q.
class Field {
public:
    Field() = default;
    explicit Field(LevelPtr top) : top_(std::move(top)) {}

    static Field rationals() { return {}; }
    const LevelPtr& top() const { return top_; }
    bool is_rational() const { return !top_; }
    /// Degree over Q of the algebraic part of the tower.
    std::size_t degree() const { return top_ ? top_->degree : 1; }
    int depth() const { return top_ ? top_->depth : 0; }
    std::vector<LevelPtr> levels() const;  // bottom to top
    bool has_transcendental() const;

    /// Adjoins a root of `minpoly` (coefficients in this field, any nonzero
    /// leading coefficient; it is made monic). The caller certifies
    /// irreducibility. Degree 1 returns the unchanged field and the root.
    std::pair<Field, Elem> adjoin_root(std::vector<Elem> minpoly, std::string name = {}) const;
    /// Adjoins a free symbol.
    std::pair<Field, Elem> adjoin_symbol(std::string name) const;

    /// Field generated by this one and `other` (must lie in one chain).
    Field join(const Field& other) const { return Field(aode::join(top_, other.top_)); }
    bool contains(const Elem& e) const { return is_ancestor(e.level(), top_); }
    friend bool operator==(const Field& a, const Field& b) { return a.top_ == b.top_; }

private:
    LevelPtr top_;
};

/// Smallest field of the chain containing all the given elements.
Field field_of(const std::vector<Elem>& elems);
Field field_of(const Elem& e);

std::size_t max_tower_degree();
void set_max_tower_degree(std::size_t cap);

/// Ring homomorphism sending tower generators to given images. Levels not
/// mapped are fixed (their generator maps to itself).
class Embedding {
public:
    void map(const LevelPtr& level, Elem image);
    Elem operator()(const Elem& e) const;
    bool maps(const LevelPtr& level) const;

private:
    std::vector<std::pair<LevelPtr, Elem>> images_;
};

}  // namespace aode
