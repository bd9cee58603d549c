// Solution places, the reparametrization equation a'(s) s' = N t^(N-1) b(s)
// with N = n (1 - h), its coefficient recursion, and prolongation of
// solution truncations.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aode/curve.hpp"
#include "aode/series.hpp"

namespace aode {

struct SolutionPlaceCheck {
    bool solution_place = false;  // for h = 2 only a necessary condition
    long n = 0;                   // ramification when solution_place
};

/// Integer condition n (1 - h) = ord(a - y0) - ord(b) with n > 0.
SolutionPlaceCheck check_solution_place(const Place& place, int h);

/// Triangular linear recursion L(i) sigma_i = R_i(sigma_1 .. sigma_{i-1}).
struct CoefficientRecursion {
    std::function<Elem(long i)> L;
    /// sigma[0] is unused, sigma[j] holds sigma_j for j < i.
    std::function<Elem(long i, const std::vector<Elem>& sigma)> R;
};

struct CoreResult {
    bool consistent = true;
    std::vector<Elem> sigma;           // sigma[1 .. last]; sigma[0] unused
    std::optional<long> free_index;    // first index with L = 0 = R
    std::optional<Elem> free_symbol;
    long inconsistent_index = 0;
};

/// Runs the recursion from `first` up to `last` (inclusive) starting from
/// the given sigma_1 .. sigma_{first-1}. A free coefficient becomes a fresh
/// transcendental symbol named `free_name`.
CoreResult briot_bouquet_core(const CoefficientRecursion& rec, std::vector<Elem> initial, long last,
                              const std::string& free_name = "_C");

struct ReparamSolution {
    Series s;                        // in t, order 1
    Field field;
    UniPoly sigma1_minpoly;          // minimal polynomial of sigma_1 over the place field
    int conjugates = 1;              // degree of sigma1_minpoly
    std::optional<long> free_index;
    std::optional<Elem> free_symbol;
};

/// Solutions s of the associated equation for a place passing the check.
/// s is computed as far as the truncation of `place.a` allows, capped at
/// `terms` coefficients when terms > 0. For h = 2 the list may be empty.
std::vector<ReparamSolution> solve_reparametrization(const Place& place, long n, int h, long terms = 0);

/// a(s(x^(1/n))), expanded at zero (h = 0) or at infinity (h = 2).
Series solution_from_reparametrization(const Place& place, const ReparamSolution& sol, long n, int h);

/// Unique extension of the truncation s of a solution of F(y, (1-h) x^h y') = 0
/// up to and including the exponent `target`. Throws when s is not guaranteed,
/// not a valid truncation, or the extension is not unique.
Series prolong_truncation(const BiPoly& F, const Series& s, const Rational& target, Point point,
                          bool guaranteed = true);

/// y' for h = 0 or -x^2 y' for h = 2.
Series differential_image(const Series& y, int h);

}  // namespace aode
