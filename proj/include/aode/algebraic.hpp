// Algebraic solutions: reconstruction of the minimal polynomial G(x, y) of a
// Puiseux solution from a long enough truncation, certified by the
// differential pseudo-remainder. All solutions are then G(x + c, y) = 0.
#pragma once

#include <optional>
#include <vector>

#include "aode/solver.hpp"

namespace aode {

struct MinimalPolynomialResult {
    BiPoly G;          // in (x, y), primitive
    BiPoly component;  // the factor of F it solves, in (y, p)
    BiPoly family;     // G(x + c, y), c a free symbol
    SolutionTruncation seed;
    int dx = 0, dy = 0;
    Rational nu;       // min(order of the seed, 0)
};

/// Nonzero A with deg_x A <= dx, deg_y A <= dy and A(x, ybar) = 0 for all
/// exponents known in ybar, minimal in (deg_y, deg_x) and then in the number
/// of terms; nullopt when there is none. ybar must be known beyond
/// 2 dx dy - nu (dy - 1).
std::optional<BiPoly> reconstruct_candidate(const Series& ybar, int dx, int dy, const Rational& nu);

/// Replaces p by -A_x / A_y in F (times A_y^deg_p F) and pseudo-reduces by A in y.
BiPoly diff_pseudo_remainder(const BiPoly& F, const BiPoly& A);

/// G(x + c, y) with c a fresh transcendental symbol named `c`.
BiPoly shift_family(const BiPoly& G, const std::string& c = "c");

/// Seed truncation used for a component: a solution at zero with, in order,
/// rational coefficients and n = 1, the smallest tower, the smallest ramification.
SolutionTruncation choose_seed(const BiPoly& F);

/// Minimal polynomial of the solutions of the irreducible F, or nullopt.
std::optional<MinimalPolynomialResult> algebraic_solution_component(const BiPoly& F);

/// One result per component of F (F is taken as irreducible when asked).
std::vector<MinimalPolynomialResult> algebraic_solution(const BiPoly& F, bool irreducible = false);

}  // namespace aode
