// Formal Puiseux series solutions of F(y, y') = 0: the generic family at
// regular points, constant solutions, and solution truncations at zero and
// at infinity coming from the places of the curve F(y, p) = 0.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aode/briot_bouquet.hpp"
#include "aode/curve.hpp"
#include "aode/factor.hpp"
#include "aode/series.hpp"

namespace aode {

struct SolutionTruncation {
    Series series;
    CurvePoint initial;  // center of the place the solution comes from
    long n = 1;
    Point point = Point::zero;
    bool guarantee = false;
    Field field;
    int conjugates = 1;                   // size of the conjugacy class over the input field
    std::optional<UniPoly> sigma1;        // minimal polynomial of the leading reparametrization coefficient
    std::optional<std::string> free_parameter;
    bool regular = false;                 // from a non-critical initial tuple (iv filter only)
};

struct GenericSolution {
    Series truncation;  // over K(_CC)[_P] / (F(_CC, _P))
    BiPoly relation;    // F(_CC, _P) in the variables (_CC, _P)
    std::vector<BiPoly> exceptional;  // each constraint reads c(_CC, _P) = 0
    Field field;
    Elem CC, P;
    int component = 0;
};

struct SolveOptions {
    bool generic = true;
    bool constants = true;
    bool finite = true;
    bool infinity = true;
    bool irreducible = false;  // skip the component split of the generic solution
    bool expand_conjugates = false;
    std::optional<Elem> iv;
    std::optional<long> bound_override;
    std::optional<Rational> generic_order;  // order of the generic family when it differs
    unsigned jobs = 1;
};

struct SolveReport {
    BiPoly equation;  // as given
    BiPoly reduced;   // after squarefree normalization
    std::vector<GenericSolution> generic;
    std::vector<RootClass> constants;
    std::vector<SolutionTruncation> at_zero;
    std::vector<SolutionTruncation> at_infinity;
    std::vector<UniPoly> slopes;  // factors g(p) of F: y = c + p0 x with g(p0) = 0
    std::vector<std::string> transforms;
    long bound = 0;
    Rational order;
};

/// All solution truncations up to and including x^order (z^order at infinity).
SolveReport puiseux_solve(const BiPoly& F, const Rational& order, const SolveOptions& opts = {});

/// One family per component of F over the coefficient field.
std::vector<GenericSolution> generic_solution_truncation(const BiPoly& F, const Rational& order, bool irreducible);

/// Roots of F(y, 0) as conjugacy classes.
std::vector<RootClass> constant_solutions(const BiPoly& F);

/// Numerator of F(1/y, -p/y^2): solutions y of it give solutions 1/y of F.
BiPoly invert_equation(const BiPoly& F);

/// All conjugates of a truncation over `base`, each in its own tower.
std::vector<SolutionTruncation> expand_conjugates(const SolutionTruncation& s, const Field& base);

}  // namespace aode
