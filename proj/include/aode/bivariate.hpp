// Bivariate polynomial gcds, squarefree normalization and factorization over
// the coefficient field.
#pragma once

#include <string>
#include <vector>

#include "aode/poly.hpp"

namespace aode {

/// Rational coefficients: primitive integer multiple with positive leading
/// coefficient (lex order, var1 major). Otherwise the monic multiple.
BiPoly primitive_form(const BiPoly& f);

/// Exact quotient f / g, or false when g does not divide f.
bool divides(const BiPoly& f, const BiPoly& g, BiPoly* quotient = nullptr);

/// gcd over K[var0, var1], normalized to a monic leading coefficient in var1.
BiPoly bivariate_gcd(const BiPoly& f, const BiPoly& g);

struct RemovedFactor {
    BiPoly factor;
    std::string reason;  // "repeated", "depends only on y", "depends only on p"
};

struct Normalized {
    BiPoly F;  // squarefree, no factor in K[y] or K[p]; may be constant when nothing is left
    std::vector<RemovedFactor> removed;
};

Normalized squarefree_normalize(const BiPoly& f);

struct Components {
    enum class Status { irreducible, factored, undecided };
    Status status = Status::undecided;
    std::vector<BiPoly> factors;
};

/// Factorization over the coefficient field of a squarefree F without
/// univariate factors (Kronecker substitution and univariate factorization).
Components bivariate_components(const BiPoly& F, std::size_t max_univariate_factors = 18);

}  // namespace aode
