// Complete univariate factorization over Q and algebraic towers, and root
// finding in the algebraic closure by lazy adjunction.
#pragma once

#include <utility>
#include <vector>

#include "aode/poly.hpp"

namespace aode {

struct Factor {
    UniPoly poly;  // monic, irreducible over the field asked for
    int multiplicity = 1;
};

/// Complete factorization of f over K. Factors are monic and sorted by
/// degree, then canonically. K must be a purely algebraic tower.
std::vector<Factor> factor_univariate(const UniPoly& f, const Field& K = {});

/// True when f (non-constant) is irreducible over K.
bool is_irreducible(const UniPoly& f, const Field& K = {});

/// One root per irreducible factor; higher-degree factors are adjoined.
struct RootClass {
    Elem root;
    int multiplicity = 1;
    Field field;        // field containing the root (K itself for rational roots)
    UniPoly minpoly;    // monic minimal polynomial of the root over K
    int degree() const { return minpoly.degree(); }  // number of conjugates over K
};

std::vector<RootClass> roots_in_closure(const UniPoly& f, const Field& K = {});

/// adjoin_root after certifying irreducibility; throws ReducibleModulus
/// carrying a discovered factor when minpoly is reducible.
std::pair<Field, Elem> adjoin_checked(const Field& K, const UniPoly& minpoly);

namespace detail {
/// Factorization of a squarefree primitive integer polynomial (Zassenhaus).
std::vector<std::vector<Integer>> factor_integer_squarefree(const std::vector<Integer>& f);
}  // namespace detail

}  // namespace aode
