#pragma once

// Factorization of integer polynomials into Z-irreducibles: squarefree
// decomposition, then factoring modulo a small prime, Hensel lifting, and
// subset recombination. Degrees in this library stay small (matrix sizes
// are single-digit), so naive recombination is fine.

#include "staf/poly.hpp"

namespace staf {

struct Factorization {
    Integer unit;     // +1 or -1
    Integer content;  // positive integer content
    // primitive irreducible factors with positive leading coefficient,
    // sorted by degree then lexicographic coefficient order
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly reconstruct() const;
};

// Complete factorization over Z. Input must be nonzero.
Factorization factor_over_Z(const IntPoly& p);

// True iff p is irreducible in Z[t] up to units (content ignored).
bool is_irreducible(const IntPoly& p);

// Distinct irreducible factors, canonical order (multiplicities dropped).
std::vector<IntPoly> distinct_irreducible_factors(const IntPoly& p);

}  // namespace staf
