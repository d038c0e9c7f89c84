#pragma once

// p-adic limits of matrix powers: the powers of a matrix modulo p^m form a
// finite cyclic semigroup with a unique idempotent; the idempotents across
// levels cohere and define the p-adic limit. Row spaces modulo p^m are
// canonicalized by the Howell normal form, which makes module equality a
// syntactic comparison.

#include "staf/matrix.hpp"

namespace staf {

IntMat reduce_mod(const IntMat& m, const Integer& modulus);
// binary exponentiation with reduction after every product
IntMat mat_pow_mod(const IntMat& m, unsigned long e, const Integer& modulus);

struct PAdicLevel {
    int m = 0;              // level exponent
    Integer modulus;        // p^m
    long exponent = 0;      // e with A^e idempotent mod p^m
    IntMat idempotent;
};

struct PAdicLimit {
    Integer p;
    std::vector<PAdicLevel> levels;  // m = 1 .. m_max, coherent reductions
};

// The unique idempotent among the powers of a (mod p^m), found by cycle
// detection. Also reports the tail length via the returned exponent choice
// (smallest exponent inside the cycle that is a multiple of the period).
std::pair<long, IntMat> idempotent_power_mod(const IntMat& a, const Integer& p, int m,
                                             long step_budget = 1000000);

PAdicLimit p_adic_limit(const IntMat& a, const Integer& p, int m_max);

// True iff a^n = 0 (mod p) for some n (equivalently a^size = 0 mod p).
bool nilpotent_mod(const IntMat& a, const Integer& p);

struct RowSpaceMod {
    Integer modulus;   // p^m
    IntMat basis;      // Howell canonical form; 0 x n for the zero module
    IntMat transform;  // basis = transform * original (mod modulus)
    int cols = 0;

    bool operator==(const RowSpaceMod& o) const {
        return modulus == o.modulus && cols == o.cols && basis == o.basis;
    }
};

RowSpaceMod row_space_mod(const IntMat& m, const Integer& p, int mexp);

// Coefficients expressing w over the Howell basis, if w lies in the module.
std::optional<std::vector<Integer>> express_in_row_space(const RowSpaceMod& rs,
                                                         const std::vector<Integer>& w);
// Solve X * rs.basis-module membership for every row of m: returns X with
// m = X * (original generators) (mod modulus) when all rows are members.
std::optional<IntMat> factor_through_row_space(const RowSpaceMod& rs, const IntMat& m);

// Necessary condition for the equivalence ladder at the prime p: a map that
// sends the p-adic limit row space of J onto that of K isomorphically. The
// check compares the row spaces of K1*A1 and J1 modulo p^m and recovers the
// two-sided factorizations when they agree; on failure a bounded family of
// replacements K^r * A1 is tried.
struct PAdicRowSpaceResult {
    bool pass = false;
    Integer p;
    int m = 0;
    IntMat j_idem, k_idem;
    long replacement_power = 0;  // r in K^r * A1; 0 when none was needed
    std::optional<IntMat> u;     // K1 A1' = U J1   (mod p^m)
    std::optional<IntMat> v;     // J1 = V K1 A1'   (mod p^m)
};

PAdicRowSpaceResult padic_row_space_condition(const IntMat& j, const IntMat& k, const IntMat& a1,
                                              const Integer& p, int m, long replacement_bound = 8);

}  // namespace staf
