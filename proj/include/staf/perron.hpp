#pragma once

// Perron-Frobenius eigendata of a primitive nonsingular matrix, computed
// exactly over Q[lambda]: the dominant eigenvalue as a real algebraic
// number, left/right eigenvectors over its field, and the growth data
// (largest secondary modulus, largest inverse-eigenvalue modulus) feeding
// the eventual-nonnegativity constants.

#include "staf/smith.hpp"

namespace staf {

struct PerronData {
    IntMat matrix;
    IntPoly cp;                                  // characteristic polynomial
    std::vector<std::pair<IntPoly, int>> factors;  // irreducible factors of cp
    IntPoly pf_factor;                           // factor vanishing at lambda
    FieldPtr field;                              // Q[lambda] with real embedding lambda
    AlgebraicNumber lambda;
    std::vector<NFElem> left;   // v with v J = lambda v, integral-primitive, positive
    std::vector<NFElem> right;  // w with J w = lambda w
    bool has_secondary = false;          // any eigenvalue besides lambda
    AlgebraicNumber lambda2_squared;     // max |mu|^2 over non-PF eigenvalues (0 if none)
    AlgebraicNumber lambda3_squared;     // max |mu|^2 over eigenvalues of the inverse
};

PerronData perron_data(const IntMat& j);

// Left / right eigenvector for an explicit eigenvalue of m lying in its
// field; the eigenspace must be one-dimensional. Entries are scaled
// integral-primitive with the first nonzero coordinate positive.
std::vector<NFElem> left_eigenvector(const IntMat& m, const NFElem& eigenvalue);
std::vector<NFElem> right_eigenvector(const IntMat& m, const NFElem& eigenvalue);

void normalize_eigenvector(std::vector<NFElem>& v);

// The hyperplane { x : v x = 0 } carved out by the left PF eigenvector; it
// realizes the sum of the non-dominant column eigenspaces.
struct SpectralSplit {
    std::vector<NFElem> functional;  // left PF eigenvector v
    std::vector<NFElem> line;        // right PF eigenvector w
};

SpectralSplit spectral_split(const PerronData& pd);
bool spectral_membership(const SpectralSplit& split, const std::vector<NFElem>& x);

// Exponent data for eventual nonnegativity of J^(cn) K^(-n) ladders:
// c_sufficient is the least c with lambda1^(c-1) > lambda2^c * lambda3
// (decided exactly on squares); c_window is the least c whose nonnegativity
// was verified exactly on the window [n0, n0+3] (window evidence only).
struct GrowthConstant {
    int c_sufficient = 1;
    int c_window = 1;
    long n0 = 1;
};

// Requires equal PF eigenvalue and projectively equal left/right PF
// eigenvectors; verifies J^(cn) K^(-n) >= 0 on the window.
GrowthConstant power_dominance_constant(const PerronData& j, const PerronData& k);

// Variant with an intertwining map: verifies J^(cn) A1^(-1) K^(-n) >= 0 and
// K^(cn) A1 J^(-n) >= 0 on the window. Callers check the spectral
// conditions beforehand.
GrowthConstant power_dominance_constant_with_map(const PerronData& j, const PerronData& k,
                                                 const IntMat& a1);

// max |root|^2 of the secondary spectrum (everything except lambda) and of
// the inverse spectrum; exposed for the obstruction checks.
AlgebraicNumber secondary_modulus_squared(const PerronData& pd, bool* exists = nullptr);
AlgebraicNumber inverse_modulus_squared(const PerronData& pd);

}  // namespace staf
