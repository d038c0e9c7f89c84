#pragma once

// Smith normal form over Z with unimodular transforms, the integer solution
// lattice of the intertwining equation A J = K A, and invariant factors of
// t*1 - M over Q[t] (the rational-canonical-form similarity invariant).

#include "staf/matrix.hpp"

namespace staf {

struct SmithForm {
    IntMat U;  // unimodular, rows() x rows()
    IntMat D;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat V;  // unimodular, cols() x cols()
    // invariant: U * A * V == D
};

SmithForm smith_form(const IntMat& a);

// Z-basis of { A : A J = K A } with integer entries; A has shape
// K.rows() x J.rows(). J and K must be square.
std::vector<IntMat> intertwiner_lattice(const IntMat& j, const IntMat& k);

// Nonunit invariant factors of t*1 - M, monic, ascending divisibility chain;
// their product is the characteristic polynomial. Equal lists certify
// similarity over Q.
std::vector<IntPoly> invariant_factors(const IntMat& m);

}  // namespace staf
