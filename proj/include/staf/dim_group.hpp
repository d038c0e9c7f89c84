#pragma once

// Concrete realization of the stationary dimension group of a primitive
// nonsingular incidence matrix J: the increasing union of J^(-m) Z^N inside
// Q^N, ordered by the trace functional <alpha | g> for the left PF
// eigenvector alpha. Multiplication by J acts as the group's distinguished
// automorphism.

#include "staf/perron.hpp"

namespace staf {

struct DimensionGroupRealization {
    IntMat j;
    PerronData perron;
    Integer det;                      // nonzero
    std::vector<Integer> det_primes;  // prime support of |det|
};

DimensionGroupRealization dim_group(const IntMat& j);

struct GroupElement {
    std::vector<Rational> v;
    long witness = 0;  // J^witness * v is integral
};

struct MembershipResult {
    enum class Kind { Member, NotMember, Unknown } kind;
    long witness = -1;  // smallest m with J^m g integral, when Member
};

// Member: J^m g integral for some m <= m_max. NotMember is definitive: a
// denominator prime not dividing det(J) survives every multiplication by J.
MembershipResult membership(const DimensionGroupRealization& dg, const std::vector<Rational>& g,
                            long m_max);

GroupElement as_element(const DimensionGroupRealization& dg, const std::vector<Rational>& g,
                        long m_max = 64);

// tau(g) = <alpha | g> evaluated in Q[lambda] on the realized coordinates.
NFElem trace_functional(const DimensionGroupRealization& dg, const std::vector<Rational>& g);

// g >= 0 in the dimension group order: tau(g) > 0, or g = 0.
bool is_positive(const DimensionGroupRealization& dg, const GroupElement& g);

// |det J|, cross-checked against the product of Smith invariants.
Integer quotient_index(const DimensionGroupRealization& dg);

// The dimension group automorphism and its inverse on realized coordinates.
std::vector<Rational> shift_apply(const DimensionGroupRealization& dg, const std::vector<Rational>& g);
std::vector<Rational> shift_apply_inverse(const DimensionGroupRealization& dg,
                                          const std::vector<Rational>& g);

// Exact comparison of mat_pow against the spectral closed forms known for
// the two 2x2 companion matrices with eigenvalue 8 (first columns (4,32)
// and (6,16)); any integer exponent.
bool closed_form_power_check(const IntMat& m, long n);

}  // namespace staf
