#pragma once

// Real algebraic numbers: Sturm-sequence root isolation, exact comparison,
// and arithmetic (product / power / inverse) via resultant constructions.
// A value is represented by its irreducible minimal polynomial together with
// a rational interval isolating exactly one real root. Rational values use a
// degenerate point interval. Values are immutable; refinement returns copies.

#include "staf/poly.hpp"
#include "staf/poly_factor.hpp"

namespace staf {

class AlgebraicNumber {
public:
    AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
    explicit AlgebraicNumber(const Rational& value);
    explicit AlgebraicNumber(const Integer& value) : AlgebraicNumber(Rational(value)) {}

    // Internal constructor: minpoly must be irreducible (positive lc,
    // primitive) and (lo, hi) must isolate exactly one of its real roots with
    // non-root endpoints. Verified with a Sturm count.
    static AlgebraicNumber make(IntPoly minpoly, Rational lo, Rational hi);

    const IntPoly& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    bool is_rational() const { return minpoly_.degree() == 1; }
    Rational rational_value() const;
    bool is_zero() const { return is_rational() && rational_value() == 0; }

    int sign() const;
    // Halve the interval until its width is at most max_width.
    AlgebraicNumber refined(const Rational& max_width) const;
    double to_double() const;

    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
    bool operator==(const AlgebraicNumber& o) const { return compare(*this, o) == 0; }
    bool operator!=(const AlgebraicNumber& o) const { return compare(*this, o) != 0; }
    bool operator<(const AlgebraicNumber& o) const { return compare(*this, o) < 0; }
    bool operator<=(const AlgebraicNumber& o) const { return compare(*this, o) <= 0; }
    bool operator>(const AlgebraicNumber& o) const { return compare(*this, o) > 0; }
    bool operator>=(const AlgebraicNumber& o) const { return compare(*this, o) >= 0; }

    std::string to_string() const;

private:
    IntPoly minpoly_;
    Rational lo_, hi_;
};

AlgebraicNumber alg_neg(const AlgebraicNumber& a);
AlgebraicNumber alg_inv(const AlgebraicNumber& a);
AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_mul_rat(const AlgebraicNumber& a, const Rational& r);
AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned k);

// All real roots of p (squarefree part taken internally), sorted ascending,
// each with its irreducible minimal polynomial.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p);

// Number of distinct real roots of the squarefree polynomial p in (lo, hi],
// by Sturm sign variations.
int sturm_count(const IntPoly& squarefree, const Rational& lo, const Rational& hi);
// Number of distinct real roots on the whole line.
int sturm_count_all(const IntPoly& squarefree);

// Number of roots of an irreducible polynomial lying on the unit circle.
int unit_circle_root_count(const IntPoly& irreducible);
// Kronecker: a monic irreducible polynomial with all roots on the unit
// circle is cyclotomic.
bool is_cyclotomic(const IntPoly& irreducible);

// Largest |root|^2 over all complex roots of p, as a real algebraic number
// (largest real root of the pairwise root-product polynomial).
AlgebraicNumber max_root_modulus_squared(const IntPoly& p);
// Smallest |root|^2; requires p(0) != 0.
AlgebraicNumber min_root_modulus_squared(const IntPoly& p);
// Positive real roots of the all-pairs root-product polynomial of p, sorted
// ascending. Contains every |root|^2 of p (conjugate pairs multiply), plus
// possibly products of distinct real roots.
std::vector<AlgebraicNumber> positive_pair_product_values(const IntPoly& p);

// Sign of g evaluated at alpha, decided exactly (zero detected by reduction
// modulo the minimal polynomial, otherwise interval refinement).
int sign_at_algebraic(const RatPoly& g, const AlgebraicNumber& alpha);

// Exact comparison of two products of powers of nonnegative real algebraic
// numbers: rational values multiply exactly, irrational ones are compared by
// interval refinement, and a tie that refinement cannot break falls back to
// the resultant arithmetic. Avoids building minimal polynomials of the huge
// powers met in growth-constant searches.
int compare_power_products(const std::vector<std::pair<AlgebraicNumber, unsigned>>& lhs,
                           const std::vector<std::pair<AlgebraicNumber, unsigned>>& rhs);

}  // namespace staf
