#pragma once

// Arithmetic in Q[lambda] = Q[t]/(f) for an irreducible f, with a
// distinguished real embedding given by an isolated root. Elements are
// coordinate vectors over the power basis 1, lambda, ..., lambda^(d-1).
// An element with a null field pointer is a plain rational constant and
// coerces into any field; this keeps the generic polynomial layer usable
// over number-field coefficients.

#include "staf/real_roots.hpp"

#include <memory>

namespace staf {

struct NumberField {
    IntPoly minpoly;           // irreducible, primitive, positive leading coefficient
    AlgebraicNumber embedding; // the distinguished real root of minpoly

    int degree() const { return minpoly.degree(); }
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Build a field from a real algebraic number; the number's minimal
// polynomial becomes the field polynomial and the number its generator.
FieldPtr make_field(const AlgebraicNumber& generator);

bool same_field(const FieldPtr& a, const FieldPtr& b);

class NFElem {
public:
    NFElem() = default;                         // rational zero
    NFElem(int v) : NFElem(Rational(v)) {}      // NOLINT: implicit by design
    explicit NFElem(const Integer& v) : NFElem(Rational(v)) {}
    explicit NFElem(const Rational& v);

    static NFElem from_coords(FieldPtr field, std::vector<Rational> coords);
    static NFElem generator(const FieldPtr& field);
    static NFElem zero(const FieldPtr& field);
    static NFElem one(const FieldPtr& field);

    // null for plain rationals
    const FieldPtr& field() const { return field_; }
    // coordinates over the power basis (size 1 for plain rationals)
    const std::vector<Rational>& coords() const { return co_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inverse() const;
    NFElem pow(unsigned k) const;

    NFElem operator*(const Rational& s) const;

    // sign of the element under the field's real embedding
    int sign() const;

    // minimal polynomial over Q: primitive, irreducible, positive lc
    IntPoly min_poly_over_Q() const;

    // the element as a standalone real algebraic number
    AlgebraicNumber to_algebraic() const;

    std::string to_string() const;

private:
    FieldPtr field_;            // null = rational constant
    std::vector<Rational> co_ = {Rational(0)};

    static void coerce(NFElem& a, NFElem& b);
    RatPoly as_poly() const { return RatPoly(std::vector<Rational>(co_)); }
};

// Trager-style norm: Res_y(f(y), g(x - k*y)). Used to factor g over the
// field and to certify compositum degrees.
IntPoly field_norm_poly(const IntPoly& field_minpoly, const IntPoly& g, long k);

// Degrees of the irreducible factors of a squarefree g over the field.
std::vector<int> factor_degrees_over_field(const IntPoly& g, const FieldPtr& field);

// Roots of the squarefree polynomial g that lie in the field.
std::vector<NFElem> roots_in_field(const IntPoly& g, const FieldPtr& field);

}  // namespace staf
