#pragma once

// Dense univariate polynomials over Z, plus a small generic polynomial layer
// over an arbitrary field (used with Rational and with number-field elements).
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty coefficient vector.

#include "staf/numeric.hpp"

#include <optional>
#include <utility>

namespace staf {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(int v) : c_{Integer(v)} { normalize(); }
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Integer> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({Integer(1)}); }
    static IntPoly constant(const Integer& a) { return IntPoly({a}); }
    // c * t^k
    static IntPoly monomial(const Integer& coeff, int k);
    // t - a
    static IntPoly linear_root(const Integer& a) { return IntPoly({-a, Integer(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lc() const;
    const Integer& constant_term() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    // Total order: by degree, then lexicographic on coefficients from the
    // leading end down. Used for canonical factor ordering.
    static int compare(const IntPoly& a, const IntPoly& b);
    bool operator<(const IntPoly& o) const { return compare(*this, o) < 0; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& s) const;

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(eval(x)); }

    IntPoly derivative() const;

    // gcd of coefficients, nonnegative; content of the zero polynomial is 0.
    Integer content() const;
    // this / content; keeps the sign of the leading coefficient.
    IntPoly primitive_part() const;

    // Euclidean division in Z[t]; throws if any step would leave Z[t]
    // (always succeeds for monic divisors).
    static std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);
    // Quotient if b divides a exactly over Z[t], nullopt otherwise.
    static std::optional<IntPoly> try_exact_divide(const IntPoly& a, const IntPoly& b);
    static IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

    // lc(b)^(deg a - deg b + 1) * a mod b, computed within Z[t].
    static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

    // Primitive gcd with positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    static Integer resultant(const IntPoly& a, const IntPoly& b);
    Integer discriminant() const;

    IntPoly squarefree_part() const;
    // Yun decomposition: list of (factor, multiplicity) with factors squarefree
    // and pairwise coprime; unit * content * product reconstructs the input.
    std::vector<std::pair<IntPoly, int>> squarefree_decomposition() const;

    // p(-t)
    IntPoly compose_negate() const;
    // t^deg * p(1/t)
    IntPoly reverse() const;
    // polynomial whose roots are r * (roots of p), r rational; result primitive
    IntPoly scale_roots(const Rational& r) const;
    // p(t - a)
    IntPoly shift(const Integer& a) const;

    // Cauchy bound: every complex root has |z| <= bound.
    Rational root_bound() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Integer> c_;
};

IntPoly operator*(const Integer& s, const IntPoly& p);

// Polynomial with roots { a_i * b_j } for roots a_i of p and b_j of q,
// computed as Res_x(p(x), x^deg(q) q(z/x)) by evaluation/interpolation.
// Requires q(0) != 0.
IntPoly root_product_poly(const IntPoly& p, const IntPoly& q);

// Polynomial with roots { a_i^k }, k >= 1.
IntPoly root_power_poly(const IntPoly& p, unsigned k);

// Polynomial with roots { a_i + b_j }, via Res_x(p(x), q(z - x)).
IntPoly root_sum_poly(const IntPoly& p, const IntPoly& q);

// ---------------------------------------------------------------------------
// Generic dense polynomial over a field. F must be default-constructible to
// the additive identity and support +, -, *, /, == (Rational does;
// NumberFieldElement is given the same shape).

template <class F>
struct FPoly {
    std::vector<F> c;  // lowest degree first, normalized

    FPoly() = default;
    explicit FPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == F()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const F& lc() const { return c.back(); }

    bool operator==(const FPoly& o) const { return c == o.c; }

    FPoly operator+(const FPoly& o) const {
        std::vector<F> r(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < c.size()) r[i] = r[i] + c[i];
            if (i < o.c.size()) r[i] = r[i] + o.c[i];
        }
        return FPoly(std::move(r));
    }
    FPoly operator-(const FPoly& o) const {
        std::vector<F> r(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < c.size()) r[i] = r[i] + c[i];
            if (i < o.c.size()) r[i] = r[i] - o.c[i];
        }
        return FPoly(std::move(r));
    }
    FPoly operator*(const FPoly& o) const {
        if (is_zero() || o.is_zero()) return FPoly();
        std::vector<F> r(c.size() + o.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
        return FPoly(std::move(r));
    }
    FPoly scaled(const F& s) const {
        std::vector<F> r = c;
        for (auto& x : r) x = x * s;
        return FPoly(std::move(r));
    }

    static std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
        if (b.is_zero()) throw precondition_error("FPoly::divmod: division by zero polynomial");
        FPoly rem = a;
        if (a.degree() < b.degree()) return {FPoly(), rem};
        std::vector<F> q(a.degree() - b.degree() + 1);
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int k = rem.degree() - b.degree();
            F factor = rem.lc() / b.lc();
            q[k] = factor;
            for (int i = 0; i <= b.degree(); ++i)
                rem.c[i + k] = rem.c[i + k] - factor * b.c[i];
            rem.normalize();
        }
        return {FPoly(std::move(q)), rem};
    }

    FPoly monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / lc();
        return scaled(inv);
    }

    static FPoly gcd(FPoly a, FPoly b) {
        while (!b.is_zero()) {
            FPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    F eval(const F& x) const {
        F acc;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    FPoly derivative() const {
        if (c.size() <= 1) return FPoly();
        std::vector<F> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * F(static_cast<int>(i));
        return FPoly(std::move(r));
    }
};

using RatPoly = FPoly<Rational>;

RatPoly to_rat_poly(const IntPoly& p);
// Clears denominators and returns the primitive integer image (sign of the
// leading coefficient preserved).
IntPoly to_int_poly_primitive(const RatPoly& p);

}  // namespace staf
