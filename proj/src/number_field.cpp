#include "staf/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace staf {

FieldPtr make_field(const AlgebraicNumber& generator) {
    auto f = std::make_shared<NumberField>(NumberField{generator.minpoly(), generator});
    return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly == b->minpoly && a->embedding == b->embedding;
}

NFElem::NFElem(const Rational& v) { co_ = {v}; }

NFElem NFElem::from_coords(FieldPtr field, std::vector<Rational> coords) {
    if (!field) throw precondition_error("NFElem::from_coords: null field");
    coords.resize(static_cast<size_t>(field->degree()), Rational(0));
    NFElem e;
    e.field_ = std::move(field);
    e.co_ = std::move(coords);
    return e;
}

NFElem NFElem::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        // the generator of a degree-1 field is its rational root
        Rational r = make_rational(-field->minpoly.coeff(0), field->minpoly.coeff(1));
        return from_coords(field, {r});
    }
    std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
    c[1] = 1;
    return from_coords(field, std::move(c));
}

NFElem NFElem::zero(const FieldPtr& field) { return from_coords(field, {}); }

NFElem NFElem::one(const FieldPtr& field) { return from_coords(field, {Rational(1)}); }

bool NFElem::is_zero() const {
    for (const auto& c : co_)
        if (c != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < co_.size(); ++i)
        if (co_[i] != 0) return false;
    return true;
}

Rational NFElem::rational_value() const {
    if (!is_rational()) throw precondition_error("rational_value of non-rational element");
    return co_[0];
}

void NFElem::coerce(NFElem& a, NFElem& b) {
    if (a.field_ && b.field_) {
        if (!same_field(a.field_, b.field_))
            throw precondition_error("number field mismatch");
        return;
    }
    if (!a.field_ && b.field_) {
        Rational v = a.co_[0];
        a = from_coords(b.field_, {v});
    } else if (a.field_ && !b.field_) {
        Rational v = b.co_[0];
        b = from_coords(a.field_, {v});
    }
}

bool NFElem::operator==(const NFElem& o) const {
    NFElem a = *this, b = o;
    coerce(a, b);
    return a.co_ == b.co_;
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& c : r.co_) c = -c;
    return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
    NFElem a = *this, b = o;
    coerce(a, b);
    for (size_t i = 0; i < a.co_.size(); ++i) a.co_[i] += b.co_[i];
    return a;
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
    NFElem a = *this, b = o;
    coerce(a, b);
    if (!a.field_) return NFElem(Rational(a.co_[0] * b.co_[0]));
    RatPoly prod = a.as_poly() * b.as_poly();
    RatPoly rem = RatPoly::divmod(prod, to_rat_poly(a.field_->minpoly)).second;
    rem.c.resize(a.co_.size(), Rational(0));
    a.co_ = std::move(rem.c);
    return a;
}

NFElem NFElem::operator*(const Rational& s) const {
    NFElem r = *this;
    for (auto& c : r.co_) c *= s;
    return r;
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero");
    if (!field_ || is_rational()) {
        NFElem r = *this;
        Rational inv = Rational(1) / co_[0];
        r.co_.assign(r.co_.size(), Rational(0));
        r.co_[0] = inv;
        return r;
    }
    // extended Euclid in Q[t]: r*g + s*f = 1, so r is the inverse of g mod f
    RatPoly g = as_poly(), f = to_rat_poly(field_->minpoly);
    RatPoly r0 = f, r1 = g;
    RatPoly t0, t1({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r2] = RatPoly::divmod(r0, r1);
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd = nonzero constant (f irreducible, g nonzero mod f)
    if (r0.degree() != 0) throw std::logic_error("inverse: gcd not constant");
    RatPoly inv = t0.scaled(Rational(1) / r0.c[0]);
    inv.c.resize(co_.size(), Rational(0));
    return from_coords(field_, std::move(inv.c));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

NFElem NFElem::pow(unsigned k) const {
    NFElem base = *this;
    NFElem acc = field_ ? one(field_) : NFElem(1);
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

int NFElem::sign() const {
    if (!field_ || is_rational()) return sgn(co_[0]);
    return sign_at_algebraic(as_poly(), field_->embedding);
}

IntPoly NFElem::min_poly_over_Q() const {
    if (!field_ || is_rational()) {
        Rational v = co_[0];
        return IntPoly({-v.get_num(), v.get_den()});
    }
    int d = field_->degree();
    // find the least k such that 1, x, ..., x^k are linearly dependent
    std::vector<std::vector<Rational>> powers;
    NFElem x = *this;
    NFElem acc = one(field_);
    powers.push_back(acc.co_);
    for (int k = 1; k <= d; ++k) {
        acc = acc * x;
        powers.push_back(acc.co_);
        // solve sum_{i<k} c_i x^i = -x^k by Gaussian elimination
        size_t rows = static_cast<size_t>(d), cols = static_cast<size_t>(k);
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) m[i][j] = powers[j][i];
            m[i][cols] = -powers[static_cast<size_t>(k)][i];
        }
        // row reduce
        size_t rank = 0;
        std::vector<size_t> pivots;
        for (size_t col = 0; col < cols && rank < rows; ++col) {
            size_t sel = rank;
            while (sel < rows && m[sel][col] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(m[sel], m[rank]);
            Rational inv = Rational(1) / m[rank][col];
            for (auto& v : m[rank]) v *= inv;
            for (size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (size_t j = col; j <= cols; ++j) m[r][j] -= f * m[rank][j];
            }
            pivots.push_back(col);
            ++rank;
        }
        bool consistent = true;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][cols] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rational> sol(cols, Rational(0));
        for (size_t i = 0; i < rank; ++i) sol[pivots[i]] = m[i][cols];
        std::vector<Rational> poly(sol);
        poly.push_back(Rational(1));  // monic of degree k
        IntPoly mp = to_int_poly_primitive(RatPoly(std::move(poly)));
        if (staf::sign(mp.lc()) < 0) mp = -mp;
        return mp;
    }
    throw std::logic_error("min_poly_over_Q: no dependency up to field degree");
}

AlgebraicNumber NFElem::to_algebraic() const {
    if (!field_ || is_rational()) return AlgebraicNumber(co_[0]);
    IntPoly mp = min_poly_over_Q();
    RatPoly g = as_poly();
    AlgebraicNumber alpha = field_->embedding;
    while (true) {
        // interval evaluation of g over alpha's interval
        Rational lo(0), hi(0);
        bool first = true;
        // Horner with interval arithmetic
        Rational alo = alpha.lo(), ahi = alpha.hi();
        Rational aclo(0), achi(0);
        for (size_t i = g.c.size(); i-- > 0;) {
            if (first) {
                aclo = achi = g.c[i];
                first = false;
                continue;
            }
            Rational p1 = aclo * alo, p2 = aclo * ahi, p3 = achi * alo, p4 = achi * ahi;
            Rational mlo = std::min(std::min(p1, p2), std::min(p3, p4));
            Rational mhi = std::max(std::max(p1, p2), std::max(p3, p4));
            aclo = mlo + g.c[i];
            achi = mhi + g.c[i];
        }
        lo = aclo;
        hi = achi;
        if (mp.degree() == 1) {
            return AlgebraicNumber(make_rational(-mp.coeff(0), mp.coeff(1)));
        }
        if (lo < hi && mp.sign_at(lo) != 0 && mp.sign_at(hi) != 0 && sturm_count(mp, lo, hi) == 1)
            return AlgebraicNumber::make(mp, lo, hi);
        alpha = alpha.refined(alpha.width() / 2);
    }
}

std::string NFElem::to_string() const {
    if (!field_ || is_rational()) return co_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (co_[i] == 0) continue;
        if (!first) os << " + ";
        os << co_[i].get_str();
        if (i >= 1) os << "*L";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

IntPoly field_norm_poly(const IntPoly& field_minpoly, const IntPoly& g, long k) {
    if (k == 0) throw precondition_error("field_norm_poly: k must be nonzero");
    int df = field_minpoly.degree(), dg = g.degree();
    int dz = df * dg;
    std::vector<Integer> xs, ys;
    for (long v = 0; static_cast<int>(xs.size()) < dz + 1; v = (v > 0 ? -v : -v + 1)) {
        Integer x0(v);
        // g(x0 - k*y) as a polynomial in y
        IntPoly acc;
        IntPoly lin({x0, Integer(-k)});
        for (int i = dg; i >= 0; --i) acc = acc * lin + IntPoly::constant(g.coeff(i));
        xs.push_back(x0);
        ys.push_back(IntPoly::resultant(field_minpoly, acc));
    }
    // interpolate (same scheme as the root-composition polynomials)
    RatPoly accp;
    IntPoly master = IntPoly::one();
    for (const auto& x : xs) master = master * IntPoly::linear_root(x);
    IntPoly master_deriv = master.derivative();
    size_t n = xs.size();
    std::vector<Rational> acc(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (ys[i] == 0) continue;
        std::vector<Integer> basis(n);
        Integer carry = master.coeff(static_cast<int>(n));
        for (size_t kk = n; kk-- > 0;) {
            basis[kk] = carry;
            carry = master.coeff(static_cast<int>(kk)) + carry * xs[i];
        }
        Rational w = make_rational(ys[i], master_deriv.eval(xs[i]));
        for (size_t kk = 0; kk < n; ++kk)
            if (basis[kk] != 0) acc[kk] += w * Rational(basis[kk]);
    }
    std::vector<Integer> c(n);
    for (size_t i = 0; i < n; ++i) {
        if (!is_integral(acc[i])) throw std::logic_error("field_norm_poly: non-integer coefficient");
        c[i] = acc[i].get_num();
    }
    return IntPoly(std::move(c));
}

namespace {

// Factor the squarefree g over the field via a squarefree norm; returns the
// rational irreducible factors of the norm together with the shift used.
std::pair<long, std::vector<IntPoly>> squarefree_norm_factors(const IntPoly& g, const FieldPtr& field) {
    for (long k = 1; k <= 40; ++k) {
        IntPoly norm = field_norm_poly(field->minpoly, g, k);
        if (IntPoly::gcd(norm, norm.derivative()).degree() == 0) {
            return {k, distinct_irreducible_factors(norm)};
        }
    }
    throw std::logic_error("squarefree_norm_factors: no squarefree shift found");
}

}  // namespace

std::vector<int> factor_degrees_over_field(const IntPoly& g, const FieldPtr& field) {
    int d = field->degree();
    if (d == 1) {
        std::vector<int> out;
        for (const auto& f : distinct_irreducible_factors(g)) out.push_back(f.degree());
        std::sort(out.begin(), out.end());
        return out;
    }
    auto [k, norm_factors] = squarefree_norm_factors(g, field);
    std::vector<int> out;
    for (const auto& h : norm_factors) {
        if (h.degree() % d != 0) throw std::logic_error("factor_degrees_over_field: bad norm degree");
        out.push_back(h.degree() / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NFElem> roots_in_field(const IntPoly& g, const FieldPtr& field) {
    std::vector<NFElem> out;
    if (field->degree() == 1) {
        for (const auto& f : distinct_irreducible_factors(g))
            if (f.degree() == 1)
                out.push_back(NFElem::from_coords(field, {make_rational(-f.coeff(0), f.coeff(1))}));
        return out;
    }
    auto [k, norm_factors] = squarefree_norm_factors(g, field);
    int d = field->degree();
    NFElem lambda = NFElem::generator(field);
    for (const auto& h : norm_factors) {
        if (h.degree() != d) continue;  // only degree-d norm factors give field roots
        // the factor of g over the field is gcd(g(x), h(x + k*lambda))
        FPoly<NFElem> gf, hf;
        {
            std::vector<NFElem> gc(g.coeffs().size());
            for (size_t i = 0; i < gc.size(); ++i) gc[i] = NFElem(Rational(g.coeffs()[i]));
            gf = FPoly<NFElem>(std::move(gc));
            // h(x + k*lambda): Horner in (x + k*lambda)
            FPoly<NFElem> acc;
            FPoly<NFElem> lin(std::vector<NFElem>{lambda * Rational(k), NFElem(1)});
            for (int i = h.degree(); i >= 0; --i)
                acc = acc * lin + FPoly<NFElem>(std::vector<NFElem>{NFElem(Rational(h.coeff(i)))});
            hf = std::move(acc);
        }
        FPoly<NFElem> gcd = FPoly<NFElem>::gcd(gf, hf);
        if (gcd.degree() == 1) {
            // monic (x - r): root r = -constant
            NFElem r = -(gcd.c[0] / gcd.c[1]);
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace staf
