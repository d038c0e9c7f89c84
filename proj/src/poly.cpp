#include "staf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace staf {

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n == 0) throw precondition_error("factor_integer: zero");
    std::vector<std::pair<Integer, unsigned>> out;
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Integer> prime_support(const Integer& n) {
    std::vector<Integer> primes;
    for (auto& [p, e] : factor_integer(n)) primes.push_back(p);
    return primes;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const Integer& coeff, int k) {
    if (coeff == 0) return IntPoly();
    std::vector<Integer> c(static_cast<size_t>(k) + 1);
    c.back() = coeff;
    return IntPoly(std::move(c));
}

const Integer& IntPoly::coeff(int i) const {
    static const Integer zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Integer& IntPoly::lc() const {
    if (c_.empty()) throw precondition_error("lc of zero polynomial");
    return c_.back();
}

const Integer& IntPoly::constant_term() const {
    static const Integer zero(0);
    return c_.empty() ? zero : c_.front();
}

int IntPoly::compare(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Integer& s) const {
    if (s == 0) return IntPoly();
    std::vector<Integer> r(c_);
    for (auto& x : r) x *= s;
    return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& s, const IntPoly& p) { return p * s; }

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Integer> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Integer IntPoly::content() const {
    Integer g(0);
    for (const auto& x : c_) g = staf::gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Integer g = content();
    std::vector<Integer> r(c_);
    for (auto& x : r) x = divexact(x, g);
    return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw precondition_error("divmod: division by zero polynomial");
    IntPoly rem = a;
    if (a.degree() < b.degree()) return {IntPoly(), rem};
    std::vector<Integer> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (!divides(b.lc(), rem.lc()))
            throw precondition_error("divmod: quotient leaves Z[t]");
        Integer f = divexact(rem.lc(), b.lc());
        int k = rem.degree() - b.degree();
        q[static_cast<size_t>(k)] = f;
        std::vector<Integer> rc = rem.c_;
        for (int i = 0; i <= b.degree(); ++i)
            rc[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        rem = IntPoly(std::move(rc));
    }
    return {IntPoly(std::move(q)), rem};
}

std::optional<IntPoly> IntPoly::try_exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    IntPoly rem = a;
    std::vector<Integer> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Integer(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (!divides(b.lc(), rem.lc())) return std::nullopt;
        Integer f = divexact(rem.lc(), b.lc());
        int k = rem.degree() - b.degree();
        q[static_cast<size_t>(k)] = f;
        std::vector<Integer> rc = rem.c_;
        for (int i = 0; i <= b.degree(); ++i)
            rc[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        rem = IntPoly(std::move(rc));
    }
    if (!rem.is_zero()) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly IntPoly::exact_divide(const IntPoly& a, const IntPoly& b) {
    auto q = try_exact_divide(a, b);
    if (!q) throw precondition_error("exact_divide: not a divisor");
    return *q;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw precondition_error("pseudo_rem: zero divisor");
    if (a.degree() < b.degree()) return a;
    int delta = a.degree() - b.degree();
    Integer mult = staf::pow(b.lc(), static_cast<unsigned long>(delta) + 1);
    IntPoly rem = a * mult;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Integer f = divexact(rem.lc(), b.lc());
        int k = rem.degree() - b.degree();
        rem = rem - IntPoly::monomial(f, k) * b;
    }
    return rem;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.primitive_part() * Integer(sign(b.lc()));
    if (b.is_zero()) return a.primitive_part() * Integer(sign(a.lc()));
    IntPoly g = a.primitive_part();
    IntPoly h = b.primitive_part();
    if (g.degree() < h.degree()) std::swap(g, h);
    // primitive PRS; degrees here are small enough that coefficient growth
    // inside pseudo_rem is harmless
    while (!h.is_zero()) {
        IntPoly r = pseudo_rem(g, h);
        g = std::move(h);
        h = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (sign(g.lc()) < 0) g = -g;
    return g;
}

namespace {

// Fraction-free determinant (Bareiss) of a square integer matrix, used for
// Sylvester-matrix resultants. Matrix layout: m[row][col].
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    size_t n = m.size();
    if (n == 0) return Integer(1);
    Integer denom(1);
    int sgn_acc = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Integer(0);
            std::swap(m[k], m[pivot]);
            sgn_acc = -sgn_acc;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(t, denom);
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sgn_acc > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Integer IntPoly::resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) return staf::pow(a.lc(), static_cast<unsigned long>(n));
    if (n == 0) return staf::pow(b.lc(), static_cast<unsigned long>(m));
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = a.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = b.coeff(n - i);
    return bareiss_det(std::move(s));
}

Integer IntPoly::discriminant() const {
    int n = degree();
    if (n < 1) throw precondition_error("discriminant: degree < 1");
    Integer res = resultant(*this, derivative());
    Integer d = divexact(res, lc());
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? d : -d;
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero()) throw precondition_error("squarefree_part of zero polynomial");
    if (degree() == 0) return IntPoly::one();
    IntPoly g = gcd(*this, derivative());
    IntPoly sf = exact_divide(primitive_part(), g);
    if (sign(sf.lc()) < 0) sf = -sf;
    return sf;
}

std::vector<std::pair<IntPoly, int>> IntPoly::squarefree_decomposition() const {
    if (is_zero()) throw precondition_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly p = primitive_part();
    if (sign(p.lc()) < 0) p = -p;
    if (p.degree() == 0) return out;
    // Yun's algorithm
    IntPoly d = p.derivative();
    IntPoly a = gcd(p, d);
    IntPoly b = exact_divide(p, a);
    IntPoly c = exact_divide(d, a);
    int mult = 1;
    while (true) {
        IntPoly delta = c - b.derivative();
        if (delta.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b, mult);
            break;
        }
        IntPoly f = gcd(b, delta);
        if (f.degree() > 0) out.emplace_back(f, mult);
        b = exact_divide(b, f);
        c = exact_divide(delta, f);
        ++mult;
        if (b.degree() == 0) break;
    }
    return out;
}

IntPoly IntPoly::compose_negate() const {
    std::vector<Integer> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reverse() const {
    std::vector<Integer> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_roots(const Rational& r) const {
    if (is_zero()) return IntPoly();
    const Integer& u = r.get_num();
    const Integer& v = r.get_den();
    size_t n = c_.size() - 1;
    std::vector<Integer> out(c_.size());
    // coefficient of t^k becomes a_k * u^(n-k) * v^k
    for (size_t k = 0; k < c_.size(); ++k)
        out[k] = c_[k] * staf::pow(u, static_cast<unsigned long>(n - k)) * staf::pow(v, static_cast<unsigned long>(k));
    IntPoly res(std::move(out));
    return res.primitive_part();
}

IntPoly IntPoly::shift(const Integer& a) const {
    // Horner-style: p(t - a)
    IntPoly result;
    IntPoly base({-a, Integer(1)});
    for (size_t i = c_.size(); i-- > 0;) result = result * base + IntPoly::constant(c_[i]);
    return result;
}

Rational IntPoly::root_bound() const {
    if (is_zero() || degree() == 0) return Rational(0);
    Integer maxabs(0);
    for (int i = 0; i < degree(); ++i) {
        Integer a = abs(coeff(i));
        if (a > maxabs) maxabs = a;
    }
    Rational b = Rational(1) + make_rational(maxabs, abs(lc()));
    return b;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = coeff(i);
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (sign(a) < 0) os << "-";
            first = false;
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rational> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rational(p.coeffs()[i]);
    return RatPoly(std::move(c));
}

IntPoly to_int_poly_primitive(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Integer den(1);
    for (const auto& q : p.c) den = lcm(den, q.get_den());
    std::vector<Integer> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rational scaled = p.c[i] * Rational(den);
        c[i] = scaled.get_num();
    }
    return IntPoly(std::move(c)).primitive_part();
}

namespace {

// Lagrange interpolation through integer points (x_i, y_i); the callers
// guarantee the result has integer coefficients. Each basis polynomial is
// obtained from the master product by one synthetic division, and its
// denominator is the derivative of the master product at x_i.
IntPoly interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    size_t n = xs.size();
    IntPoly master = IntPoly::one();
    for (const auto& x : xs) master = master * IntPoly::linear_root(x);
    IntPoly master_deriv = master.derivative();
    std::vector<Rational> acc(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (ys[i] == 0) continue;
        // synthetic division of master by (t - x_i)
        std::vector<Integer> basis(n);
        Integer carry = master.coeff(static_cast<int>(n));
        for (size_t k = n; k-- > 0;) {
            basis[k] = carry;
            carry = master.coeff(static_cast<int>(k)) + carry * xs[i];
        }
        Rational w = make_rational(ys[i], master_deriv.eval(xs[i]));
        for (size_t k = 0; k < n; ++k)
            if (basis[k] != 0) acc[k] += w * Rational(basis[k]);
    }
    std::vector<Integer> c(n);
    for (size_t i = 0; i < n; ++i) {
        if (!is_integral(acc[i]))
            throw std::logic_error("interpolate_integer: non-integer coefficient");
        c[i] = acc[i].get_num();
    }
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly root_product_poly(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw precondition_error("root_product_poly: zero input");
    if (q.constant_term() == 0) throw precondition_error("root_product_poly: q(0) = 0");
    int m = p.degree(), n = q.degree();
    if (m == 0 || n == 0) return IntPoly::one();
    // Res_x(p(x), x^n q(z/x)) has degree <= m*n in z and leading x-coefficient
    // q(0), constant in z, so specialization commutes with the resultant.
    int dz = m * n;
    std::vector<Integer> xs, ys;
    for (long v = 0; static_cast<int>(xs.size()) < dz + 1; v = (v > 0 ? -v : -v + 1)) {
        Integer z(v);
        std::vector<Integer> qc(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            qc[static_cast<size_t>(n - k)] = q.coeff(k) * staf::pow(z, static_cast<unsigned long>(k));
        IntPoly spec((std::vector<Integer>(qc)));
        xs.push_back(z);
        ys.push_back(IntPoly::resultant(p, spec));
    }
    return interpolate_integer(xs, ys);
}

IntPoly root_power_poly(const IntPoly& p, unsigned k) {
    if (p.is_zero()) throw precondition_error("root_power_poly: zero input");
    if (k == 0) throw precondition_error("root_power_poly: k = 0");
    if (k == 1) return p;
    int m = p.degree();
    if (m == 0) return IntPoly::one();
    int dz = m;
    std::vector<Integer> xs, ys;
    for (long v = 0; static_cast<int>(xs.size()) < dz + 1; v = (v > 0 ? -v : -v + 1)) {
        Integer z(v);
        // Res_x(p(x), z - x^k)
        std::vector<Integer> g(static_cast<size_t>(k) + 1, Integer(0));
        g[0] = z;
        g[k] = -1;
        xs.push_back(z);
        ys.push_back(IntPoly::resultant(p, IntPoly(std::move(g))));
    }
    return interpolate_integer(xs, ys);
}

IntPoly root_sum_poly(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw precondition_error("root_sum_poly: zero input");
    int m = p.degree(), n = q.degree();
    if (m == 0 || n == 0) return IntPoly::one();
    int dz = m * n;
    std::vector<Integer> xs, ys;
    for (long v = 0; static_cast<int>(xs.size()) < dz + 1; v = (v > 0 ? -v : -v + 1)) {
        Integer z(v);
        // q(z - x) as a polynomial in x; leading coefficient is +-lc(q),
        // constant in z, so no degree drop at any specialization.
        IntPoly acc;
        IntPoly lin({z, Integer(-1)});
        for (int k = n; k >= 0; --k) acc = acc * lin + IntPoly::constant(q.coeff(k));
        xs.push_back(z);
        ys.push_back(IntPoly::resultant(p, acc));
    }
    return interpolate_integer(xs, ys);
}

}  // namespace staf
