#include "staf/real_roots.hpp"

#include <algorithm>
#include <sstream>

namespace staf {

namespace {

// Sturm chain with integer polynomials: negated pseudo-remainders scaled by
// positive constants only, so sign variations match the classical chain.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (b.degree() < 0) break;
        IntPoly r = IntPoly::pseudo_rem(a, b);
        if (r.is_zero()) break;
        // pseudo_rem multiplies a by lc(b)^(delta+1); flip so that the stored
        // polynomial is a positive multiple of the negated true remainder
        int delta = a.degree() - b.degree();
        bool mult_negative = sign(b.lc()) < 0 && (delta + 1) % 2 == 1;
        IntPoly next = mult_negative ? r : -r;
        chain.push_back(next.primitive_part());
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sign_variations_at_inf(const std::vector<IntPoly>& chain, int dir) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sign(f.lc());
        if (dir < 0 && f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct Interval {
    Rational lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval iadd(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

// Isolating intervals for the real roots of an irreducible polynomial of
// degree >= 2 (so no rational roots; any rational is a safe endpoint).
std::vector<Interval> isolate_irreducible(const IntPoly& q) {
    std::vector<IntPoly> chain = sturm_chain(q);
    Rational bound = q.root_bound();
    // round up to an integer to keep endpoints small
    Integer b = bound.get_num() / bound.get_den() + 1;
    Rational lo(-b), hi(b);
    std::vector<Interval> out;
    struct Item {
        Rational lo, hi;
        int nroots;
    };
    std::vector<Item> stack;
    int total = sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.nroots == 1) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        Rational mid = (it.lo + it.hi) / 2;
        int left = sign_variations_at(chain, it.lo) - sign_variations_at(chain, mid);
        int right = it.nroots - left;
        if (left > 0) stack.push_back({it.lo, mid, left});
        if (right > 0) stack.push_back({mid, it.hi, right});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

// Shrink an isolating interval of q (irreducible, degree >= 2) by sign
// bisection; q has opposite signs at the endpoints of any isolating interval.
void refine_once(const IntPoly& q, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    int sm = q.sign_at(mid);
    int sl = q.sign_at(lo);
    if (sm == sl)
        lo = mid;
    else
        hi = mid;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& value) {
    minpoly_ = IntPoly({-value.get_num(), value.get_den()});
    lo_ = hi_ = value;
}

AlgebraicNumber AlgebraicNumber::make(IntPoly minpoly, Rational lo, Rational hi) {
    AlgebraicNumber a(Rational(0));
    if (minpoly.degree() < 1) throw precondition_error("AlgebraicNumber: constant minimal polynomial");
    if (minpoly.degree() == 1) {
        Rational v = make_rational(-minpoly.coeff(0), minpoly.coeff(1));
        if (v < lo || v > hi) throw precondition_error("AlgebraicNumber: interval misses the root");
        return AlgebraicNumber(v);
    }
    if (!(lo < hi)) throw precondition_error("AlgebraicNumber: empty interval");
    if (minpoly.sign_at(lo) == 0 || minpoly.sign_at(hi) == 0)
        throw precondition_error("AlgebraicNumber: endpoint is a root");
    if (sturm_count(minpoly, lo, hi) != 1)
        throw precondition_error("AlgebraicNumber: interval does not isolate one root");
    a.minpoly_ = std::move(minpoly);
    a.lo_ = std::move(lo);
    a.hi_ = std::move(hi);
    return a;
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw precondition_error("rational_value of irrational algebraic number");
    return make_rational(-minpoly_.coeff(0), minpoly_.coeff(1));
}

int AlgebraicNumber::sign() const {
    if (is_rational()) return sgn(rational_value());
    // irreducible of degree >= 2 never vanishes at 0
    AlgebraicNumber a = *this;
    while (true) {
        if (a.lo_ > 0) return 1;
        if (a.hi_ < 0) return -1;
        refine_once(a.minpoly_, a.lo_, a.hi_);
    }
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& max_width) const {
    if (is_rational()) return *this;
    AlgebraicNumber a = *this;
    while (a.width() > max_width) refine_once(a.minpoly_, a.lo_, a.hi_);
    return a;
}

double AlgebraicNumber::to_double() const {
    AlgebraicNumber a = refined(make_rational(Integer(1), Integer(1) << 60));
    return Rational(a.lo_ + a.hi_).get_d() / 2.0;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value());
    AlgebraicNumber x = a, y = b;
    bool same_poly = x.minpoly_ == y.minpoly_;
    while (true) {
        // disjoint intervals decide the order; at a touching endpoint the
        // strict interior containment of irrational roots still decides
        if (x.hi_ < y.lo_) return -1;
        if (y.hi_ < x.lo_) return 1;
        if (x.hi_ == y.lo_) return -1;
        if (y.hi_ == x.lo_) return 1;
        if (same_poly) {
            // equal iff the interval hull still isolates a single root
            Rational lo = std::min(x.lo_, y.lo_), hi = std::max(x.hi_, y.hi_);
            if (sturm_count(x.minpoly_, lo, hi) == 1) return 0;
        }
        // distinct minimal polynomials never share a root, so refinement
        // separates the remaining cases
        if (!x.is_rational()) refine_once(x.minpoly_, x.lo_, x.hi_);
        if (!y.is_rational()) refine_once(y.minpoly_, y.lo_, y.hi_);
    }
}

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return rational_value().get_str();
    std::ostringstream os;
    os << "root of " << minpoly_.to_string() << " in (" << lo_.get_str() << ", " << hi_.get_str() << ")";
    return os.str();
}

int sturm_count(const IntPoly& squarefree, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return 0;
    std::vector<IntPoly> chain = sturm_chain(squarefree);
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int sturm_count_all(const IntPoly& squarefree) {
    std::vector<IntPoly> chain = sturm_chain(squarefree);
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw precondition_error("isolate_real_roots: zero polynomial");
    std::vector<AlgebraicNumber> out;
    if (p.degree() == 0) return out;
    for (const IntPoly& q : distinct_irreducible_factors(p)) {
        if (q.degree() == 1) {
            out.emplace_back(make_rational(-q.coeff(0), q.coeff(1)));
        } else {
            for (const auto& iv : isolate_irreducible(q))
                out.push_back(AlgebraicNumber::make(q, iv.lo, iv.hi));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a < b; });
    // intervals from different factors may overlap; shrink until pairwise
    // disjoint (the values are distinct, so this terminates)
    for (size_t i = 0; i + 1 < out.size(); ++i)
        while (!(out[i].hi() < out[i + 1].lo())) {
            out[i] = out[i].refined(out[i].width() / 2);
            out[i + 1] = out[i + 1].refined(out[i + 1].width() / 2);
        }
    return out;
}

AlgebraicNumber alg_neg(const AlgebraicNumber& a) {
    if (a.is_rational()) return AlgebraicNumber(Rational(-a.rational_value()));
    IntPoly m = a.minpoly().compose_negate();
    if (sign(m.lc()) < 0) m = -m;
    return AlgebraicNumber::make(m, -a.hi(), -a.lo());
}

AlgebraicNumber alg_inv(const AlgebraicNumber& a) {
    if (a.is_rational()) {
        Rational v = a.rational_value();
        if (v == 0) throw precondition_error("alg_inv: zero");
        return AlgebraicNumber(Rational(1) / v);
    }
    AlgebraicNumber s = a;
    while (s.lo() <= 0 && s.hi() >= 0) s = s.refined(s.width() / 2);
    IntPoly m = s.minpoly().reverse().primitive_part();
    if (sign(m.lc()) < 0) m = -m;
    return AlgebraicNumber::make(m, Rational(1) / s.hi(), Rational(1) / s.lo());
}

AlgebraicNumber alg_mul_rat(const AlgebraicNumber& a, const Rational& r) {
    if (r == 0) return AlgebraicNumber(Rational(0));
    if (a.is_rational()) return AlgebraicNumber(Rational(a.rational_value() * r));
    IntPoly m = a.minpoly().scale_roots(r);
    if (sign(m.lc()) < 0) m = -m;
    Rational lo = a.lo() * r, hi = a.hi() * r;
    if (r < 0) std::swap(lo, hi);
    return AlgebraicNumber::make(m, lo, hi);
}

namespace {

// Pick the unique root of candidates matched by the exact value described by
// the interval-producing function shrink(); candidates must be pairwise
// distinct real algebraic numbers covering the value.
AlgebraicNumber select_candidate(std::vector<AlgebraicNumber> candidates,
                                 const std::function<Interval()>& current,
                                 const std::function<void()>& shrink) {
    while (true) {
        Interval p = current();
        int hits = 0;
        const AlgebraicNumber* hit = nullptr;
        for (const auto& c : candidates) {
            if (intersects({c.lo(), c.hi()}, p)) {
                ++hits;
                hit = &c;
            }
        }
        if (hits == 1) return *hit;
        if (hits == 0) throw std::logic_error("algebraic arithmetic: no candidate matches");
        shrink();
        for (auto& c : candidates) c = c.refined(c.width() / 2);
    }
}

}  // namespace

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational()) return alg_mul_rat(b, a.rational_value());
    if (b.is_rational()) return alg_mul_rat(a, b.rational_value());
    IntPoly r = root_product_poly(a.minpoly(), b.minpoly());
    std::vector<AlgebraicNumber> candidates = isolate_real_roots(r);
    AlgebraicNumber x = a, y = b;
    return select_candidate(
        std::move(candidates),
        [&]() { return imul({x.lo(), x.hi()}, {y.lo(), y.hi()}); },
        [&]() {
            x = x.refined(x.width() / 2);
            y = y.refined(y.width() / 2);
        });
}

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && a.rational_value() == 0) return b;
    if (b.is_rational() && b.rational_value() == 0) return a;
    if (a.is_rational() && b.is_rational())
        return AlgebraicNumber(Rational(a.rational_value() + b.rational_value()));
    if (a.is_rational() || b.is_rational()) {
        // shift roots of the irrational operand by the rational one
        const AlgebraicNumber& irr = a.is_rational() ? b : a;
        Rational r = (a.is_rational() ? a : b).rational_value();
        // minpoly(t - r), cleared to integer coefficients
        RatPoly shifted;
        {
            RatPoly acc, lin({-r, Rational(1)});
            for (int k = irr.minpoly().degree(); k >= 0; --k)
                acc = acc * lin + RatPoly({Rational(irr.minpoly().coeff(k))});
            shifted = acc;
        }
        IntPoly m = to_int_poly_primitive(shifted);
        if (sign(m.lc()) < 0) m = -m;
        return AlgebraicNumber::make(m, irr.lo() + r, irr.hi() + r);
    }
    IntPoly r = root_sum_poly(a.minpoly(), b.minpoly());
    std::vector<AlgebraicNumber> candidates = isolate_real_roots(r);
    AlgebraicNumber x = a, y = b;
    return select_candidate(
        std::move(candidates),
        [&]() { return iadd({x.lo(), x.hi()}, {y.lo(), y.hi()}); },
        [&]() {
            x = x.refined(x.width() / 2);
            y = y.refined(y.width() / 2);
        });
}

AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned k) {
    if (k == 0) return AlgebraicNumber(Rational(1));
    if (k == 1) return a;
    if (a.is_rational()) {
        Rational v(1);
        for (unsigned i = 0; i < k; ++i) v *= a.rational_value();
        return AlgebraicNumber(v);
    }
    IntPoly r = root_power_poly(a.minpoly(), k);
    std::vector<AlgebraicNumber> candidates = isolate_real_roots(r);
    AlgebraicNumber x = a;
    while (x.lo() <= 0 && x.hi() >= 0) x = x.refined(x.width() / 2);
    return select_candidate(
        std::move(candidates),
        [&]() {
            Interval p{Rational(1), Rational(1)};
            for (unsigned i = 0; i < k; ++i) p = imul(p, {x.lo(), x.hi()});
            return p;
        },
        [&]() { x = x.refined(x.width() / 2); });
}

int unit_circle_root_count(const IntPoly& q) {
    if (q.degree() < 1) throw precondition_error("unit_circle_root_count: constant");
    if (q.degree() == 1) {
        Rational root = make_rational(-q.coeff(0), q.coeff(1));
        return (root == 1 || root == -1) ? 1 : 0;
    }
    // roots on the circle force the root set to be closed under z -> 1/z,
    // i.e. the polynomial is reciprocal up to sign
    IntPoly rev = q.reverse();
    if (rev != q && rev != -q) return 0;
    if (rev == -q) return 0;  // anti-reciprocal has root 1; impossible if irreducible
    int d = q.degree();
    if (d % 2 == 1) return 0;  // palindromic odd degree has root -1
    int e = d / 2;
    // write q / z^e as a polynomial in w = z + 1/z via z^k + z^-k
    std::vector<IntPoly> c(static_cast<size_t>(e) + 1);
    c[0] = IntPoly::constant(Integer(2));
    if (e >= 1) c[1] = IntPoly({Integer(0), Integer(1)});
    for (int k = 2; k <= e; ++k)
        c[static_cast<size_t>(k)] = IntPoly({Integer(0), Integer(1)}) * c[static_cast<size_t>(k - 1)] - c[static_cast<size_t>(k - 2)];
    IntPoly Q = IntPoly::constant(q.coeff(e));
    for (int k = 1; k <= e; ++k) Q = Q + c[static_cast<size_t>(k)] * q.coeff(e + k);
    // roots of q on |z| = 1 correspond to real roots of Q in (-2, 2)
    return 2 * sturm_count(Q, Rational(-2), Rational(2));
}

bool is_cyclotomic(const IntPoly& q) {
    if (q.degree() < 1 || !q.is_monic()) return false;
    return unit_circle_root_count(q) == q.degree();
}

namespace {

// strip t^k and return the zero-root multiplicity
IntPoly strip_zero_roots(const IntPoly& p, int& mult) {
    std::vector<Integer> c(p.coeffs());
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    mult = static_cast<int>(k);
    return IntPoly(std::vector<Integer>(c.begin() + static_cast<long>(k), c.end()));
}

}  // namespace

std::vector<AlgebraicNumber> positive_pair_product_values(const IntPoly& p) {
    int zmult = 0;
    IntPoly p0 = strip_zero_roots(p, zmult);
    std::vector<AlgebraicNumber> out;
    if (p0.degree() < 1) return out;
    IntPoly comp = root_product_poly(p0, p0);
    for (auto& r : isolate_real_roots(comp))
        if (r.sign() > 0) out.push_back(r);
    return out;
}

AlgebraicNumber max_root_modulus_squared(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw precondition_error("max_root_modulus_squared: no roots");
    int zmult = 0;
    IntPoly p0 = strip_zero_roots(p, zmult);
    if (p0.degree() < 1) return AlgebraicNumber(Rational(0));
    IntPoly comp = root_product_poly(p0, p0);
    std::vector<AlgebraicNumber> roots = isolate_real_roots(comp);
    // the top root-pair product is |r_max|^2: it is real (conjugates pair up)
    // and every real pair product is bounded by it in absolute value
    return roots.back();
}

AlgebraicNumber min_root_modulus_squared(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw precondition_error("min_root_modulus_squared: no roots");
    if (p.constant_term() == 0) return AlgebraicNumber(Rational(0));
    for (auto& r : positive_pair_product_values(p)) return r;  // first = smallest
    throw std::logic_error("min_root_modulus_squared: no positive pair product");
}

int compare_power_products(const std::vector<std::pair<AlgebraicNumber, unsigned>>& lhs,
                           const std::vector<std::pair<AlgebraicNumber, unsigned>>& rhs) {
    for (const auto& side : {lhs, rhs})
        for (const auto& [a, e] : side)
            if (a.sign() < 0) throw precondition_error("compare_power_products: negative base");
    auto has_zero = [](const std::vector<std::pair<AlgebraicNumber, unsigned>>& v) {
        for (const auto& [a, e] : v)
            if (e > 0 && a.sign() == 0) return true;
        return false;
    };
    bool lz = has_zero(lhs), rz = has_zero(rhs);
    if (lz || rz) return lz && rz ? 0 : (lz ? -1 : 1);
    auto all_rational = [](const std::vector<std::pair<AlgebraicNumber, unsigned>>& v) {
        for (const auto& [a, e] : v)
            if (!a.is_rational()) return false;
        return true;
    };
    if (all_rational(lhs) && all_rational(rhs)) {
        Rational l(1), r(1);
        for (const auto& [a, e] : lhs) l *= pow(a.rational_value(), static_cast<long>(e));
        for (const auto& [a, e] : rhs) r *= pow(a.rational_value(), static_cast<long>(e));
        return cmp(l, r);
    }
    std::vector<std::pair<AlgebraicNumber, unsigned>> l = lhs, r = rhs;
    for (auto* side : {&l, &r})
        for (auto& [a, e] : *side)
            while (!(a.lo() > 0)) a = a.refined(a.width() / 2);
    for (int iter = 0; iter < 256; ++iter) {
        Rational llo(1), lhi(1), rlo(1), rhi(1);
        for (const auto& [a, e] : l) {
            llo *= pow(a.lo(), static_cast<long>(e));
            lhi *= pow(a.hi(), static_cast<long>(e));
        }
        for (const auto& [a, e] : r) {
            rlo *= pow(a.lo(), static_cast<long>(e));
            rhi *= pow(a.hi(), static_cast<long>(e));
        }
        if (lhi < rlo) return -1;
        if (rhi < llo) return 1;
        for (auto* side : {&l, &r})
            for (auto& [a, e] : *side) a = a.refined(a.width() / 2);
    }
    // refinement could not separate the values; decide symbolically
    AlgebraicNumber lv{Rational(1)}, rv{Rational(1)};
    for (const auto& [a, e] : lhs) lv = alg_mul(lv, alg_pow(a, e));
    for (const auto& [a, e] : rhs) rv = alg_mul(rv, alg_pow(a, e));
    return AlgebraicNumber::compare(lv, rv);
}

int sign_at_algebraic(const RatPoly& g, const AlgebraicNumber& alpha) {
    if (g.is_zero()) return 0;
    if (alpha.is_rational()) return sgn(g.eval(alpha.rational_value()));
    // exact zero test: reduce modulo the minimal polynomial
    RatPoly rem = RatPoly::divmod(g, to_rat_poly(alpha.minpoly())).second;
    if (rem.is_zero()) return 0;
    AlgebraicNumber a = alpha;
    while (true) {
        Interval acc{Rational(0), Rational(0)};
        Interval x{a.lo(), a.hi()};
        for (size_t i = rem.c.size(); i-- > 0;) {
            acc = imul(acc, x);
            acc = iadd(acc, {rem.c[i], rem.c[i]});
        }
        if (acc.lo > 0) return 1;
        if (acc.hi < 0) return -1;
        a = a.refined(a.width() / 2);
    }
}

}  // namespace staf
