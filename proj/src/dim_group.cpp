#include "staf/dim_group.hpp"

namespace staf {

DimensionGroupRealization dim_group(const IntMat& j) {
    DimensionGroupRealization dg;
    dg.j = j;
    dg.perron = perron_data(j);
    dg.det = det(j);
    dg.det_primes = prime_support(dg.det);
    return dg;
}

namespace {

bool integral_vec(const std::vector<Rational>& v) {
    for (const auto& q : v)
        if (!is_integral(q)) return false;
    return true;
}

}  // namespace

MembershipResult membership(const DimensionGroupRealization& dg, const std::vector<Rational>& g,
                            long m_max) {
    if (static_cast<int>(g.size()) != dg.j.rows()) throw precondition_error("membership: dimension mismatch");
    // a denominator prime off the determinant support can never be cleared
    for (const auto& q : g) {
        Integer den = q.get_den();
        for (const auto& p : prime_support(den == 0 ? Integer(1) : den)) {
            bool onsupport = false;
            for (const auto& dp : dg.det_primes)
                if (dp == p) onsupport = true;
            if (!onsupport) return {MembershipResult::Kind::NotMember, -1};
        }
    }
    RatMat jr = to_rational(dg.j);
    std::vector<Rational> h = g;
    for (long m = 0; m <= m_max; ++m) {
        if (integral_vec(h)) return {MembershipResult::Kind::Member, m};
        h = mat_vec(jr, h);
    }
    return {MembershipResult::Kind::Unknown, -1};
}

GroupElement as_element(const DimensionGroupRealization& dg, const std::vector<Rational>& g,
                        long m_max) {
    MembershipResult r = membership(dg, g, m_max);
    if (r.kind != MembershipResult::Kind::Member)
        throw precondition_error(r.kind == MembershipResult::Kind::NotMember
                                     ? "as_element: not a member of the dimension group"
                                     : "as_element: membership unknown within budget");
    return GroupElement{g, r.witness};
}

NFElem trace_functional(const DimensionGroupRealization& dg, const std::vector<Rational>& g) {
    if (static_cast<int>(g.size()) != dg.j.rows())
        throw precondition_error("trace_functional: dimension mismatch");
    NFElem acc;
    for (size_t i = 0; i < g.size(); ++i) acc = acc + dg.perron.left[i] * g[i];
    return acc;
}

bool is_positive(const DimensionGroupRealization& dg, const GroupElement& g) {
    bool zero = true;
    for (const auto& q : g.v)
        if (q != 0) zero = false;
    if (zero) return true;
    return trace_functional(dg, g.v).sign() > 0;
}

Integer quotient_index(const DimensionGroupRealization& dg) {
    Integer d = abs(dg.det);
    SmithForm sf = smith_form(dg.j);
    Integer prod(1);
    for (int i = 0; i < sf.D.rows(); ++i) prod *= sf.D.at(i, i);
    if (prod != d) throw std::logic_error("quotient_index: Smith invariants disagree with |det|");
    return d;
}

std::vector<Rational> shift_apply(const DimensionGroupRealization& dg, const std::vector<Rational>& g) {
    return mat_vec(to_rational(dg.j), g);
}

std::vector<Rational> shift_apply_inverse(const DimensionGroupRealization& dg,
                                          const std::vector<Rational>& g) {
    return mat_vec(inverse(dg.j), g);
}

bool closed_form_power_check(const IntMat& m, long n) {
    IntMat j_form = IntMat::from_rows({{Integer(4), Integer(1)}, {Integer(32), Integer(0)}});
    IntMat k_form = IntMat::from_rows({{Integer(6), Integer(1)}, {Integer(16), Integer(0)}});
    Rational s = (n % 2 == 0) ? Rational(1) : Rational(-1);
    RatMat expected(2, 2);
    if (m == j_form) {
        // (4^(n-1)/3) * [[4(2*2^n + s), 2^n - s], [32(2^n - s), 4(2^n + 2s)]]
        Rational f = pow(Rational(4), n - 1) / Rational(3);
        Rational t = pow(Rational(2), n);
        expected.at(0, 0) = f * Rational(4) * (2 * t + s);
        expected.at(0, 1) = f * (t - s);
        expected.at(1, 0) = f * Rational(32) * (t - s);
        expected.at(1, 1) = f * Rational(4) * (t + 2 * s);
    } else if (m == k_form) {
        // (2^(n-1)/5) * [[2(4*4^n + s), 4^n - s], [16(4^n - s), 2(4^n + 4s)]]
        Rational f = pow(Rational(2), n - 1) / Rational(5);
        Rational t = pow(Rational(4), n);
        expected.at(0, 0) = f * Rational(2) * (4 * t + s);
        expected.at(0, 1) = f * (t - s);
        expected.at(1, 0) = f * Rational(16) * (t - s);
        expected.at(1, 1) = f * Rational(2) * (t + 4 * s);
    } else {
        throw precondition_error("closed_form_power_check: unsupported matrix");
    }
    return mat_pow(m, n) == expected;
}

}  // namespace staf
