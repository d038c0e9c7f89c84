#include "staf/perron.hpp"

namespace staf {

void normalize_eigenvector(std::vector<NFElem>& v) {
    // clear denominators across all coordinates, divide by the content,
    // then fix the sign of the first nonzero entry under the embedding
    Integer den(1), num(0);
    for (const auto& e : v)
        for (const auto& q : e.coords()) den = lcm(den, q.get_den());
    for (const auto& e : v)
        for (const auto& q : e.coords()) num = staf::gcd(num, Integer(q.get_num() * (den / q.get_den())));
    if (num == 0) throw precondition_error("normalize_eigenvector: zero vector");
    Rational scale = make_rational(den, num);
    for (auto& e : v) e = e * scale;
    for (const auto& e : v) {
        int s = e.sign();
        if (s == 0) continue;
        if (s < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

namespace {

std::vector<NFElem> eigenvector_impl(const IntMat& m, const NFElem& eigenvalue, bool left) {
    if (!m.is_square()) throw precondition_error("eigenvector: non-square matrix");
    const FieldPtr& field = eigenvalue.field();
    if (!field) throw precondition_error("eigenvector: eigenvalue must carry its field");
    int n = m.rows();
    NFMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Integer entry = left ? m.at(j, i) : m.at(i, j);
            NFElem x = NFElem(Rational(entry));
            if (i == j) x = x - eigenvalue;
            a.at(i, j) = NFElem::from_coords(field, (x + NFElem::zero(field)).coords());
        }
    auto basis = nullspace(a);
    if (basis.size() != 1)
        throw precondition_error("eigenvector: eigenspace dimension " + std::to_string(basis.size()) +
                                 " (expected 1)");
    std::vector<NFElem> v = basis[0];
    // the free coordinate of the nullspace vector is a bare rational one;
    // lift every entry into the field so coordinates have full length
    for (auto& e : v) e = e + NFElem::zero(field);
    normalize_eigenvector(v);
    return v;
}

}  // namespace

std::vector<NFElem> left_eigenvector(const IntMat& m, const NFElem& eigenvalue) {
    return eigenvector_impl(m, eigenvalue, true);
}

std::vector<NFElem> right_eigenvector(const IntMat& m, const NFElem& eigenvalue) {
    return eigenvector_impl(m, eigenvalue, false);
}

AlgebraicNumber secondary_modulus_squared(const PerronData& pd, bool* exists) {
    std::vector<AlgebraicNumber> candidates;
    AlgebraicNumber lambda_sq = alg_pow(pd.lambda, 2);
    for (const auto& [q, mult] : pd.factors) {
        if (q == pd.pf_factor) {
            if (q.degree() >= 2) {
                // within the PF factor: the largest pair product is lambda^2;
                // the next distinct positive value bounds the secondary modulus
                auto vals = positive_pair_product_values(q);
                if (!vals.empty() && !(vals.back() == lambda_sq))
                    throw std::logic_error("secondary_modulus_squared: top pair product != lambda^2");
                if (vals.size() >= 2) candidates.push_back(vals[vals.size() - 2]);
            }
        } else {
            candidates.push_back(max_root_modulus_squared(q));
        }
    }
    if (candidates.empty()) {
        if (exists) *exists = false;
        return AlgebraicNumber(Rational(0));
    }
    if (exists) *exists = true;
    AlgebraicNumber best = candidates[0];
    for (const auto& c : candidates)
        if (c > best) best = c;
    return best;
}

AlgebraicNumber inverse_modulus_squared(const PerronData& pd) {
    AlgebraicNumber best(Rational(0));
    bool first = true;
    for (const auto& [q, mult] : pd.factors) {
        IntPoly rev = q.reverse().primitive_part();
        if (sign(rev.lc()) < 0) rev = -rev;
        AlgebraicNumber c = max_root_modulus_squared(rev);
        if (first || c > best) {
            best = c;
            first = false;
        }
    }
    return best;
}

PerronData perron_data(const IntMat& j) {
    if (!j.is_square() || j.rows() == 0) throw precondition_error("perron_data: non-square matrix");
    if (!is_nonnegative(j)) throw precondition_error("perron_data: negative entry");
    if (!is_primitive(j)) throw precondition_error("perron_data: matrix is not primitive");
    PerronData pd;
    pd.matrix = j;
    pd.cp = charpoly(j);
    if (pd.cp.constant_term() == 0) throw precondition_error("perron_data: singular matrix");
    pd.factors = factor_over_Z(pd.cp).factors;

    std::vector<AlgebraicNumber> real_roots = isolate_real_roots(pd.cp);
    if (real_roots.empty()) throw std::logic_error("perron_data: no real eigenvalue");
    pd.lambda = real_roots.back();
    if (pd.lambda.sign() <= 0) throw std::logic_error("perron_data: dominant root not positive");
    pd.pf_factor = pd.lambda.minpoly();
    pd.field = make_field(pd.lambda);

    // strict dominance over every other factor's spectrum (primitivity
    // guarantees it; verified to catch factorization mistakes)
    AlgebraicNumber lambda_sq = alg_pow(pd.lambda, 2);
    for (const auto& [q, mult] : pd.factors) {
        if (q == pd.pf_factor) continue;
        if (!(max_root_modulus_squared(q) < lambda_sq))
            throw std::logic_error("perron_data: dominance violated");
    }

    NFElem gen = NFElem::generator(pd.field);
    pd.left = left_eigenvector(j, gen);
    pd.right = right_eigenvector(j, gen);

    // exact residual check v J = lambda v and J w = lambda w
    {
        NFMat jm = j.map<NFElem>([](const Integer& x) { return NFElem(Rational(x)); });
        auto vl = vec_mat(pd.left, jm);
        auto wr = mat_vec(jm, pd.right);
        for (int i = 0; i < j.rows(); ++i) {
            if (vl[static_cast<size_t>(i)] != gen * pd.left[static_cast<size_t>(i)])
                throw std::logic_error("perron_data: left eigenvector residual");
            if (wr[static_cast<size_t>(i)] != gen * pd.right[static_cast<size_t>(i)])
                throw std::logic_error("perron_data: right eigenvector residual");
        }
    }

    pd.lambda2_squared = secondary_modulus_squared(pd, &pd.has_secondary);
    pd.lambda3_squared = inverse_modulus_squared(pd);
    return pd;
}

SpectralSplit spectral_split(const PerronData& pd) { return SpectralSplit{pd.left, pd.right}; }

bool spectral_membership(const SpectralSplit& split, const std::vector<NFElem>& x) {
    if (x.size() != split.functional.size()) throw precondition_error("spectral_membership: dimension mismatch");
    NFElem acc = dot(split.functional, x);
    return acc.is_zero();
}

namespace {

// least c >= 1 with lambda1^(2(c-1)) > lambda2sq^c * lambda3sq
int sufficient_exponent(const AlgebraicNumber& lambda, bool has_secondary,
                        const AlgebraicNumber& lambda2_sq, const AlgebraicNumber& lambda3_sq) {
    if (!has_secondary || lambda2_sq.sign() == 0) return 1;
    AlgebraicNumber lambda_sq = alg_pow(lambda, 2);
    for (int c = 1; c <= 256; ++c) {
        if (compare_power_products({{lambda_sq, static_cast<unsigned>(c - 1)}},
                                   {{lambda2_sq, static_cast<unsigned>(c)}, {lambda3_sq, 1}}) > 0)
            return c;
    }
    throw budget_error("sufficient_exponent: no c <= 256 satisfies the growth inequality");
}

// least c >= 1 with (grow_sq / sub_sq)^c > bound_sq; used per ladder when the
// dominant eigenvalues differ: the powered matrix contributes its own
// secondary rate, the inverted one its inverse rate and dominant rate.
int sufficient_exponent_ladder(const AlgebraicNumber& grow_sq, const AlgebraicNumber& sub_sq,
                               const AlgebraicNumber& bound_sq) {
    if (sub_sq.sign() == 0) return 1;
    for (int c = 1; c <= 256; ++c) {
        if (compare_power_products({{grow_sq, static_cast<unsigned>(c)}},
                                   {{sub_sq, static_cast<unsigned>(c)}, {bound_sq, 1}}) > 0)
            return c;
    }
    throw budget_error("sufficient_exponent_ladder: no c <= 256 satisfies the growth inequality");
}

bool window_ok(const std::function<bool(int, long)>& check, int c, long n0) {
    for (long n = n0; n < n0 + 4; ++n)
        if (!check(c, n)) return false;
    return true;
}

GrowthConstant finish_constant(int c_sufficient, const std::function<bool(int, long)>& check) {
    GrowthConstant g;
    g.c_sufficient = c_sufficient;
    long n0 = 1;
    for (; n0 <= 32; ++n0)
        if (window_ok(check, c_sufficient, n0)) break;
    if (n0 > 32) throw budget_error("growth constant: window verification failed up to n0 = 32");
    g.n0 = n0;
    g.c_window = c_sufficient;
    for (int c = 1; c < c_sufficient; ++c)
        if (window_ok(check, c, n0)) {
            g.c_window = c;
            break;
        }
    return g;
}

}  // namespace

GrowthConstant power_dominance_constant(const PerronData& j, const PerronData& k) {
    if (j.matrix.rows() != k.matrix.rows())
        throw precondition_error("power_dominance_constant: size mismatch");
    if (!(j.lambda == k.lambda))
        throw precondition_error("power_dominance_constant: PF eigenvalues differ");
    // projective equality of left and right eigenvectors
    size_t n = j.left.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            if (j.left[a] * k.left[b] != j.left[b] * k.left[a])
                throw precondition_error("power_dominance_constant: left PF eigenvectors differ");
            if (j.right[a] * k.right[b] != j.right[b] * k.right[a])
                throw precondition_error("power_dominance_constant: right PF eigenvectors differ");
        }
    bool has2 = j.has_secondary || k.has_secondary;
    AlgebraicNumber l2 = j.lambda2_squared > k.lambda2_squared ? j.lambda2_squared : k.lambda2_squared;
    AlgebraicNumber l3 = j.lambda3_squared > k.lambda3_squared ? j.lambda3_squared : k.lambda3_squared;
    int c = sufficient_exponent(j.lambda, has2, l2, l3);
    RatMat jr = to_rational(j.matrix);
    RatMat kr = to_rational(k.matrix);
    auto check = [&](int cc, long nn) {
        RatMat m = mat_pow(jr, static_cast<long>(cc) * nn) * mat_pow(kr, -nn);
        return is_nonnegative(m);
    };
    return finish_constant(c, check);
}

GrowthConstant power_dominance_constant_with_map(const PerronData& j, const PerronData& k,
                                                 const IntMat& a1) {
    if (!a1.is_square() || a1.rows() != j.matrix.rows() || a1.rows() != k.matrix.rows())
        throw precondition_error("power_dominance_constant_with_map: shape mismatch");
    RatMat a1inv = inverse(a1);  // throws when singular
    int c;
    if (j.lambda == k.lambda) {
        bool has2 = j.has_secondary || k.has_secondary;
        AlgebraicNumber l2 = j.lambda2_squared > k.lambda2_squared ? j.lambda2_squared : k.lambda2_squared;
        AlgebraicNumber l3 = j.lambda3_squared > k.lambda3_squared ? j.lambda3_squared : k.lambda3_squared;
        c = sufficient_exponent(j.lambda, has2, l2, l3);
    } else {
        // different dominant rates: each ladder J^(cn) A1^{-1} K^(-n) and
        // K^(cn) A1 J^(-n) gets its own inequality
        AlgebraicNumber lj_sq = alg_pow(j.lambda, 2), lk_sq = alg_pow(k.lambda, 2);
        int cj = 1, ck = 1;
        if (j.has_secondary)
            cj = sufficient_exponent_ladder(lj_sq, j.lambda2_squared,
                                            alg_mul(lk_sq, k.lambda3_squared));
        if (k.has_secondary)
            ck = sufficient_exponent_ladder(lk_sq, k.lambda2_squared,
                                            alg_mul(lj_sq, j.lambda3_squared));
        c = std::max(cj, ck);
    }
    RatMat jr = to_rational(j.matrix);
    RatMat kr = to_rational(k.matrix);
    RatMat a1r = to_rational(a1);
    auto check = [&](int cc, long nn) {
        RatMat m1 = mat_pow(jr, static_cast<long>(cc) * nn) * a1inv * mat_pow(kr, -nn);
        RatMat m2 = mat_pow(kr, static_cast<long>(cc) * nn) * a1r * mat_pow(jr, -nn);
        return is_nonnegative(m1) && is_nonnegative(m2);
    };
    return finish_constant(c, check);
}

}  // namespace staf
