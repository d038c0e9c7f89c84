#include "staf/equivalence.hpp"

#include <sstream>

namespace staf {

bool verify_shift_equivalence(const IntMat& j, const IntMat& k, const ShiftEquivalence& se,
                              bool require_nonneg) {
    if (se.lag < 1) return false;
    if (require_nonneg && (!is_nonnegative(se.a) || !is_nonnegative(se.b))) return false;
    if (se.a * j != k * se.a) return false;
    if (se.b * k != j * se.b) return false;
    if (se.b * se.a != mat_pow(j, static_cast<unsigned>(se.lag))) return false;
    if (se.a * se.b != mat_pow(k, static_cast<unsigned>(se.lag))) return false;
    return true;
}

SESearchResult check_shift_equivalence(const IntMat& j, const IntMat& k, int k_max,
                                       bool require_nonneg, long coeff_bound, long budget) {
    if (!j.is_square() || !k.is_square()) throw precondition_error("check_shift_equivalence: non-square");
    if (det(j) == 0 || det(k) == 0) throw precondition_error("check_shift_equivalence: singular input");
    if (j == k) {
        ShiftEquivalence se{1, j, IntMat::identity(j.rows())};
        if (verify_shift_equivalence(j, k, se, require_nonneg))
            return {SESearchResult::Kind::Found, se, "identity pair"};
    }
    if (j.rows() != k.rows())
        return {SESearchResult::Kind::NoneProved, std::nullopt,
                "nonsingular matrices of different sizes are never shift equivalent"};
    if (charpoly(j) != charpoly(k))
        return {SESearchResult::Kind::NoneProved, std::nullopt,
                "distinct characteristic polynomials: shift equivalence would force conjugacy over Q"};
    std::vector<IntMat> lattice = intertwiner_lattice(j, k);
    if (lattice.empty())
        return {SESearchResult::Kind::NoneProved, std::nullopt, "intertwiner lattice is zero"};
    size_t rank = lattice.size();
    std::vector<long> c(rank, -coeff_bound);
    long used = 0;
    while (true) {
        bool all_zero = true;
        for (long x : c)
            if (x != 0) all_zero = false;
        if (!all_zero) {
            if (++used > budget)
                return {SESearchResult::Kind::NoneWithinBounds, std::nullopt,
                        "combination budget exhausted"};
            IntMat a(j.rows(), j.rows());
            for (size_t i = 0; i < rank; ++i)
                if (c[i] != 0) a = a + lattice[i] * Integer(c[i]);
            if (det(a) != 0 && (!require_nonneg || is_nonnegative(a))) {
                RatMat ainv = inverse(a);
                for (int lag = 1; lag <= k_max; ++lag) {
                    RatMat b = mat_pow(j, static_cast<long>(lag)) * ainv;
                    if (!is_integral(b)) continue;
                    IntMat bi = to_integer(b);
                    if (require_nonneg && !is_nonnegative(bi)) continue;
                    ShiftEquivalence se{lag, a, bi};
                    if (verify_shift_equivalence(j, k, se, require_nonneg))
                        return {SESearchResult::Kind::Found, se, ""};
                }
            }
        }
        // odometer
        size_t pos = 0;
        while (pos < rank && c[pos] == coeff_bound) c[pos++] = -coeff_bound;
        if (pos == rank) break;
        ++c[pos];
    }
    std::ostringstream note;
    note << "no witness with lattice coefficients bounded by " << coeff_bound << " and lag <= " << k_max;
    return {SESearchResult::Kind::NoneWithinBounds, std::nullopt, note.str()};
}

bool companion_rigidity(const IntMat& j, const IntMat& k) {
    if (!companion_spec_of(j) || !companion_spec_of(k))
        throw precondition_error("companion_rigidity: input not in companion form");
    return j == k;
}

ConjugacyWitness powers_conjugate_over_Q(const IntMat& j, const IntMat& k, unsigned n, unsigned m) {
    if (!j.is_square() || !k.is_square() || j.rows() != k.rows())
        throw precondition_error("powers_conjugate_over_Q: shape mismatch");
    if (n == 0 || m == 0) throw precondition_error("powers_conjugate_over_Q: powers must be positive");
    IntMat jp = mat_pow(j, n), kp = mat_pow(k, m);
    ConjugacyWitness w;
    if (charpoly(jp) != charpoly(kp)) {
        // cheap necessary filter; invariant factors would disagree anyway
        w.invariant_factors_left = invariant_factors(jp);
        w.invariant_factors_right = invariant_factors(kp);
        w.conjugate = false;
        return w;
    }
    w.invariant_factors_left = invariant_factors(jp);
    w.invariant_factors_right = invariant_factors(kp);
    w.conjugate = w.invariant_factors_left == w.invariant_factors_right;
    return w;
}

std::string to_string(Obstruction::Kind k) {
    switch (k) {
        case Obstruction::Kind::PrimeSupport: return "PrimeSupport";
        case Obstruction::Kind::FieldMismatch: return "FieldMismatch";
        case Obstruction::Kind::EigenvalueModulus: return "EigenvalueModulus";
        case Obstruction::Kind::RootsOfUnity: return "RootsOfUnity";
        case Obstruction::Kind::SpectralMapFailure: return "SpectralMapFailure";
        case Obstruction::Kind::PAdicRowSpace: return "PAdicRowSpace";
    }
    return "?";
}

namespace {

int unit_modulus_count(const PerronData& pd) {
    int count = 0;
    for (const auto& [q, mult] : pd.factors) count += mult * unit_circle_root_count(q);
    return count;
}

// modulus^2 profile when every eigenvalue has rational modulus^2: the
// factors must be linear or complex-quadratic. Returns false when the
// profile is not rational.
bool rational_modulus_profile(const PerronData& pd, std::vector<Integer>& out) {
    out.clear();
    for (const auto& [q, mult] : pd.factors) {
        if (q.degree() == 1) {
            Integer a = -q.coeff(0);  // monic
            for (int i = 0; i < mult; ++i) out.push_back(a * a);
        } else if (q.degree() == 2) {
            Integer disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(2) * q.coeff(0);
            if (disc >= 0) return false;  // real irrational pair
            for (int i = 0; i < 2 * mult; ++i) out.push_back(q.coeff(0));  // |z|^2 = constant term
        } else {
            return false;
        }
    }
    std::sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) { return a > b; });
    return true;
}

// certified Q(alpha) intersect Q(beta) = Q via an irreducible squarefree
// norm (compositum of full degree)
bool compositum_full_degree(const IntPoly& qa, const IntPoly& qb) {
    if (qa.degree() == 1 || qb.degree() == 1) return true;
    for (long k = 1; k <= 8; ++k) {
        IntPoly norm = field_norm_poly(qa, qb, k);
        if (IntPoly::gcd(norm, norm.derivative()).degree() != 0) continue;  // not squarefree
        return is_irreducible(norm);
    }
    return false;
}

}  // namespace

std::optional<Obstruction> no_power_conjugacy_obstruction(const PerronData& j, const PerronData& k) {
    if (j.matrix.rows() != k.matrix.rows()) {
        Obstruction o{Obstruction::Kind::EigenvalueModulus,
                      "spectra have different sizes; no powers can be conjugate",
                      {{"size_left", std::to_string(j.matrix.rows())},
                       {"size_right", std::to_string(k.matrix.rows())}}};
        return o;
    }
    // (a) the number of unit-modulus eigenvalues is invariant under powers
    int cu_j = unit_modulus_count(j), cu_k = unit_modulus_count(k);
    if (cu_j != cu_k) {
        Obstruction o{Obstruction::Kind::EigenvalueModulus,
                      "unit-modulus eigenvalue counts differ (invariant under taking powers)",
                      {{"unit_count_left", std::to_string(cu_j)},
                       {"unit_count_right", std::to_string(cu_k)},
                       {"charpoly_left", j.cp.to_string()},
                       {"charpoly_right", k.cp.to_string()}}};
        return o;
    }
    // (b) rational modulus profiles must admit a common power scaling
    std::vector<Integer> prof_j, prof_k;
    if (rational_modulus_profile(j, prof_j) && rational_modulus_profile(k, prof_k) &&
        prof_j.size() == prof_k.size()) {
        // match sorted profiles pairwise: need positive n, m with
        // q_i^n = r_i^m for all i; compare prime exponent vectors
        bool impossible = false;
        Integer rn(0), rd(0);  // required ratio n/m = rn/rd
        std::ostringstream why;
        for (size_t i = 0; i < prof_j.size() && !impossible; ++i) {
            const Integer& a = prof_j[i];
            const Integer& b = prof_k[i];
            if (a == 1 && b == 1) continue;  // unit moduli impose no exponent constraint
            if (a == 1 || b == 1) {
                impossible = true;
                why << "modulus 1 must pair with modulus 1 (position " << i << ": " << a.get_str()
                    << " vs " << b.get_str() << ")";
                break;
            }
            auto fa = factor_integer(a);
            auto fb = factor_integer(b);
            // n * v_p(a) = m * v_p(b) for every prime p
            for (const auto& [p, e] : fa) {
                unsigned eb = 0;
                for (const auto& [pb, e2] : fb)
                    if (pb == p) eb = e2;
                if (eb == 0) {
                    impossible = true;
                    why << "prime " << p.get_str() << " divides " << a.get_str() << " but not "
                        << b.get_str();
                    break;
                }
                Integer nn(eb), dd(e);
                Integer g = staf::gcd(nn, dd);
                nn /= g;
                dd /= g;
                if (rd == 0) {
                    rn = nn;
                    rd = dd;
                } else if (rn * dd != nn * rd) {
                    impossible = true;
                    why << "inconsistent exponent ratios: " << rn.get_str() << "/" << rd.get_str()
                        << " vs " << nn.get_str() << "/" << dd.get_str();
                    break;
                }
            }
            if (!impossible)
                for (const auto& [p, e] : fb) {
                    bool found = false;
                    for (const auto& [pa, e2] : fa)
                        if (pa == p) found = true;
                    if (!found) {
                        impossible = true;
                        why << "prime " << p.get_str() << " divides " << b.get_str() << " but not "
                            << a.get_str();
                        break;
                    }
                }
        }
        if (impossible) {
            std::ostringstream pl, pr;
            for (const auto& x : prof_j) pl << x.get_str() << " ";
            for (const auto& x : prof_k) pr << x.get_str() << " ";
            Obstruction o{Obstruction::Kind::EigenvalueModulus,
                          "squared-modulus profiles admit no common power scaling: " + why.str(),
                          {{"profile_left", pl.str()},
                           {"profile_right", pr.str()},
                           {"charpoly_left", j.cp.to_string()},
                           {"charpoly_right", k.cp.to_string()}}};
            return o;
        }
    }
    // (c) unit secondary products + rational field intersections force the
    // secondary spectra to consist of roots of unity
    bool trigger = j.lambda.is_rational() && k.lambda.is_rational() &&
                   Rational(abs(j.cp.constant_term())) == j.lambda.rational_value() &&
                   Rational(abs(k.cp.constant_term())) == k.lambda.rational_value();
    if (trigger) {
        bool certified = true;
        for (const auto& [qj, mj] : j.factors) {
            if (qj == j.pf_factor) continue;
            for (const auto& [qk, mk] : k.factors) {
                if (qk == k.pf_factor) continue;
                if (!compositum_full_degree(qj, qk)) certified = false;
            }
        }
        if (certified) {
            for (const auto& pd : {&j, &k})
                for (const auto& [q, mult] : pd->factors) {
                    if (q == pd->pf_factor) continue;
                    if (!is_cyclotomic(q)) {
                        Obstruction o{
                            Obstruction::Kind::RootsOfUnity,
                            "power conjugacy would force all secondary eigenvalues to be roots of "
                            "unity, but a secondary factor is not cyclotomic",
                            {{"non_cyclotomic_factor", q.to_string()},
                             {"unit_circle_roots", std::to_string(unit_circle_root_count(q))},
                             {"factor_degree", std::to_string(q.degree())},
                             {"charpoly_left", j.cp.to_string()},
                             {"charpoly_right", k.cp.to_string()}}};
                        return o;
                    }
                }
        }
    }
    return std::nullopt;
}

SpectralConditions spectral_necessary_conditions(const PerronData& j, const PerronData& k,
                                                 const IntMat& a1, long repair_bound) {
    if (!a1.is_square() || a1.rows() != j.matrix.rows() || a1.rows() != k.matrix.rows())
        throw precondition_error("spectral_necessary_conditions: shape mismatch");
    if (!is_nonnegative(a1)) throw precondition_error("spectral_necessary_conditions: A1 has negative entries");
    if (det(a1) == 0) throw precondition_error("spectral_necessary_conditions: A1 singular");

    SpectralConditions res;
    int n = a1.rows();
    bool shared_field = same_field(j.field, k.field);

    // (1) w = v_K A1 must be a left eigenvector of J for the dominant
    // eigenvalue; this is the hyperplane condition A1 V_J = V_K.
    std::vector<NFElem> w(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col) {
        NFElem acc;
        for (int row = 0; row < n; ++row)
            acc = acc + k.left[static_cast<size_t>(row)] * Rational(a1.at(row, col));
        w[static_cast<size_t>(col)] = acc;
    }
    std::vector<NFElem> wj(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col) {
        NFElem acc;
        for (int row = 0; row < n; ++row)
            acc = acc + w[static_cast<size_t>(row)] * Rational(j.matrix.at(row, col));
        wj[static_cast<size_t>(col)] = acc;
    }
    int lead = -1;
    for (int i = 0; i < n; ++i)
        if (!w[static_cast<size_t>(i)].is_zero()) {
            lead = i;
            break;
        }
    if (lead < 0) {
        res.failure = "v_K A1 vanished";
        return res;
    }
    NFElem mu = wj[static_cast<size_t>(lead)] / w[static_cast<size_t>(lead)];
    bool proportional = true;
    for (int i = 0; i < n; ++i)
        if (wj[static_cast<size_t>(i)] != mu * w[static_cast<size_t>(i)]) proportional = false;
    res.map_respects_split = proportional && mu.to_algebraic() == j.lambda;
    if (!res.map_respects_split) {
        res.failure = "A1 does not map the non-dominant hyperplane of J onto that of K";
        return res;
    }

    // (2) dominant projections are positive. With A1 >= 0 nonsingular this
    // follows from (1): v_K A1 = c v_J with c the positive ratio of
    // nonnegative nonzero vectors; verify the signs exactly.
    bool w_nonneg = true, w_positive_somewhere = false;
    for (const auto& x : w) {
        int s = x.sign();
        if (s < 0) w_nonneg = false;
        if (s > 0) w_positive_somewhere = true;
    }
    res.projections_positive = w_nonneg && w_positive_somewhere;
    if (shared_field) {
        NFElem p1 = dot(w, j.right);                  // v_K A1 w_J
        std::vector<NFElem> vjinv(static_cast<size_t>(n));
        RatMat a1inv = inverse(a1);
        for (int col = 0; col < n; ++col) {
            NFElem acc;
            for (int row = 0; row < n; ++row)
                acc = acc + j.left[static_cast<size_t>(row)] * a1inv.at(row, col);
            vjinv[static_cast<size_t>(col)] = acc;
        }
        NFElem p2 = dot(vjinv, k.right);              // v_J A1^{-1} w_K
        res.projections_positive = p1.sign() > 0 && p2.sign() > 0;
        // alternate reading: A1 w_K projecting positively onto w_J
        std::vector<NFElem> a1wk(static_cast<size_t>(n));
        for (int row = 0; row < n; ++row) {
            NFElem acc;
            for (int col = 0; col < n; ++col)
                acc = acc + NFElem(Rational(a1.at(row, col))) * k.right[static_cast<size_t>(col)];
            a1wk[static_cast<size_t>(row)] = acc;
        }
        res.alternate_reading_positive = dot(j.left, a1wk).sign() > 0 && p1.sign() > 0;
    } else {
        res.alternate_reading_positive = res.projections_positive;
    }
    if (!res.projections_positive) {
        res.failure = "dominant projection signs are not positive";
        return res;
    }

    // (3) v_J A1^{-1} >= 0 entrywise, with the bounded A1 J^{s0} repair
    for (long s0 = 0; s0 <= repair_bound; ++s0) {
        IntMat cand = s0 == 0 ? a1 : to_integer(to_rational(a1) * mat_pow(j.matrix, s0));
        RatMat cinv = inverse(cand);
        bool ok = true;
        for (int col = 0; col < n && ok; ++col) {
            NFElem acc;
            for (int row = 0; row < n; ++row)
                acc = acc + j.left[static_cast<size_t>(row)] * cinv.at(row, col);
            if (acc.sign() < 0) ok = false;
        }
        if (ok) {
            res.inverse_row_nonneg = true;
            res.repair_power = s0;
            break;
        }
    }
    if (!res.inverse_row_nonneg) {
        res.failure = "v_J A1^{-1} has a negative entry (repair powers exhausted)";
        return res;
    }
    res.pass = true;
    return res;
}

ArithmeticConditions arithmetic_necessary_conditions(const PerronData& j, const PerronData& k,
                                                     long e0_bound) {
    ArithmeticConditions res;
    // (a) the dominant eigenvalues generate the same real field
    std::optional<NFElem> lambda_k_in_j;  // lambda_K expressed inside Q[lambda_J]
    if (j.pf_factor == k.pf_factor) {
        res.fields_match = true;
        lambda_k_in_j = NFElem::generator(j.field);
    } else if (j.pf_factor.degree() == k.pf_factor.degree()) {
        for (const auto& cand : roots_in_field(k.pf_factor, j.field))
            if (cand.to_algebraic() == k.lambda) lambda_k_in_j = cand;
        bool reverse_ok = false;
        for (const auto& cand : roots_in_field(j.pf_factor, k.field))
            if (cand.to_algebraic() == j.lambda) reverse_ok = true;
        res.fields_match = lambda_k_in_j.has_value() && reverse_ok;
    }
    if (!res.fields_match) {
        res.obstruction = Obstruction{
            Obstruction::Kind::FieldMismatch,
            "the fields generated by the dominant eigenvalues differ",
            {{"min_poly_left", j.pf_factor.to_string()}, {"min_poly_right", k.pf_factor.to_string()}}};
        return res;
    }
    // (b) rational prime supports of the eigenvalue norms must coincide
    res.primes_left = j.pf_factor.constant_term() == 0 ? std::vector<Integer>{}
                                                       : prime_support(j.pf_factor.constant_term());
    res.primes_right = k.pf_factor.constant_term() == 0 ? std::vector<Integer>{}
                                                        : prime_support(k.pf_factor.constant_term());
    res.prime_support_match = res.primes_left == res.primes_right;
    if (!res.prime_support_match) {
        std::ostringstream pl, pr;
        for (const auto& p : res.primes_left) pl << p.get_str() << " ";
        for (const auto& p : res.primes_right) pr << p.get_str() << " ";
        res.obstruction = Obstruction{
            Obstruction::Kind::PrimeSupport,
            "rational primes dividing the dominant-eigenvalue norms differ (rational-level check; "
            "prime-ideal matching is not attempted)",
            {{"primes_left", pl.str()}, {"primes_right", pr.str()}}};
        return res;
    }
    // (c) module isomorphism probe when both characteristic polynomials are
    // irreducible: search x with x G1 <= G2 and lambda^e0 x^{-1} G2 <= G1
    bool j_irred = j.factors.size() == 1 && j.factors[0].second == 1;
    bool k_irred = k.factors.size() == 1 && k.factors[0].second == 1;
    res.module_probe_applicable = j_irred && k_irred;
    if (res.module_probe_applicable) {
        int d = j.field->degree();
        std::vector<NFElem> v1 = j.left;
        std::vector<NFElem> v2 = left_eigenvector(k.matrix, *lambda_k_in_j);
        auto basis_matrix = [&](const std::vector<NFElem>& v) {
            RatMat m(d, d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) m.at(a, b) = v[static_cast<size_t>(a)].coords()[static_cast<size_t>(b)];
            return m;
        };
        RatMat l1 = basis_matrix(v1), l2 = basis_matrix(v2);
        RatMat l1inv = inverse(l1), l2inv = inverse(l2);
        NFElem lambda = NFElem::generator(j.field);
        auto contained = [&](const NFElem& mult, const std::vector<NFElem>& gens, const RatMat& linv) {
            for (const auto& g : gens) {
                NFElem y = mult * g;
                RatMat c(1, d);
                for (int b = 0; b < d; ++b) c.at(0, b) = y.coords()[static_cast<size_t>(b)];
                RatMat z = c * linv;
                if (!is_integral(z)) return false;
            }
            return true;
        };
        for (int a = 0; a < d && !res.module_probe_found; ++a) {
            for (int b = 0; b < d && !res.module_probe_found; ++b) {
                if (v1[static_cast<size_t>(b)].is_zero() || v2[static_cast<size_t>(a)].is_zero()) continue;
                NFElem x = v2[static_cast<size_t>(a)] / v1[static_cast<size_t>(b)];
                if (!contained(x, v1, l2inv)) continue;
                NFElem xinv = x.inverse();
                NFElem scale = xinv;
                for (long e0 = 1; e0 <= e0_bound; ++e0) {
                    scale = scale * lambda;
                    if (contained(scale, v2, l1inv)) {
                        res.module_probe_found = true;
                        res.module_probe_exponent = e0;
                        res.module_witness = x.to_string();
                        break;
                    }
                }
            }
        }
    }
    res.pass = res.fields_match && res.prime_support_match;
    return res;
}

CStarCertificate build_cstar_certificate(const IntMat& j, const IntMat& k, const IntMat& a1,
                                         int prefix_len, long exponent_budget) {
    if (prefix_len < 1) throw precondition_error("build_cstar_certificate: prefix length must be >= 1");
    PerronData pdj = perron_data(j);
    PerronData pdk = perron_data(k);
    SpectralConditions sc = spectral_necessary_conditions(pdj, pdk, a1);
    if (!sc.pass)
        throw precondition_error("build_cstar_certificate: spectral conditions fail: " + sc.failure);

    CStarCertificate cert;
    cert.a1 = a1;
    Integer dj = det(j), dk = det(k);
    cert.det_primes = prime_support(dj * dk);
    cert.nilpotence_ok = true;
    for (const auto& p : cert.det_primes)
        if (!nilpotent_mod(j, p) || !nilpotent_mod(k, p)) cert.nilpotence_ok = false;
    if (cert.nilpotence_ok) {
        // det(A1) must involve only the determinant primes
        for (const auto& p : prime_support(det(a1))) {
            bool onsupport = false;
            for (const auto& q : cert.det_primes)
                if (p == q) onsupport = true;
            if (!onsupport) cert.nilpotence_ok = false;
        }
    }
    cert.growth = power_dominance_constant_with_map(pdj, pdk, a1);

    RatMat jr = to_rational(j), kr = to_rational(k), a1r = to_rational(a1);
    RatMat a1inv = inverse(a1);
    cert.a_mats.push_back(a1);
    long ntot = 0, mtot = 0;
    auto scheduled_power = [&](bool bside, long extra) {
        // B(k) = J^(ntot+extra) A1^{-1} K^(-mtot);  A(k+1) = K^(mtot+extra) A1 J^(-ntot)
        return bside ? mat_pow(jr, ntot + extra) * a1inv * mat_pow(kr, -mtot)
                     : mat_pow(kr, mtot + extra) * a1r * mat_pow(jr, -ntot);
    };
    auto greedy = [&](bool bside) {
        long e = 1;
        while (e <= exponent_budget && !is_integral(scheduled_power(bside, e))) e *= 2;
        if (e > exponent_budget)
            throw budget_error(std::string("build_cstar_certificate: no integral ") +
                               (bside ? "B" : "A") + " within exponent budget" +
                               (cert.nilpotence_ok ? "" : " (nilpotence diagnostic failed)"));
        while (e <= exponent_budget && !is_nonnegative(scheduled_power(bside, e))) ++e;
        if (e > exponent_budget)
            throw budget_error(std::string("build_cstar_certificate: no nonnegative ") +
                               (bside ? "B" : "A") + " within exponent budget (growth constant c = " +
                               std::to_string(cert.growth.c_sufficient) + ")");
        return e;
    };
    for (int step = 0; step < prefix_len; ++step) {
        long n = greedy(true);
        cert.b_mats.push_back(to_integer(scheduled_power(true, n)));
        cert.n_exponents.push_back(n);
        ntot += n;
        long m = greedy(false);
        cert.a_mats.push_back(to_integer(scheduled_power(false, m)));
        cert.m_exponents.push_back(m);
        mtot += m;
    }
    if (!verify_certificate(j, k, cert))
        throw std::logic_error("build_cstar_certificate: ladder verification failed");
    return cert;
}

bool verify_certificate(const IntMat& j, const IntMat& k, const CStarCertificate& cert) {
    size_t t = cert.n_exponents.size();
    if (cert.m_exponents.size() != t || cert.a_mats.size() != t + 1 || cert.b_mats.size() != t)
        return false;
    for (const auto& m : cert.a_mats)
        if (!is_nonnegative(m)) return false;
    for (const auto& m : cert.b_mats)
        if (!is_nonnegative(m)) return false;
    for (size_t i = 0; i < t; ++i) {
        if (cert.b_mats[i] * cert.a_mats[i] != mat_pow(j, static_cast<unsigned>(cert.n_exponents[i])))
            return false;
        if (cert.a_mats[i + 1] * cert.b_mats[i] != mat_pow(k, static_cast<unsigned>(cert.m_exponents[i])))
            return false;
    }
    return true;
}

CStarCertificate certificate_from_shift_equivalence(const IntMat& j, const IntMat& k,
                                                    const ShiftEquivalence& se, int prefix_len) {
    if (!verify_shift_equivalence(j, k, se, true))
        throw precondition_error("certificate_from_shift_equivalence: invalid or non-nonnegative witness");
    CStarCertificate cert;
    cert.a1 = se.a;
    for (int i = 0; i < prefix_len; ++i) {
        cert.n_exponents.push_back(se.lag);
        cert.m_exponents.push_back(se.lag);
        cert.b_mats.push_back(se.b);
    }
    for (int i = 0; i < prefix_len + 1; ++i) cert.a_mats.push_back(se.a);
    cert.det_primes = prime_support(det(j) * det(k));
    if (!verify_certificate(j, k, cert))
        throw std::logic_error("certificate_from_shift_equivalence: ladder verification failed");
    return cert;
}

bool unit_preservation_check(const CStarCertificate& cert, const IntMat& j, const IntMat& k,
                             long bound) {
    int n = j.rows();
    std::vector<Integer> e1(static_cast<size_t>(n), Integer(0));
    e1[0] = 1;
    for (long n0 = 0; n0 <= bound; ++n0) {
        IntMat jp = mat_pow(j, static_cast<unsigned>(n0));
        std::vector<Integer> v = mat_vec(jp, e1);
        std::vector<Integer> av(static_cast<size_t>(cert.a1.rows()), Integer(0));
        for (int r = 0; r < cert.a1.rows(); ++r) {
            Integer acc(0);
            for (int c = 0; c < cert.a1.cols(); ++c) acc += cert.a1.at(r, c) * v[static_cast<size_t>(c)];
            av[static_cast<size_t>(r)] = acc;
        }
        for (long m0 = 0; m0 <= bound; ++m0) {
            std::vector<Integer> rhs = mat_vec(mat_pow(k, static_cast<unsigned>(m0)), e1);
            if (av == rhs) return true;
        }
    }
    return false;
}

}  // namespace staf
