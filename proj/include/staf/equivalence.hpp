#pragma once

// The equivalence hierarchy on primitive nonsingular incidence matrices:
// bounded shift-equivalence search over the intertwiner lattice, rigidity of
// companion-form matrices, rational conjugacy of powers via invariant
// factors, exact spectral obstructions to power conjugacy, the spectral and
// arithmetic necessary-condition batteries, and constructive commuting-ladder
// certificates with machine-verified identities.

#include "staf/dim_group.hpp"
#include "staf/padic.hpp"

namespace staf {

struct ShiftEquivalence {
    int lag = 1;
    IntMat a;  // A J = K A
    IntMat b;  // B K = J B,  B A = J^lag,  A B = K^lag
};

// All four defining identities re-verified by multiplication.
bool verify_shift_equivalence(const IntMat& j, const IntMat& k, const ShiftEquivalence& se,
                              bool require_nonneg);

struct SESearchResult {
    enum class Kind { Found, NoneProved, NoneWithinBounds } kind;
    std::optional<ShiftEquivalence> witness;
    std::string note;
};

// Searches lag k <= k_max over bounded integer combinations of the
// intertwiner lattice bases. A negative result is a proof only when the
// note says so (equal-size nonsingular matrices with distinct
// characteristic polynomials cannot be shift equivalent).
SESearchResult check_shift_equivalence(const IntMat& j, const IntMat& k, int k_max,
                                       bool require_nonneg, long coeff_bound = 5,
                                       long budget = 2000000);

// Companion-form matrices are shift equivalent iff they are equal; serves
// as the oracle for the bounded search.
bool companion_rigidity(const IntMat& j, const IntMat& k);

struct ConjugacyWitness {
    bool conjugate = false;
    std::vector<IntPoly> invariant_factors_left;
    std::vector<IntPoly> invariant_factors_right;
};

// J^n similar to K^m over Q, decided by invariant factors of t*1 - M.
ConjugacyWitness powers_conjugate_over_Q(const IntMat& j, const IntMat& k, unsigned n, unsigned m);

struct Obstruction {
    enum class Kind {
        PrimeSupport,
        FieldMismatch,
        EigenvalueModulus,
        RootsOfUnity,
        SpectralMapFailure,
        PAdicRowSpace
    };
    Kind kind;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> evidence;
};

std::string to_string(Obstruction::Kind k);

// Exact spectral tests ruling out conjugacy of any positive powers:
// (a) the counts of unit-modulus eigenvalues differ (power-invariant);
// (b) rational modulus profiles admit no common power scaling;
// (c) power matching would force secondary spectra to be roots of unity
//     (unit secondary products, compositum certificates), but a secondary
//     factor is not cyclotomic.
// Returns nullopt when no obstruction is established.
std::optional<Obstruction> no_power_conjugacy_obstruction(const PerronData& j, const PerronData& k);

struct SpectralConditions {
    bool pass = false;
    bool map_respects_split = false;      // v_K A1 is a left PF eigenvector of J
    bool projections_positive = false;    // v_K A1 w_J > 0 and v_J A1^{-1} w_K > 0
    bool inverse_row_nonneg = false;      // v_J A1^{-1} >= 0 entrywise
    bool alternate_reading_positive = false;  // the A1 w_K variant of the projection test
    long repair_power = 0;                // s0 in A1 J^{s0} when a repair was attempted
    std::string failure;
};

// Necessary conditions on an intertwining candidate A1 (nonnegative,
// nonsingular): the non-dominant hyperplane of J must map onto that of K,
// the dominant projections must be positive, and v_J A1^{-1} must be
// nonnegative (with a bounded A1 J^s0 repair attempt on failure).
SpectralConditions spectral_necessary_conditions(const PerronData& j, const PerronData& k,
                                                 const IntMat& a1, long repair_bound = 6);

struct ArithmeticConditions {
    bool pass = false;
    bool fields_match = false;
    bool prime_support_match = false;
    std::vector<Integer> primes_left, primes_right;
    bool module_probe_applicable = false;
    bool module_probe_found = false;
    long module_probe_exponent = 0;
    std::string module_witness;
    std::optional<Obstruction> obstruction;
};

// Field / prime-support necessary conditions on the dominant eigenvalues:
// Q[lambda_J] and Q[lambda_K] must coincide as real fields (decided via
// norm factorizations) and the rational primes dividing the two norms must
// agree. When both characteristic polynomials are irreducible, a bounded
// search additionally probes for the module isomorphism x G1 <= G2,
// lambda^e0 x^(-1) G2 <= G1; the probe is reported but a miss is not an
// obstruction.
ArithmeticConditions arithmetic_necessary_conditions(const PerronData& j, const PerronData& k,
                                                     long e0_bound = 12);

struct CStarCertificate {
    IntMat a1;
    std::vector<long> n_exponents;  // n(1..T)
    std::vector<long> m_exponents;  // m(1..T)
    std::vector<IntMat> a_mats;     // A(1..T+1)
    std::vector<IntMat> b_mats;     // B(1..T)
    GrowthConstant growth;
    bool nilpotence_ok = false;     // every prime dividing det J * det K has
                                    // nilpotent reductions of J and K
    std::vector<Integer> det_primes;
};

// Realizes a prefix of the commuting ladder J^(n_k) = B_k A_k,
// K^(m_k) = A_(k+1) B_k by the greedy exponent schedule (double until
// integral, then increment until nonnegative). The nilpotence diagnostic is
// recorded; exhaustion of the exponent budget raises budget_error with the
// diagnostic attached.
CStarCertificate build_cstar_certificate(const IntMat& j, const IntMat& k, const IntMat& a1,
                                         int prefix_len, long exponent_budget = 64);

// All ladder identities and nonnegativity re-verified by multiplication.
bool verify_certificate(const IntMat& j, const IntMat& k, const CStarCertificate& cert);

// A shift equivalence yields a constant ladder: A(i) = A, B(i) = B,
// n = m = lag.
CStarCertificate certificate_from_shift_equivalence(const IntMat& j, const IntMat& k,
                                                    const ShiftEquivalence& se, int prefix_len);

// Whether A1 J^n0 e1 = K^m0 e1 for some exponents up to the bound (the
// order-unit compatibility refinement of a certificate).
bool unit_preservation_check(const CStarCertificate& cert, const IntMat& j, const IntMat& k,
                             long bound);

}  // namespace staf
