#include "staf/corpus.hpp"

#include <doctest.h>

using namespace staf;

namespace {

IntMat M(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> r;
    for (auto& row : rows) {
        std::vector<Integer> v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return IntMat::from_rows(r);
}

}  // namespace

TEST_CASE("a matrix is shift equivalent to itself with lag one") {
    SESearchResult r = check_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), 1, true);
    REQUIRE(r.kind == SESearchResult::Kind::Found);
    CHECK(r.witness->lag == 1);
    CHECK(verify_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), *r.witness, true));
}

TEST_CASE("distinct companion matrices admit no witness") {
    SESearchResult r = check_shift_equivalence(corpus::comp2_j(), corpus::comp2_k(), 4, false);
    CHECK(r.kind == SESearchResult::Kind::NoneProved);
    SESearchResult r2 = check_shift_equivalence(corpus::circulant_j(), corpus::circulant_k(), 2, false);
    CHECK(r2.kind == SESearchResult::Kind::NoneProved);
}

TEST_CASE("permutation-conjugate pairs are found by the lattice search") {
    IntMat j = corpus::comp2_j();
    IntMat p = M({{0, 1}, {1, 0}});
    IntMat k = p * j * p.transpose();
    REQUIRE(j != k);
    SESearchResult r = check_shift_equivalence(j, k, 2, true);
    REQUIRE(r.kind == SESearchResult::Kind::Found);
    CHECK(verify_shift_equivalence(j, k, *r.witness, true));
    CHECK(r.witness->lag == 1);
    // a witness lifts to a constant ladder (hierarchy: shift equivalence
    // implies the commuting-ladder relation)
    auto cert = certificate_from_shift_equivalence(j, k, *r.witness, 2);
    CHECK(verify_certificate(j, k, cert));
}

TEST_CASE("companion rigidity") {
    CHECK(companion_rigidity(corpus::comp2_j(), corpus::comp2_j()));
    CHECK(!companion_rigidity(corpus::comp2_j(), corpus::comp2_k()));
    CHECK(!companion_rigidity(corpus::big6_j(), corpus::big6_k()));
    CHECK_THROWS_AS(companion_rigidity(corpus::circulant_j(), corpus::circulant_k()),
                    precondition_error);
}

TEST_CASE("rational conjugacy of powers") {
    auto w = powers_conjugate_over_Q(corpus::big6_j(), corpus::big6_k(), 2, 2);
    CHECK(w.conjugate);
    CHECK(w.invariant_factors_left == w.invariant_factors_right);
    CHECK(powers_conjugate_over_Q(corpus::big6_j(), corpus::big6_k(), 1, 1).conjugate == false);
    // reflexive and symmetric
    CHECK(powers_conjugate_over_Q(corpus::comp2_j(), corpus::comp2_j(), 3, 3).conjugate);
    auto ab = powers_conjugate_over_Q(corpus::big6_j(), corpus::big6_k(), 2, 2).conjugate;
    auto ba = powers_conjugate_over_Q(corpus::big6_k(), corpus::big6_j(), 2, 2).conjugate;
    CHECK(ab == ba);
}

TEST_CASE("the unimodular 5x5 pair has conjugate twelfth powers") {
    auto w = powers_conjugate_over_Q(corpus::unimodular5_j(), corpus::unimodular5_k(), 12, 12);
    CHECK(w.conjugate);
}

TEST_CASE("equal characteristic polynomials do not imply similarity") {
    // semisimple vs defective double eigenvalue
    IntMat diag = M({{2, 0}, {0, 2}});
    IntMat jordan = M({{2, 1}, {0, 2}});
    auto w = powers_conjugate_over_Q(diag, jordan, 1, 1);
    CHECK(!w.conjugate);
    CHECK(charpoly(diag) == charpoly(jordan));
    CHECK(w.invariant_factors_left != w.invariant_factors_right);
}

TEST_CASE("obstructions fire on the expected pairs and stay quiet otherwise") {
    PerronData c2j = perron_data(corpus::comp2_j());
    PerronData c2k = perron_data(corpus::comp2_k());
    auto ob = no_power_conjugacy_obstruction(c2j, c2k);
    REQUIRE(ob.has_value());
    CHECK(ob->kind == Obstruction::Kind::EigenvalueModulus);
    CHECK(!no_power_conjugacy_obstruction(c2j, c2j).has_value());
    CHECK(!no_power_conjugacy_obstruction(c2k, c2k).has_value());

    PerronData cj = perron_data(corpus::circulant_j());
    PerronData ck = perron_data(corpus::circulant_k());
    auto ob2 = no_power_conjugacy_obstruction(cj, ck);
    REQUIRE(ob2.has_value());
    CHECK(ob2->kind == Obstruction::Kind::RootsOfUnity);
    CHECK(!no_power_conjugacy_obstruction(cj, cj).has_value());

    auto ob3 = no_power_conjugacy_obstruction(perron_data(corpus::mixed6_j()),
                                              perron_data(corpus::mixed6_k()));
    REQUIRE(ob3.has_value());
    CHECK(ob3->kind == Obstruction::Kind::EigenvalueModulus);
}

TEST_CASE("an obstruction is consistent with the conjugacy grid") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 4; ++m)
            CHECK(!powers_conjugate_over_Q(corpus::comp2_j(), corpus::comp2_k(), n, m).conjugate);
}

TEST_CASE("spectral conditions accept the worked pairs with the identity map") {
    auto sc = spectral_necessary_conditions(perron_data(corpus::comp2_j()),
                                            perron_data(corpus::comp2_k()), IntMat::identity(2));
    CHECK(sc.pass);
    CHECK(sc.map_respects_split);
    CHECK(sc.projections_positive);
    CHECK(sc.inverse_row_nonneg);
    auto sc2 = spectral_necessary_conditions(perron_data(corpus::circulant_j()),
                                             perron_data(corpus::circulant_k()), IntMat::identity(5));
    CHECK(sc2.pass);
}

TEST_CASE("spectral conditions reject maps between different dominant fields") {
    IntMat a = companion_matrix(CompanionSpec{{Integer(2), Integer(1)}});
    IntMat b = companion_matrix(CompanionSpec{{Integer(3), Integer(1)}});
    auto sc = spectral_necessary_conditions(perron_data(a), perron_data(b), IntMat::identity(2));
    CHECK(!sc.pass);
    CHECK(!sc.map_respects_split);
    CHECK_THROWS_AS(spectral_necessary_conditions(perron_data(a), perron_data(b), M({{1, 2}, {2, 4}})),
                    precondition_error);  // singular A1
}

TEST_CASE("spectral conditions hold for the unit-twisted pair") {
    auto sc = spectral_necessary_conditions(perron_data(corpus::perm4_j()),
                                            perron_data(corpus::perm4_k()), corpus::perm4_a1());
    CHECK(sc.pass);
}

TEST_CASE("arithmetic battery results") {
    auto pass1 = arithmetic_necessary_conditions(perron_data(corpus::scalar(6)),
                                                 perron_data(corpus::scalar(12)));
    CHECK(pass1.pass);
    CHECK(pass1.module_probe_applicable);
    CHECK(pass1.module_probe_found);
    auto fail1 = arithmetic_necessary_conditions(perron_data(corpus::scalar(6)),
                                                 perron_data(corpus::scalar(10)));
    CHECK(!fail1.pass);
    REQUIRE(fail1.obstruction.has_value());
    CHECK(fail1.obstruction->kind == Obstruction::Kind::PrimeSupport);
    auto pass2 = arithmetic_necessary_conditions(perron_data(corpus::unimodular5_j()),
                                                 perron_data(corpus::unimodular5_k()));
    CHECK(pass2.pass);
    auto mismatch = arithmetic_necessary_conditions(
        perron_data(companion_matrix(CompanionSpec{{Integer(2), Integer(1)}})),
        perron_data(companion_matrix(CompanionSpec{{Integer(3), Integer(1)}})));
    CHECK(!mismatch.pass);
    REQUIRE(mismatch.obstruction.has_value());
    CHECK(mismatch.obstruction->kind == Obstruction::Kind::FieldMismatch);
}

TEST_CASE("certificates for the scalar pair") {
    auto cert = build_cstar_certificate(corpus::scalar(6), corpus::scalar(12), IntMat::identity(1), 3);
    CHECK(verify_certificate(corpus::scalar(6), corpus::scalar(12), cert));
    CHECK(cert.n_exponents.size() == 3);
    CHECK(cert.a_mats.size() == 4);
    // the first ladder step divides 12^m by 6^n
    CHECK(cert.nilpotence_ok);
}

TEST_CASE("certificates cannot be built for the prime-mismatch pair") {
    CHECK_THROWS_AS(
        build_cstar_certificate(corpus::scalar(6), corpus::scalar(10), IntMat::identity(1), 2, 16),
        budget_error);
}

TEST_CASE("a shift equivalence induces a constant-ladder certificate") {
    SESearchResult se = check_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), 1, true);
    REQUIRE(se.kind == SESearchResult::Kind::Found);
    auto cert = certificate_from_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), *se.witness, 3);
    CHECK(verify_certificate(corpus::comp2_j(), corpus::comp2_j(), cert));
}

TEST_CASE("unit preservation for a built certificate") {
    auto cert = build_cstar_certificate(corpus::comp2_j(), corpus::comp2_k(), IntMat::identity(2), 2);
    // with the identity map, exponents (0, 0) already match the unit vectors
    CHECK(unit_preservation_check(cert, corpus::comp2_j(), corpus::comp2_k(), 8));
}

TEST_CASE("unit preservation") {
    SESearchResult se = check_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), 1, true);
    auto cert = certificate_from_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), *se.witness, 2);
    cert.a1 = IntMat::identity(2);
    CHECK(unit_preservation_check(cert, corpus::comp2_j(), corpus::comp2_j(), 4));
    // doubling sends e1 off both power orbits: consecutive-entry vectors in
    // the orbit of [[1,1],[1,0]] are coprime, doubled ones are not
    IntMat fib = M({{1, 1}, {1, 0}});
    CStarCertificate fake;
    fake.a1 = M({{2, 0}, {0, 2}});
    CHECK(!unit_preservation_check(fake, fib, fib, 8));
}

TEST_CASE("verification rejects corrupted witnesses") {
    SESearchResult se = check_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), 1, true);
    ShiftEquivalence bad = *se.witness;
    bad.a.at(0, 0) += 1;
    CHECK(!verify_shift_equivalence(corpus::comp2_j(), corpus::comp2_j(), bad, true));
}
