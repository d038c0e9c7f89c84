#include "staf/corpus.hpp"
#include "staf/perron.hpp"

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

bool rat_vec(const std::vector<NFElem>& v, std::initializer_list<long> expect) {
    if (v.size() != expect.size()) return false;
    size_t i = 0;
    for (long e : expect)
        if (v[i++] != NFElem(Rational(e))) return false;
    return true;
}

}  // namespace

TEST_CASE("dominant eigendata of the 2x2 companions") {
    PerronData pj = perron_data(corpus::comp2_j());
    CHECK(pj.lambda == AlgebraicNumber(Rational(8)));
    CHECK(rat_vec(pj.left, {8, 1}));
    CHECK(rat_vec(pj.right, {1, 4}));
    CHECK(pj.lambda2_squared == AlgebraicNumber(Rational(16)));
    CHECK(pj.lambda3_squared == AlgebraicNumber(make_rational(Integer(1), Integer(16))));

    PerronData pk = perron_data(corpus::comp2_k());
    CHECK(pk.lambda == AlgebraicNumber(Rational(8)));
    CHECK(rat_vec(pk.left, {8, 1}));
    CHECK(rat_vec(pk.right, {1, 2}));
    CHECK(pk.lambda2_squared == AlgebraicNumber(Rational(4)));
    CHECK(pk.lambda3_squared == AlgebraicNumber(make_rational(Integer(1), Integer(4))));
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(perron_data(M({{0, 1}, {1, 0}})), precondition_error);  // periodic
    CHECK_THROWS_AS(perron_data(M({{1, 1}, {1, 1}})), precondition_error);  // singular
    CHECK_THROWS_AS(perron_data(IntMat(2, 3)), precondition_error);
}

TEST_CASE("spectral membership in the non-dominant hyperplane") {
    PerronData pj = perron_data(corpus::comp2_j());
    SpectralSplit split = spectral_split(pj);
    std::vector<NFElem> x = {NFElem(1), NFElem(-8)};
    CHECK(spectral_membership(split, x));  // the secondary column eigenvector (1,-8)^T
    CHECK(!spectral_membership(split, pj.right));
    std::vector<NFElem> zero = {NFElem(0), NFElem(0)};
    CHECK(spectral_membership(split, zero));
    std::vector<NFElem> sum = {x[0] + x[0], x[1] + x[1]};
    CHECK(spectral_membership(split, sum));
    CHECK_THROWS_AS(spectral_membership(split, {NFElem(1)}), precondition_error);
}

TEST_CASE("growth constant for a matrix against itself") {
    PerronData pj = perron_data(corpus::comp2_j());
    GrowthConstant g = power_dominance_constant(pj, pj);
    CHECK(g.c_window == 1);  // J^n J^{-n} = 1 >= 0
    CHECK(g.c_sufficient >= 1);
    RatMat jr = to_rational(corpus::comp2_j());
    for (long n = g.n0; n < g.n0 + 4; ++n)
        CHECK(is_nonnegative(mat_pow(jr, g.c_sufficient * n) * mat_pow(jr, -n)));
}

TEST_CASE("growth constant rejects mismatched dominant data") {
    PerronData pj = perron_data(corpus::comp2_j());
    PerronData pk = perron_data(corpus::comp2_k());
    // right PF eigenvectors (1,4) vs (1,2) differ
    CHECK_THROWS_AS(power_dominance_constant(pj, pk), precondition_error);
}

TEST_CASE("growth constant for the identity-plus-cycle pair") {
    PerronData pj = perron_data(corpus::circulant_j());
    PerronData pk = perron_data(corpus::circulant_k());
    GrowthConstant g = power_dominance_constant(pj, pk);  // equal PF data
    RatMat jr = to_rational(corpus::circulant_j());
    RatMat kr = to_rational(corpus::circulant_k());
    for (long n = 1; n <= 4; ++n)
        CHECK(is_nonnegative(mat_pow(jr, g.c_sufficient * n) * mat_pow(kr, -n)));
}

TEST_CASE("growth constant with an intertwining map") {
    PerronData pj = perron_data(corpus::comp2_j());
    PerronData pk = perron_data(corpus::comp2_k());
    GrowthConstant g = power_dominance_constant_with_map(pj, pk, IntMat::identity(2));
    // lambda1^(c-1) > lambda2^c lambda3 with lambda2 = 4, lambda3 = 1/2:
    // c = 3 is the least sufficient exponent (64 = 64 fails at c = 2)
    CHECK(g.c_sufficient == 3);
    RatMat jr = to_rational(corpus::comp2_j());
    RatMat kr = to_rational(corpus::comp2_k());
    for (long n = g.n0; n < g.n0 + 4; ++n) {
        CHECK(is_nonnegative(mat_pow(jr, g.c_sufficient * n) * mat_pow(kr, -n)));
        CHECK(is_nonnegative(mat_pow(kr, g.c_sufficient * n) * mat_pow(jr, -n)));
    }
    CHECK_THROWS_AS(power_dominance_constant_with_map(pj, pk, M({{1, 2}, {2, 4}})),
                    precondition_error);  // singular map
}

TEST_CASE("growth constant for a matrix against itself with the matrix as map") {
    PerronData pj = perron_data(corpus::comp2_j());
    GrowthConstant g = power_dominance_constant_with_map(pj, pj, corpus::comp2_j());
    RatMat jr = to_rational(corpus::comp2_j());
    RatMat a1 = to_rational(corpus::comp2_j());
    for (long n = g.n0; n < g.n0 + 4; ++n) {
        CHECK(is_nonnegative(mat_pow(jr, g.c_window * n) * inverse(a1) * mat_pow(jr, -n)));
        CHECK(is_nonnegative(mat_pow(jr, g.c_window * n) * a1 * mat_pow(jr, -n)));
    }
}

TEST_CASE("eigendata is stable under permutation conjugation") {
    IntMat j = corpus::circulant_k();
    // permutation swapping coordinates 0 and 3
    IntMat p(5, 5);
    int perm[5] = {3, 1, 2, 0, 4};
    for (int i = 0; i < 5; ++i) p.at(i, perm[i]) = 1;
    IntMat conj = p * j * p.transpose();
    PerronData a = perron_data(j);
    PerronData b = perron_data(conj);
    CHECK(a.lambda == b.lambda);
    CHECK(a.pf_factor == b.pf_factor);
    for (int i = 0; i < 5; ++i) {
        CHECK(b.left[static_cast<size_t>(i)] == a.left[static_cast<size_t>(perm[i])]);
        CHECK(b.right[static_cast<size_t>(i)] == a.right[static_cast<size_t>(perm[i])]);
    }
}

TEST_CASE("all-ones eigenvectors for the identity-plus-cycle matrices") {
    for (const IntMat& m : {corpus::circulant_j(), corpus::circulant_k()}) {
        PerronData pd = perron_data(m);
        CHECK(pd.lambda == AlgebraicNumber(Rational(2)));
        CHECK(rat_vec(pd.left, {1, 1, 1, 1, 1}));
        CHECK(rat_vec(pd.right, {1, 1, 1, 1, 1}));
        CHECK(pd.has_secondary);
        CHECK(pd.lambda2_squared < AlgebraicNumber(Rational(4)));
    }
}

TEST_CASE("cubic-field eigendata of the unimodular 5x5 pair") {
    PerronData pd = perron_data(corpus::unimodular5_j());
    CHECK(pd.pf_factor == IntPoly({Integer(-1), Integer(-1), Integer(0), Integer(1)}));
    CHECK(pd.field->degree() == 3);
    // residual identities already verified inside perron_data; spot-check one
    NFElem gen = NFElem::generator(pd.field);
    NFMat jm = pd.matrix.map<NFElem>([](const Integer& x) { return NFElem(Rational(x)); });
    auto vl = vec_mat(pd.left, jm);
    for (size_t i = 0; i < pd.left.size(); ++i) CHECK(vl[i] == gen * pd.left[i]);
}

TEST_CASE("permutation-eigenvector example with an explicit secondary eigenvalue") {
    FieldPtr f = make_field(AlgebraicNumber(Rational(-4)));
    auto v = left_eigenvector(corpus::comp2_j(), NFElem::generator(f));
    CHECK(rat_vec(v, {4, -1}));
    FieldPtr f2 = make_field(AlgebraicNumber(Rational(-2)));
    auto v2 = left_eigenvector(corpus::comp2_k(), NFElem::generator(f2));
    CHECK(rat_vec(v2, {2, -1}));
}
