#include "staf/corpus.hpp"
#include "staf/matrix.hpp"

#include <doctest.h>

#include <random>

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

// evaluate p at the matrix m
IntMat eval_at_matrix(const IntPoly& p, const IntMat& m) {
    IntMat acc(m.rows(), m.rows());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += p.coeff(i);
    }
    return acc;
}

bool brute_force_primitive(const IntMat& m) {
    IntMat p = m;
    for (int k = 1; k <= wielandt_bound(m.rows()); ++k) {
        bool allpos = true;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (p.at(i, j) <= 0) allpos = false;
        if (allpos) return true;
        p = p * m;
    }
    bool allpos = true;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (p.at(i, j) <= 0) allpos = false;
    return allpos;
}

}  // namespace

TEST_CASE("exact powers including inverses") {
    IntMat j = M({{4, 1}, {32, 0}});
    RatMat jm1 = mat_pow(j, -1L);
    CHECK(jm1.at(0, 0) == 0);
    CHECK(jm1.at(0, 1) == make_rational(Integer(1), Integer(32)));
    CHECK(jm1.at(1, 0) == 1);
    CHECK(jm1.at(1, 1) == make_rational(Integer(-1), Integer(8)));
    CHECK(mat_pow(j, 1L) == to_rational(j));
    CHECK(mat_pow(j, 2u) == M({{48, 4}, {128, 32}}));
    CHECK(mat_pow(j, 0L) == RatMat::identity(2));
}

TEST_CASE("power times inverse power is the identity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> cd(0, 3), nd(2, 3);
    int built = 0;
    while (built < 20) {
        int n = nd(rng);
        IntMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = cd(rng);
        if (det(m) == 0) continue;
        ++built;
        for (long e = 1; e <= 8; ++e)
            CHECK(mat_pow(m, e) * mat_pow(m, -e) == RatMat::identity(n));
    }
}

TEST_CASE("determinants") {
    CHECK(det(M({{4, 1}, {32, 0}})) == -32);
    CHECK(det(IntMat::identity(5)) == 1);
    IntMat circulant = M({{1, 1, 0, 0, 0},
                          {0, 1, 1, 0, 0},
                          {0, 0, 1, 1, 0},
                          {0, 0, 0, 1, 1},
                          {1, 0, 0, 0, 1}});
    CHECK(det(circulant) == 2);
    CHECK_THROWS_AS(det(IntMat(2, 3)), precondition_error);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> cd(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        IntMat a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = cd(rng);
                b.at(i, j) = cd(rng);
            }
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("characteristic polynomial of companion matrices is symbolic") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> cd(0, 5), nd(1, 6);
    int built = 0;
    while (built < 25) {
        int n = nd(rng);
        CompanionSpec spec;
        for (int i = 0; i < n; ++i) spec.m.emplace_back(cd(rng));
        try {
            spec.validate();
        } catch (const precondition_error&) {
            continue;
        }
        ++built;
        IntPoly cp = charpoly(companion_matrix(spec));
        // t^N - m_1 t^(N-1) - ... - m_N
        std::vector<Integer> expect(static_cast<size_t>(n) + 1);
        expect[static_cast<size_t>(n)] = 1;
        for (int i = 0; i < n; ++i) expect[static_cast<size_t>(n - 1 - i)] = -spec.m[static_cast<size_t>(i)];
        CHECK(cp == IntPoly(std::move(expect)));
    }
}

TEST_CASE("charpoly factors of the unimodular 5x5 pair") {
    // (t^2 - t + 1)(t^3 - t - 1) = t^5 - t^4 - 1, expanded by hand
    IntPoly cubic({Integer(-1), Integer(-1), Integer(0), Integer(1)});
    CHECK(charpoly(corpus::unimodular5_j()) ==
          IntPoly({Integer(-1), Integer(0), Integer(0), Integer(0), Integer(-1), Integer(1)}));
    CHECK(charpoly(corpus::unimodular5_j()) == IntPoly({Integer(1), Integer(-1), Integer(1)}) * cubic);
    // (t^2 + 1)(t^3 - t - 1) = t^5 - t^2 - t - 1
    CHECK(charpoly(corpus::unimodular5_k()) == IntPoly({Integer(1), Integer(0), Integer(1)}) * cubic);
    // both cofactors power to the identity spectrum at exponent 12
    CHECK(is_cyclotomic(IntPoly({Integer(1), Integer(-1), Integer(1)})));
    CHECK(is_cyclotomic(IntPoly({Integer(1), Integer(0), Integer(1)})));
}

TEST_CASE("Cayley-Hamilton on the corpus matrices") {
    for (const IntMat& m : {corpus::comp2_j(), corpus::comp2_k(), corpus::circulant_j(),
                            corpus::circulant_k(), corpus::perm4_k(), corpus::perm4_j(),
                            corpus::unimodular5_j(), corpus::unimodular5_k(), corpus::mixed6_j(),
                            corpus::mixed6_k(), corpus::big6_j(), corpus::big6_k()}) {
        CHECK(eval_at_matrix(charpoly(m), m).is_zero());
    }
}

TEST_CASE("companion construction and recognition") {
    CHECK(companion_matrix(CompanionSpec{{Integer(4), Integer(32)}}) == M({{4, 1}, {32, 0}}));
    CHECK(companion_matrix(CompanionSpec{{Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)}}) ==
          M({{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}}));
    CHECK_THROWS_AS(companion_matrix(CompanionSpec{{Integer(0), Integer(2)}}), precondition_error);
    CHECK_THROWS_AS(companion_matrix(CompanionSpec{{Integer(3), Integer(0)}}), precondition_error);
    CHECK(companion_spec_of(M({{4, 1}, {32, 0}})).has_value());
    CHECK(!companion_spec_of(M({{4, 2}, {32, 0}})).has_value());
    CHECK(!companion_spec_of(M({{0, 1}, {2, 0}})).has_value());  // gcd condition fails
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(M({{4, 1}, {32, 0}})));
    CHECK(!is_primitive(M({{0, 1}, {1, 0}})));
    CHECK(is_primitive(M({{1, 1}, {1, 0}})));
    CHECK_THROWS_AS(is_primitive(M({{-1, 0}, {0, 1}})), precondition_error);
}

TEST_CASE("primitivity agrees with big-integer brute force") {
    // exhaustive through 3x3 with entries {0,1,2}; sampled 4x4
    for (int mask = 0; mask < 81; ++mask) {
        IntMat m(2, 2);
        int v = mask;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                m.at(i, j) = v % 3;
                v /= 3;
            }
        CHECK(is_primitive(m) == brute_force_primitive(m));
    }
    for (long mask = 0; mask < 19683; ++mask) {
        IntMat m(3, 3);
        long v = mask;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m.at(i, j) = v % 3;
                v /= 3;
            }
        CHECK(is_primitive(m) == brute_force_primitive(m));
    }
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> cd(0, 2);
    for (int iter = 0; iter < 3000; ++iter) {
        IntMat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = cd(rng);
        CHECK(is_primitive(m) == brute_force_primitive(m));
    }
}

TEST_CASE("inverse of singular matrices is rejected") {
    CHECK_THROWS_AS(inverse(M({{1, 2}, {2, 4}})), precondition_error);
}

TEST_CASE("field nullspace") {
    // left PF data of [[4,1],[32,0]] at eigenvalue 8 over the rationals
    RatMat a(2, 2);
    a.at(0, 0) = Rational(4) - Rational(8);
    a.at(0, 1) = Rational(32);
    a.at(1, 0) = Rational(1);
    a.at(1, 1) = Rational(-8);
    auto basis = nullspace(a);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] * Rational(1) == basis[0][1] * Rational(8));
}
