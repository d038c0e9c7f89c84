#include "staf/real_roots.hpp"

#include <doctest.h>

#include <random>

using namespace staf;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Integer> c;
    for (long x : coeffs_low_first) c.emplace_back(x);
    return IntPoly(std::move(c));
}

Rational Q(long n, long d) { return make_rational(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("isolation of the square roots of two") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] < AlgebraicNumber(Q(-1, 1)));
    CHECK(roots[0] > AlgebraicNumber(Q(-2, 1)));
    CHECK(roots[1] > AlgebraicNumber(Q(1, 1)));
    CHECK(roots[1] < AlgebraicNumber(Q(2, 1)));
}

TEST_CASE("the plastic-like cubic has one real root near 1.3247") {
    auto roots = isolate_real_roots(P({-1, -1, 0, 1}));
    REQUIRE(roots.size() == 1);
    AlgebraicNumber r = roots[0].refined(Q(1, 100));
    CHECK(r > AlgebraicNumber(Q(132, 100)));
    CHECK(r < AlgebraicNumber(Q(133, 100)));
}

TEST_CASE("rational roots are exact") {
    auto roots = isolate_real_roots(P({-8, 1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].is_rational());
    CHECK(roots[0].rational_value() == 8);
}

TEST_CASE("isolating intervals are pairwise disjoint across factors") {
    // (t^2 - 2)(t^2 - 3)(t - 1)(t + 2) has interleaved roots from three factors
    IntPoly p = P({-2, 0, 1}) * P({-3, 0, 1}) * P({-1, 1}) * P({2, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 6);
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi() < roots[i + 1].lo());
}

TEST_CASE("sturm count equals the number of isolated roots") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> cd(-4, 4), dd(1, 6);
    for (int iter = 0; iter < 120; ++iter) {
        int d = dd(rng);
        std::vector<Integer> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = cd(rng);
        if (c.back() == 0) c.back() = 1;
        IntPoly p(std::move(c));
        if (p.degree() < 1) continue;
        IntPoly sf = p.squarefree_part();
        CHECK(static_cast<int>(isolate_real_roots(sf).size()) == sturm_count_all(sf));
    }
}

TEST_CASE("refinement halves the interval and keeps the root bracketed") {
    AlgebraicNumber r = isolate_real_roots(P({-2, 0, 1})).back();
    Rational w = r.width();
    for (int i = 0; i < 20; ++i) {
        AlgebraicNumber r2 = r.refined(w / 2);
        CHECK(r2.width() <= w / 2);
        CHECK(r2.lo() >= r.lo());
        CHECK(r2.hi() <= r.hi());
        CHECK(r2.minpoly().sign_at(r2.lo()) * r2.minpoly().sign_at(r2.hi()) < 0);
        r = r2;
        w = r.width();
    }
}

TEST_CASE("algebraic arithmetic identities") {
    AlgebraicNumber s2 = isolate_real_roots(P({-2, 0, 1})).back();
    CHECK(alg_mul(s2, s2) == AlgebraicNumber(Q(2, 1)));
    CHECK(alg_pow(s2, 2) == AlgebraicNumber(Q(2, 1)));
    CHECK(alg_mul(s2, alg_inv(s2)) == AlgebraicNumber(Q(1, 1)));
    CHECK(alg_add(s2, alg_neg(s2)) == AlgebraicNumber(Q(0, 1)));
    AlgebraicNumber s3 = isolate_real_roots(P({-3, 0, 1})).back();
    CHECK(alg_mul(s2, s3) == isolate_real_roots(P({-6, 0, 1})).back());
    AlgebraicNumber sum = alg_add(s2, s3);
    CHECK(sum.minpoly() == P({1, 0, -10, 0, 1}));
    CHECK(alg_mul_rat(s2, Q(3, 2)) == isolate_real_roots(P({-9, 0, 2})).back());
    CHECK(s2 < s3);
    CHECK(alg_neg(s3) < alg_neg(s2));
}

TEST_CASE("irrational operands with rational results") {
    AlgebraicNumber s2 = isolate_real_roots(P({-2, 0, 1})).back();
    // 1 - sqrt(2) is the smaller root of t^2 - 2t - 1
    AlgebraicNumber b = isolate_real_roots(P({-1, -2, 1})).front();
    CHECK(alg_add(s2, b) == AlgebraicNumber(Q(1, 1)));
    CHECK(alg_mul(s2, alg_neg(s2)) == AlgebraicNumber(Q(-2, 1)));
}

TEST_CASE("power product comparison") {
    AlgebraicNumber s2 = isolate_real_roots(P({-2, 0, 1})).back();
    AlgebraicNumber s3 = isolate_real_roots(P({-3, 0, 1})).back();
    // 8^2 = 4^3
    CHECK(compare_power_products({{AlgebraicNumber(Q(8, 1)), 2}}, {{AlgebraicNumber(Q(4, 1)), 3}}) == 0);
    // sqrt(2)^3 < sqrt(3)^2
    CHECK(compare_power_products({{s2, 3}}, {{s3, 2}}) < 0);
    CHECK(compare_power_products({{s3, 2}, {s2, 2}}, {{AlgebraicNumber(Q(5, 1)), 1}}) > 0);  // 6 > 5
    // a tie that interval refinement cannot break: sqrt(2)^2 vs 2
    CHECK(compare_power_products({{s2, 2}}, {{AlgebraicNumber(Q(2, 1)), 1}}) == 0);
    // zero bases
    CHECK(compare_power_products({{AlgebraicNumber(Q(0, 1)), 1}}, {{s2, 1}}) < 0);
}

TEST_CASE("comparisons across representations") {
    AlgebraicNumber a = isolate_real_roots(P({-2, 0, 1})).back();
    AlgebraicNumber b = isolate_real_roots(P({-8, 0, 0, 0, 1})).back();  // 8^(1/4) = sqrt(2) * ...
    // 8^(1/4) != sqrt(2); order decided by refinement
    CHECK(a != b);
    CHECK(alg_pow(b, 2) == alg_mul_rat(a, Rational(2)));  // (8^(1/4))^2 = 2 sqrt 2
    CHECK(AlgebraicNumber(Q(3, 2)) > a);
}

TEST_CASE("unit circle root counts") {
    CHECK(unit_circle_root_count(P({1, -1, 1})) == 2);      // t^2-t+1
    CHECK(unit_circle_root_count(P({-1, -1, 1})) == 0);     // t^2-t-1
    CHECK(unit_circle_root_count(P({1, 1})) == 1);          // t+1
    CHECK(unit_circle_root_count(P({-2, 1})) == 0);         // t-2
    CHECK(unit_circle_root_count(P({1, 1, 1, 1, 1})) == 4); // 5th cyclotomic
    CHECK(unit_circle_root_count(P({1, -2, 4, -3, 1})) == 0);
    CHECK(is_cyclotomic(P({1, 1, 1, 1, 1})));
    CHECK(is_cyclotomic(P({1, -1, 1})));
    CHECK(!is_cyclotomic(P({1, -2, 4, -3, 1})));
    CHECK(!is_cyclotomic(P({1, 0, 0, 1, 1})));
    CHECK(!is_cyclotomic(P({-1, -1, 0, 1})));
    // the classical degree-10 palindromic polynomial with smallest known
    // dominant root > 1: eight roots on the circle, two real off it
    IntPoly lehmer = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(is_irreducible(lehmer));
    CHECK(unit_circle_root_count(lehmer) == 8);
    CHECK(!is_cyclotomic(lehmer));
}

TEST_CASE("root modulus extrema") {
    // (t-2)(t+2): both moduli 2
    CHECK(max_root_modulus_squared(P({-4, 0, 1})) == AlgebraicNumber(Q(4, 1)));
    CHECK(min_root_modulus_squared(P({-4, 0, 1})) == AlgebraicNumber(Q(4, 1)));
    // t^2+1: modulus 1
    CHECK(max_root_modulus_squared(P({1, 0, 1})) == AlgebraicNumber(Q(1, 1)));
    // t^3 - t - 1: max is lambda^2, min is 1/lambda (conjugate pair product)
    AlgebraicNumber lambda = isolate_real_roots(P({-1, -1, 0, 1})).back();
    CHECK(max_root_modulus_squared(P({-1, -1, 0, 1})) == alg_pow(lambda, 2));
    CHECK(min_root_modulus_squared(P({-1, -1, 0, 1})) == alg_inv(lambda));
    // mixed: (t-8)(t+4) from the 2x2 companion example
    CHECK(max_root_modulus_squared(P({-32, -4, 1})) == AlgebraicNumber(Q(64, 1)));
    CHECK(min_root_modulus_squared(P({-32, -4, 1})) == AlgebraicNumber(Q(16, 1)));
}

TEST_CASE("randomized arithmetic identities on quadratic surds") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> nd(2, 40);
    auto surd = [&]() {
        while (true) {
            long n = nd(rng);
            IntPoly p({Integer(-n), Integer(0), Integer(1)});
            auto roots = isolate_real_roots(p);
            if (roots.back().is_rational()) continue;  // skip perfect squares
            return roots.back();
        }
    };
    for (int iter = 0; iter < 15; ++iter) {
        AlgebraicNumber a = surd(), b = surd();
        AlgebraicNumber ab = alg_mul(a, b);
        CHECK(ab == alg_mul(b, a));
        CHECK(alg_mul(ab, alg_inv(b)) == a);
        CHECK(alg_pow(ab, 2) == alg_mul(alg_pow(a, 2), alg_pow(b, 2)));
        CHECK(alg_add(a, b) == alg_add(b, a));
        CHECK(alg_add(alg_add(a, b), alg_neg(b)) == a);
        CHECK(ab.sign() == 1);
    }
}

TEST_CASE("sign of a polynomial at an algebraic point") {
    AlgebraicNumber s2 = isolate_real_roots(P({-2, 0, 1})).back();
    CHECK(sign_at_algebraic(to_rat_poly(P({-2, 0, 1})), s2) == 0);
    CHECK(sign_at_algebraic(to_rat_poly(P({0, 1})), s2) == 1);
    CHECK(sign_at_algebraic(to_rat_poly(P({-3, 0, 1})), s2) == -1);  // 2 - 3 < 0
}
