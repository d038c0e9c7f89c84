#include "staf/poly_factor.hpp"

#include <doctest.h>

#include <random>

using namespace staf;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Integer> c;
    for (long x : coeffs_low_first) c.emplace_back(x);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("degree five with a linear and an irreducible quartic factor") {
    // (t-2)(t^4 - 3t^3 + 4t^2 - 2t + 1)
    IntPoly quartic = P({1, -2, 4, -3, 1});
    IntPoly p = P({-2, 1}) * quartic;
    Factorization f = factor_over_Z(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.unit == 1);
    CHECK(f.content == 1);
    CHECK(f.factors[0] == std::make_pair(P({-2, 1}), 1));
    CHECK(f.factors[1] == std::make_pair(quartic, 1));
    CHECK(f.reconstruct() == p);
}

TEST_CASE("cubic times t^3+1 splits into three irreducibles") {
    IntPoly p = P({-1, -1, 0, 1}) * P({1, 0, 0, 1});  // (t^3-t-1)(t^3+1)
    Factorization f = factor_over_Z(p);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::make_pair(P({1, 1}), 1));          // t+1
    CHECK(f.factors[1] == std::make_pair(P({1, -1, 1}), 1));      // t^2-t+1
    CHECK(f.factors[2] == std::make_pair(P({-1, -1, 0, 1}), 1));  // t^3-t-1
    CHECK(f.reconstruct() == p);
}

TEST_CASE("pure power") {
    Factorization f = factor_over_Z(P({0, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::make_pair(P({0, 1}), 2));
}

TEST_CASE("content and sign are tracked") {
    Factorization f = factor_over_Z(P({0, -2, -2}));  // -2t(t+1)
    CHECK(f.unit == -1);
    CHECK(f.content == 2);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.reconstruct() == P({0, -2, -2}));
}

TEST_CASE("irreducibility recognition") {
    CHECK(is_irreducible(P({-1, -1, 0, 0, 1})));  // t^4 - t - 1
    CHECK(is_irreducible(P({1, 0, 0, 1, 1})));    // t^4 + t^3 + 1
    CHECK(is_irreducible(P({-1, -1, 0, 1})));     // t^3 - t - 1
    CHECK(!is_irreducible(P({-1, 0, 1})));        // (t-1)(t+1)
    CHECK(!is_irreducible(P({1, 2, 1})));         // (t+1)^2
    CHECK(is_irreducible(P({7, 1})));
}

TEST_CASE("cyclotomic-like products with repeated factors") {
    IntPoly p = P({1, 1}) * P({1, 1}) * P({1, 1, 1}) * P({-3, 1});
    Factorization f = factor_over_Z(p);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::make_pair(P({-3, 1}), 1));
    CHECK(f.factors[1] == std::make_pair(P({1, 1}), 2));
    CHECK(f.factors[2] == std::make_pair(P({1, 1, 1}), 1));
}

TEST_CASE("random products reconstruct exactly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cd(-6, 6), dd(1, 4), nf(1, 3);
    for (int iter = 0; iter < 60; ++iter) {
        IntPoly p = IntPoly::one();
        int parts = nf(rng);
        for (int i = 0; i < parts; ++i) {
            int d = dd(rng);
            std::vector<Integer> c(static_cast<size_t>(d) + 1);
            for (auto& x : c) x = cd(rng);
            if (c.back() == 0) c.back() = 1;
            IntPoly q(std::move(c));
            if (q.is_zero()) q = IntPoly::one();
            p = p * q;
        }
        if (p.is_zero() || p.degree() == 0) continue;
        Factorization f = factor_over_Z(p);
        CHECK(f.reconstruct() == p);
        for (const auto& [fac, mult] : f.factors) {
            CHECK(sign(fac.lc()) > 0);
            CHECK(fac.content() == 1);
            CHECK(is_irreducible(fac));
        }
    }
}

TEST_CASE("non-monic factorizations") {
    IntPoly p = P({1, 2}) * P({-3, 2});  // (2t+1)(2t-3)
    Factorization f = factor_over_Z(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.reconstruct() == p);
    CHECK(f.factors[0] == std::make_pair(P({-3, 2}), 1));
    CHECK(f.factors[1] == std::make_pair(P({1, 2}), 1));
}
