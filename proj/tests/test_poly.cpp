#include "staf/poly.hpp"

#include <doctest.h>

#include <random>

using namespace staf;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Integer> c;
    for (long x : coeffs_low_first) c.emplace_back(x);
    return IntPoly(std::move(c));
}

IntPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg), cd(-5, 5);
    int d = dd(rng);
    std::vector<Integer> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = cd(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial product expands the factored form") {
    // (t - 2)(t^4 + t^3 + 1) = t^5 - t^4 - 2t^3 + t - 2, expanded by hand
    IntPoly lhs = P({-2, 1}) * P({1, 0, 0, 1, 1});
    CHECK(lhs == P({-2, 1, 0, -2, -1, 1}));
}

TEST_CASE("gcd of polynomials with a shared root") {
    IntPoly g = IntPoly::gcd(P({-1, 0, 1}), P({1, -2, 1}));  // t^2-1, (t-1)^2
    CHECK(g == P({-1, 1}));
}

TEST_CASE("divmod on monic divisors") {
    auto [q, r] = IntPoly::divmod(P({0, 0, 0, 1}), P({0, 1}));  // t^3 / t
    CHECK(q == P({0, 0, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(IntPoly::divmod(P({1}), IntPoly::zero()), precondition_error);
}

TEST_CASE("content and primitive part") {
    IntPoly p = P({2, 4, 6});
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == P({1, 2, 3}));
    CHECK((-p).primitive_part() == P({-1, -2, -3}));
}

TEST_CASE("resultant matches the root-product formula") {
    // Res(t^2-1, t^2-4) = g(1) * g(-1) = (-3)(-3) = 9
    CHECK(IntPoly::resultant(P({-1, 0, 1}), P({-4, 0, 1})) == 9);
    // shared root: resultant vanishes
    CHECK(IntPoly::resultant(P({-1, 1}), P({-1, 0, 0, 1})) == 0);
}

TEST_CASE("root composition polynomials") {
    IntPoly sq2 = P({-2, 0, 1});
    // products of roots of t^2-2 with themselves: +-2
    IntPoly prod = root_product_poly(sq2, sq2);
    IntPoly sf = prod.squarefree_part();
    CHECK(IntPoly::exact_divide(sf, IntPoly::gcd(sf, P({-4, 0, 1}))).degree() == 0);
    // (t-2), (t-3) -> root 6
    IntPoly six = root_product_poly(P({-2, 1}), P({-3, 1})).primitive_part();
    CHECK(six.eval(Integer(6)) == 0);
    CHECK(six.degree() == 1);
    // squares of roots of t^2-2
    IntPoly pw = root_power_poly(sq2, 2).squarefree_part();
    CHECK(pw.eval(Integer(2)) == 0);
    CHECK(pw.degree() == 1);
    // sums of roots of t^2-2 and t^2-3: minimal polynomial t^4 - 10t^2 + 1
    IntPoly sum = root_sum_poly(sq2, P({-3, 0, 1})).primitive_part();
    if (sign(sum.lc()) < 0) sum = -sum;
    CHECK(sum == P({1, 0, -10, 0, 1}));
}

TEST_CASE("shift and scale_roots") {
    CHECK(P({0, 0, 1}).shift(Integer(1)) == P({1, -2, 1}));  // (t-1)^2
    // roots of t^2 - 2 scaled by 2: t^2 - 8
    CHECK(P({-2, 0, 1}).scale_roots(Rational(2)) == P({-8, 0, 1}));
    CHECK(P({-8, 0, 1}).scale_roots(make_rational(Integer(1), Integer(2))) == P({-2, 0, 1}));
}

TEST_CASE("squarefree decomposition") {
    IntPoly p = P({0, 0, 1}) * P({-1, 1});  // t^2 (t-1)
    auto dec = p.squarefree_decomposition();
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == std::make_pair(P({-1, 1}), 1));
    CHECK(dec[1] == std::make_pair(P({0, 1}), 2));
    CHECK(P({-2, 0, 1}).squarefree_part() == P({-2, 0, 1}));
}

TEST_CASE("reconstruction property for arithmetic on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 5), b = random_poly(rng, 4);
        CHECK(a + b - b == a);
        if (!b.is_zero()) {
            IntPoly prod = a * b;
            CHECK(IntPoly::exact_divide(prod, b) == a);
            CHECK(IntPoly::pseudo_rem(prod, b).is_zero());
            if (b.degree() >= 1)
                CHECK(!IntPoly::try_exact_divide(prod + IntPoly::one(), b).has_value());
        }
    }
}

TEST_CASE("derivative and evaluation") {
    IntPoly p = P({1, 2, 3});  // 3t^2 + 2t + 1
    CHECK(p.derivative() == P({2, 6}));
    CHECK(p.eval(Integer(2)) == 17);
    CHECK(p.eval(make_rational(Integer(1), Integer(2))) == make_rational(Integer(11), Integer(4)));
}

TEST_CASE("display form") {
    CHECK(P({-1, -1, 0, 1}).to_string() == "t^3 - t - 1");
    CHECK(IntPoly::zero().to_string() == "0");
}
