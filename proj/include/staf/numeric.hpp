#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP-backed) plus the handful of helpers the rest of the library leans on.
// All values are plain immutable-by-convention value types; nothing here
// touches global state, so everything is safe to share across threads.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace staf {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an operation's stated precondition is violated (singular
// matrix where nonsingular is required, malformed companion data, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a bounded search or iteration budget is exhausted.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, long e) {
    if (e >= 0) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw precondition_error("pow: negative power of zero");
    return pow(Rational(1) / base, -e);
}

inline bool divides(const Integer& d, const Integer& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline Integer divexact(const Integer& a, const Integer& d) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// make_rational canonicalizes; the raw mpq_class(a, b) constructor does not.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw precondition_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Prime factorization by trial division; adequate for the determinant-scale
// constants this library meets.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

// Set of distinct primes dividing |n| (empty for n = +-1; error for n = 0).
std::vector<Integer> prime_support(const Integer& n);

inline int bit_length(const Integer& a) {
    if (a == 0) return 0;
    return static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

}  // namespace staf
