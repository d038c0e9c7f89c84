#include "staf/poly_factor.hpp"

#include <algorithm>
#include <cmath>

namespace staf {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p for a machine-word prime p. Coefficients live in
// [0, p); products fit in a long long for the prime sizes used here.

using ZpPoly = std::vector<long>;

long zp_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
}

void zp_normalize(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_from(const IntPoly& f, long p) {
    ZpPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Integer m = f.coeffs()[i] % p;
        if (m < 0) m += p;
        r[i] = m.get_si();
    }
    zp_normalize(r);
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
    zp_normalize(r);
    return r;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    zp_normalize(a);
    return a;
}

ZpPoly zp_add(ZpPoly a, const ZpPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    zp_normalize(a);
    return a;
}

ZpPoly zp_scale(ZpPoly a, long s, long p) {
    for (auto& x : a) x = static_cast<long>((static_cast<long long>(x) * s) % p);
    zp_normalize(a);
    return a;
}

std::pair<ZpPoly, ZpPoly> zp_divmod(const ZpPoly& a, const ZpPoly& b, long p) {
    ZpPoly rem = a, q;
    if (zp_deg(a) >= zp_deg(b)) q.assign(a.size() - b.size() + 1, 0);
    long inv_lc = zp_inv(b.back(), p);
    while (zp_deg(rem) >= zp_deg(b)) {
        long f = static_cast<long>((static_cast<long long>(rem.back()) * inv_lc) % p);
        int k = zp_deg(rem) - zp_deg(b);
        q[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            size_t idx = i + static_cast<size_t>(k);
            rem[idx] = static_cast<long>(((rem[idx] - static_cast<long long>(f) * b[i]) % p + p) % p);
        }
        zp_normalize(rem);
    }
    zp_normalize(q);
    return {q, rem};
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, long p) { return zp_divmod(a, b, p).second; }

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = zp_scale(a, zp_inv(a.back(), p), p);
    return a;
}

// extended gcd: returns (g, s, t) with s*a + t*b = g (g monic)
void zp_xgcd(const ZpPoly& a, const ZpPoly& b, long p, ZpPoly& g, ZpPoly& s, ZpPoly& t) {
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    zp_normalize(s0);
    while (!r1.empty()) {
        auto [q, r2] = zp_divmod(r0, r1, p);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    long inv = zp_inv(r0.back(), p);
    g = zp_scale(r0, inv, p);
    s = zp_scale(s0, inv, p);
    t = zp_scale(t0, inv, p);
}

ZpPoly zp_deriv(const ZpPoly& a, long p) {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<long>((static_cast<long long>(a[i]) * static_cast<long>(i % p)) % p);
    zp_normalize(r);
    return r;
}

// Berlekamp factorization of a squarefree monic polynomial mod p.
// Returns the monic irreducible factors.
std::vector<ZpPoly> berlekamp(const ZpPoly& f, long p) {
    int d = zp_deg(f);
    if (d == 1) return {f};
    // rows[i] = x^(i*p) mod f
    ZpPoly xp = {1};
    {
        ZpPoly x = {0, 1};
        for (long i = 0; i < p; ++i) xp = zp_mod(zp_mul(xp, x, p), f, p);
    }
    std::vector<ZpPoly> rows(static_cast<size_t>(d));
    rows[0] = {1};
    for (int i = 1; i < d; ++i) rows[static_cast<size_t>(i)] = zp_mod(zp_mul(rows[static_cast<size_t>(i - 1)], xp, p), f, p);
    // M = (Q - I)^T; nullspace of M gives v with v(x)^p = v(x) mod f
    std::vector<std::vector<long>> m(static_cast<size_t>(d), std::vector<long>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            long q = j <= zp_deg(rows[static_cast<size_t>(i)]) ? rows[static_cast<size_t>(i)][static_cast<size_t>(j)] : 0;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = ((q - (i == j ? 1 : 0)) % p + p) % p;
        }
    // Gaussian elimination; collect nullspace basis
    std::vector<int> pivot_col(static_cast<size_t>(d), -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int sel = -1;
        for (int row = rank; row < d; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        long inv = zp_inv(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < d; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                static_cast<long>((static_cast<long long>(m[static_cast<size_t>(rank)][static_cast<size_t>(j)]) * inv) % p);
        for (int row = 0; row < d; ++row) {
            if (row == rank) continue;
            long f2 = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f2 == 0) continue;
            for (int j = 0; j < d; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                    static_cast<long>(((m[static_cast<size_t>(row)][static_cast<size_t>(j)] -
                                        static_cast<long long>(f2) * m[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p + p) % p);
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    std::vector<ZpPoly> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(d), false);
    for (int i = 0; i < rank; ++i) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = true;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        ZpPoly v(static_cast<size_t>(d), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int i = 0; i < rank; ++i) {
            long val = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (val != 0) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = (p - val) % p;
        }
        zp_normalize(v);
        basis.push_back(std::move(v));
    }
    size_t r = basis.size();  // number of irreducible factors
    std::vector<ZpPoly> factors = {f};
    if (r == 1) return factors;
    for (const auto& v : basis) {
        if (zp_deg(v) < 1) continue;  // constant vector splits nothing
        for (size_t fi = 0; fi < factors.size() && factors.size() < r; ++fi) {
            if (zp_deg(factors[fi]) <= 1) continue;
            for (long c = 0; c < p && factors.size() < r; ++c) {
                ZpPoly shifted = v;
                if (shifted.empty()) shifted = {0};
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                zp_normalize(shifted);
                ZpPoly g = zp_gcd(factors[fi], shifted, p);
                if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(factors[fi])) {
                    ZpPoly q = zp_divmod(factors[fi], g, p).first;
                    factors[fi] = std::move(q);
                    factors.push_back(std::move(g));
                }
            }
        }
        if (factors.size() == r) break;
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear, factor-tree) of a monic factorization mod p up to
// mod p^K.

IntPoly int_from_zp(const ZpPoly& a) {
    std::vector<Integer> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& a, const Integer& mod) {
    std::vector<Integer> c(a.coeffs());
    for (auto& x : c) {
        x %= mod;
        if (x < 0) x += mod;
    }
    return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& a, const Integer& mod) {
    std::vector<Integer> c(a.coeffs());
    Integer half = mod / 2;
    for (auto& x : c) {
        x %= mod;
        if (x < 0) x += mod;
        if (x > half) x -= mod;
    }
    return IntPoly(std::move(c));
}

// Lift f = g*h (mod p) to mod p^K; f, g, h monic, g and h coprime mod p.
void hensel_pair(const IntPoly& f, IntPoly& g, IntPoly& h, long p, int K) {
    ZpPoly gp = zp_from(g, p), hp = zp_from(h, p);
    ZpPoly unused, a, b;
    zp_xgcd(gp, hp, p, unused, a, b);  // a*g + b*h = 1 (mod p)
    Integer pk(1);
    for (int k = 1; k < K; ++k) {
        pk *= p;  // p^k
        IntPoly e = f - g * h;
        std::vector<Integer> ec(e.coeffs());
        for (auto& x : ec) x = divexact(x, pk);
        ZpPoly ep = zp_from(IntPoly(std::move(ec)), p);
        auto [q, u] = zp_divmod(zp_mul(b, ep, p), gp, p);
        ZpPoly w = zp_add(zp_mul(a, ep, p), zp_mul(q, hp, p), p);
        // u*h + w*g = e (mod p), deg u < deg g, so both stay monic
        g = g + int_from_zp(u) * pk;
        h = h + int_from_zp(w) * pk;
    }
    Integer pK = staf::pow(Integer(p), static_cast<unsigned long>(K));
    g = reduce_mod(g, pK);
    h = reduce_mod(h, pK);
}

void hensel_tree(const IntPoly& f, std::vector<ZpPoly>::const_iterator first,
                 std::vector<ZpPoly>::const_iterator last, long p, int K,
                 std::vector<IntPoly>& out) {
    size_t n = static_cast<size_t>(last - first);
    if (n == 1) {
        Integer pK = staf::pow(Integer(p), static_cast<unsigned long>(K));
        out.push_back(reduce_mod(f, pK));
        return;
    }
    auto mid = first + static_cast<long>(n / 2);
    ZpPoly gp = {1}, hp = {1};
    for (auto it = first; it != mid; ++it) gp = zp_mul(gp, *it, p);
    for (auto it = mid; it != last; ++it) hp = zp_mul(hp, *it, p);
    IntPoly g = int_from_zp(gp), h = int_from_zp(hp);
    hensel_pair(f, g, h, p, K);
    hensel_tree(g, first, mid, p, K, out);
    hensel_tree(h, mid, last, p, K, out);
}

// ---------------------------------------------------------------------------

Integer sqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

// Landau-Mignotte style bound on coefficients of any monic factor of the
// monic polynomial f.
Integer factor_coeff_bound(const IntPoly& f) {
    Integer norm2(0);
    for (const auto& a : f.coeffs()) norm2 += a * a;
    return staf::pow(Integer(2), static_cast<unsigned long>(f.degree())) * sqrt_ceil(norm2) + 1;
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    if (f.degree() == 1) return {f};
    // Make the problem monic: fm(x) = lc^(d-1) f(x/lc) has roots lc * (roots of f).
    const Integer& lead = f.lc();
    int d = f.degree();
    IntPoly fm;
    {
        std::vector<Integer> c(static_cast<size_t>(d) + 1);
        c[static_cast<size_t>(d)] = 1;
        for (int k = 0; k < d; ++k)
            c[static_cast<size_t>(k)] = f.coeff(k) * staf::pow(lead, static_cast<unsigned long>(d - 1 - k));
        fm = IntPoly(std::move(c));
    }

    // choose a prime keeping fm squarefree mod p; among a few candidates
    // prefer the one with the fewest modular factors
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    long best_p = 0;
    std::vector<ZpPoly> best_factors;
    int tried = 0;
    for (long p : primes) {
        ZpPoly fp = zp_from(fm, p);
        if (zp_deg(fp) != fm.degree()) continue;
        ZpPoly d = zp_deriv(fp, p);
        if (d.empty()) continue;
        ZpPoly g = zp_gcd(fp, d, p);
        if (zp_deg(g) != 0) continue;  // not squarefree mod p
        ZpPoly monic = zp_scale(fp, zp_inv(fp.back(), p), p);
        std::vector<ZpPoly> zfactors = berlekamp(monic, p);
        if (zfactors.size() == 1) return {f};  // irreducible mod p => irreducible
        if (best_p == 0 || zfactors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(zfactors);
        }
        if (++tried >= 4) break;
    }
    if (best_p == 0) throw std::logic_error("factor_squarefree: no usable prime found");
    long p = best_p;

    Integer bound = factor_coeff_bound(fm);
    int K = 1;
    Integer pk(p);
    while (pk <= 2 * bound) {
        pk *= p;
        ++K;
    }
    std::sort(best_factors.begin(), best_factors.end(),
              [](const ZpPoly& a, const ZpPoly& b) { return a.size() < b.size(); });
    std::vector<IntPoly> lifted;
    hensel_tree(reduce_mod(fm, pk), best_factors.cbegin(), best_factors.cend(), p, K, lifted);
    Integer pK = pk;

    // subset recombination on the monic model
    std::vector<IntPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly remaining = fm;
    auto push_back_mapped = [&](const IntPoly& monic_factor) {
        // map factor of fm back to a factor of f: g(lc * x), primitive part
        IntPoly mapped = monic_factor.scale_roots(make_rational(Integer(1), lead));
        if (sign(mapped.lc()) < 0) mapped = -mapped;
        result.push_back(mapped);
    };
    bool found = true;
    while (found && live.size() > 1) {
        found = false;
        size_t r = live.size();
        for (size_t size = 1; size <= r / 2 && !found; ++size) {
            // enumerate subsets of the given size as bitmasks
            for (unsigned long mask = 0; mask < (1ul << r) && !found; ++mask) {
                if (__builtin_popcountl(mask) != size) continue;
                IntPoly cand = IntPoly::one();
                for (size_t i = 0; i < r; ++i)
                    if (mask & (1ul << i)) cand = reduce_mod(cand * lifted[live[i]], pK);
                cand = symmetric_mod(cand, pK);
                auto quo = IntPoly::try_exact_divide(remaining, cand);
                if (quo) {
                    push_back_mapped(cand);
                    remaining = *quo;
                    std::vector<size_t> next;
                    for (size_t i = 0; i < r; ++i)
                        if (!(mask & (1ul << i))) next.push_back(live[i]);
                    live = std::move(next);
                    found = true;
                }
            }
        }
    }
    if (remaining.degree() > 0) push_back_mapped(remaining);
    return result;
}

}  // namespace

IntPoly Factorization::reconstruct() const {
    IntPoly acc = IntPoly::constant(unit * content);
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * f;
    return acc;
}

Factorization factor_over_Z(const IntPoly& p) {
    if (p.is_zero()) throw precondition_error("factor_over_Z: zero polynomial");
    Factorization out;
    out.unit = sign(p.lc()) < 0 ? -1 : 1;
    out.content = p.content();
    std::vector<std::pair<IntPoly, int>> work = p.squarefree_decomposition();
    for (const auto& [sqfree, mult] : work) {
        for (const IntPoly& irr : factor_squarefree(sqfree)) {
            bool merged = false;
            for (auto& [f, m] : out.factors)
                if (f == irr) {
                    m += mult;
                    merged = true;
                    break;
                }
            if (!merged) out.factors.emplace_back(irr, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return IntPoly::compare(a.first, b.first) < 0; });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return false;
    Factorization f = factor_over_Z(p);
    return f.factors.size() == 1 && f.factors[0].second == 1 &&
           f.factors[0].first.degree() == p.degree();
}

std::vector<IntPoly> distinct_irreducible_factors(const IntPoly& p) {
    std::vector<IntPoly> out;
    for (auto& [f, m] : factor_over_Z(p).factors) out.push_back(f);
    return out;
}

}  // namespace staf
