#include "staf/padic.hpp"

#include <map>

namespace staf {

IntMat reduce_mod(const IntMat& m, const Integer& modulus) {
    return m.map<Integer>([&](const Integer& x) {
        Integer r = x % modulus;
        if (r < 0) r += modulus;
        return r;
    });
}

IntMat mat_pow_mod(const IntMat& m, unsigned long e, const Integer& modulus) {
    if (!m.is_square()) throw precondition_error("mat_pow_mod: non-square matrix");
    IntMat acc = IntMat::identity(m.rows());
    IntMat base = reduce_mod(m, modulus);
    while (e) {
        if (e & 1ul) acc = reduce_mod(acc * base, modulus);
        base = reduce_mod(base * base, modulus);
        e >>= 1ul;
    }
    return acc;
}

namespace {

std::string serialize(const IntMat& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            s += m.at(i, j).get_str();
            s += ',';
        }
    return s;
}

// p-adic valuation and unit part of x within Z/p^m (x nonzero mod p^m)
int val_p(const Integer& x, const Integer& p, int m) {
    Integer v = x;
    int e = 0;
    while (e < m && v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

Integer unit_inverse_mod(const Integer& u, const Integer& modulus) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("unit_inverse_mod: not a unit");
    return inv;
}

}  // namespace

std::pair<long, IntMat> idempotent_power_mod(const IntMat& a, const Integer& p, int m,
                                             long step_budget) {
    if (!a.is_square()) throw precondition_error("idempotent_power_mod: non-square matrix");
    if (m < 1) throw precondition_error("idempotent_power_mod: level must be >= 1");
    Integer modulus = staf::pow(p, static_cast<unsigned long>(m));
    IntMat base = reduce_mod(a, modulus);
    std::map<std::string, long> seen;
    IntMat cur = base;
    long k = 1;
    seen[serialize(cur)] = 1;
    long tail = -1, period = -1;
    while (k < step_budget) {
        cur = reduce_mod(cur * base, modulus);
        ++k;
        auto [it, inserted] = seen.emplace(serialize(cur), k);
        if (!inserted) {
            tail = it->second;
            period = k - tail;
            break;
        }
    }
    if (tail < 0) throw budget_error("idempotent_power_mod: cycle not found within budget");
    // smallest multiple of the period that is >= tail
    long e = ((tail + period - 1) / period) * period;
    IntMat idem = mat_pow_mod(base, static_cast<unsigned long>(e), modulus);
    if (reduce_mod(idem * idem, modulus) != idem)
        throw std::logic_error("idempotent_power_mod: power is not idempotent");
    return {e, idem};
}

PAdicLimit p_adic_limit(const IntMat& a, const Integer& p, int m_max) {
    PAdicLimit out;
    out.p = p;
    for (int m = 1; m <= m_max; ++m) {
        auto [e, idem] = idempotent_power_mod(a, p, m);
        PAdicLevel lvl;
        lvl.m = m;
        lvl.modulus = staf::pow(p, static_cast<unsigned long>(m));
        lvl.exponent = e;
        lvl.idempotent = idem;
        if (m > 1) {
            const PAdicLevel& prev = out.levels.back();
            if (reduce_mod(idem, prev.modulus) != prev.idempotent)
                throw std::logic_error("p_adic_limit: incoherent idempotent tower");
        }
        out.levels.push_back(std::move(lvl));
    }
    return out;
}

bool nilpotent_mod(const IntMat& a, const Integer& p) {
    if (!a.is_square()) throw precondition_error("nilpotent_mod: non-square matrix");
    return mat_pow_mod(a, static_cast<unsigned long>(a.rows()), p).is_zero();
}

RowSpaceMod row_space_mod(const IntMat& m, const Integer& p, int mexp) {
    Integer modulus = staf::pow(p, static_cast<unsigned long>(mexp));
    int n = m.cols();
    int gens = m.rows();
    // rows carry their expression over the original generators
    struct Row {
        std::vector<Integer> v;      // length n
        std::vector<Integer> coeff;  // length gens
    };
    auto reduce_entry = [&](Integer x) {
        x %= modulus;
        if (x < 0) x += modulus;
        return x;
    };
    auto leading = [&](const Row& r) {
        for (int j = 0; j < n; ++j)
            if (r.v[static_cast<size_t>(j)] != 0) return j;
        return n;
    };
    std::vector<Row> work;
    for (int i = 0; i < gens; ++i) {
        Row r;
        r.v.resize(static_cast<size_t>(n));
        r.coeff.assign(static_cast<size_t>(gens), Integer(0));
        r.coeff[static_cast<size_t>(i)] = 1;
        for (int j = 0; j < n; ++j) r.v[static_cast<size_t>(j)] = reduce_entry(m.at(i, j));
        if (leading(r) < n) work.push_back(std::move(r));
    }

    auto sub_scaled = [&](Row& a, const Row& b, const Integer& q) {
        for (int j = 0; j < n; ++j)
            a.v[static_cast<size_t>(j)] = reduce_entry(a.v[static_cast<size_t>(j)] - q * b.v[static_cast<size_t>(j)]);
        for (int i = 0; i < gens; ++i)
            a.coeff[static_cast<size_t>(i)] =
                reduce_entry(a.coeff[static_cast<size_t>(i)] - q * b.coeff[static_cast<size_t>(i)]);
    };
    auto scale = [&](Row& a, const Integer& s) {
        for (auto& x : a.v) x = reduce_entry(x * s);
        for (auto& x : a.coeff) x = reduce_entry(x * s);
    };

    // echelonize + Howell saturation to a fixpoint
    std::vector<Row> pivots;  // pivot row for increasing leading columns
    while (true) {
        pivots.clear();
        std::vector<Row> queue = work;
        while (!queue.empty()) {
            Row r = queue.back();
            queue.pop_back();
            while (true) {
                int lead = leading(r);
                if (lead == n) break;
                // find existing pivot at this column
                size_t pi = 0;
                bool found = false;
                for (; pi < pivots.size(); ++pi)
                    if (leading(pivots[pi]) == lead) {
                        found = true;
                        break;
                    }
                if (!found) {
                    // normalize: leading entry becomes p^a
                    int a = val_p(r.v[static_cast<size_t>(lead)], p, mexp);
                    Integer pa = staf::pow(p, static_cast<unsigned long>(a));
                    Integer u = divexact(r.v[static_cast<size_t>(lead)], pa);
                    scale(r, unit_inverse_mod(u, modulus));
                    pivots.push_back(std::move(r));
                    break;
                }
                Row& piv = pivots[pi];
                int va = val_p(piv.v[static_cast<size_t>(lead)], p, mexp);
                int vb = val_p(r.v[static_cast<size_t>(lead)], p, mexp);
                if (vb >= va) {
                    // eliminate r's leading entry
                    Integer pa = staf::pow(p, static_cast<unsigned long>(va));
                    Integer q = divexact(r.v[static_cast<size_t>(lead)], pa);
                    // pivot leading entry is exactly p^va
                    sub_scaled(r, piv, q);
                } else {
                    std::swap(r, piv);
                    // re-normalize the new pivot, then continue reducing r
                    int a = val_p(piv.v[static_cast<size_t>(lead)], p, mexp);
                    Integer pa = staf::pow(p, static_cast<unsigned long>(a));
                    Integer u = divexact(piv.v[static_cast<size_t>(lead)], pa);
                    scale(piv, unit_inverse_mod(u, modulus));
                }
            }
        }
        // Howell saturation: shadows p^(m-a) * pivot must lie in the span
        std::vector<Row> extra;
        for (const Row& piv : pivots) {
            int lead = leading(piv);
            int a = val_p(piv.v[static_cast<size_t>(lead)], p, mexp);
            if (a == 0) continue;
            Row shadow = piv;
            scale(shadow, staf::pow(p, static_cast<unsigned long>(mexp - a)));
            // shadow's leading column moved right of lead (entry became 0)
            // reduce against current pivots; if nonzero remains, enqueue
            Row t = shadow;
            while (true) {
                int l = leading(t);
                if (l == n) break;
                bool reduced = false;
                for (const Row& q : pivots) {
                    if (leading(q) != l) continue;
                    int va = val_p(q.v[static_cast<size_t>(l)], p, mexp);
                    int vb = val_p(t.v[static_cast<size_t>(l)], p, mexp);
                    if (vb >= va) {
                        Integer pa = staf::pow(p, static_cast<unsigned long>(va));
                        sub_scaled(t, q, divexact(t.v[static_cast<size_t>(l)], pa));
                        reduced = true;
                    }
                    break;
                }
                if (!reduced) break;
            }
            if (leading(t) < n) extra.push_back(shadow);
        }
        if (extra.empty()) break;
        work.clear();
        for (auto& r : pivots) work.push_back(std::move(r));
        for (auto& r : extra) work.push_back(std::move(r));
    }

    std::sort(pivots.begin(), pivots.end(),
              [&](const Row& a, const Row& b) { return leading(a) < leading(b); });
    // reduce entries above each pivot modulo the pivot value
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        int lead = leading(pivots[pi]);
        const Integer& pv = pivots[pi].v[static_cast<size_t>(lead)];
        for (size_t other = 0; other < pivots.size(); ++other) {
            if (other == pi) continue;
            Integer q = pivots[other].v[static_cast<size_t>(lead)] / pv;
            if (q != 0) sub_scaled(pivots[other], pivots[pi], q);
        }
    }

    RowSpaceMod out;
    out.modulus = modulus;
    out.cols = n;
    out.basis = IntMat(static_cast<int>(pivots.size()), n);
    out.transform = IntMat(static_cast<int>(pivots.size()), gens);
    for (size_t i = 0; i < pivots.size(); ++i) {
        for (int j = 0; j < n; ++j) out.basis.at(static_cast<int>(i), j) = pivots[i].v[static_cast<size_t>(j)];
        for (int j = 0; j < gens; ++j)
            out.transform.at(static_cast<int>(i), j) = pivots[i].coeff[static_cast<size_t>(j)];
    }
    return out;
}

std::optional<std::vector<Integer>> express_in_row_space(const RowSpaceMod& rs,
                                                         const std::vector<Integer>& w) {
    int n = rs.cols;
    if (static_cast<int>(w.size()) != n) throw precondition_error("express_in_row_space: bad length");
    const Integer& modulus = rs.modulus;
    std::vector<Integer> v(w);
    for (auto& x : v) {
        x %= modulus;
        if (x < 0) x += modulus;
    }
    std::vector<Integer> coeffs(static_cast<size_t>(rs.basis.rows()), Integer(0));
    for (int j = 0; j < n; ++j) {
        if (v[static_cast<size_t>(j)] == 0) continue;
        // find basis row with leading column j
        int row = -1;
        for (int i = 0; i < rs.basis.rows(); ++i) {
            int lead = -1;
            for (int c = 0; c < n; ++c)
                if (rs.basis.at(i, c) != 0) {
                    lead = c;
                    break;
                }
            if (lead == j) {
                row = i;
                break;
            }
        }
        if (row < 0) return std::nullopt;
        const Integer& pv = rs.basis.at(row, j);
        if (!divides(pv, v[static_cast<size_t>(j)])) return std::nullopt;
        Integer q = divexact(v[static_cast<size_t>(j)], pv);
        coeffs[static_cast<size_t>(row)] = q % modulus;
        for (int c = 0; c < n; ++c) {
            Integer t = (v[static_cast<size_t>(c)] - q * rs.basis.at(row, c)) % modulus;
            if (t < 0) t += modulus;
            v[static_cast<size_t>(c)] = t;
        }
    }
    for (const auto& x : v)
        if (x != 0) return std::nullopt;
    return coeffs;
}

std::optional<IntMat> factor_through_row_space(const RowSpaceMod& rs, const IntMat& m) {
    if (m.cols() != rs.cols) throw precondition_error("factor_through_row_space: shape mismatch");
    IntMat x(m.rows(), rs.transform.cols());
    for (int i = 0; i < m.rows(); ++i) {
        auto coeffs = express_in_row_space(rs, m.row(i));
        if (!coeffs) return std::nullopt;
        // map basis coefficients back to original generators
        for (int g = 0; g < rs.transform.cols(); ++g) {
            Integer acc(0);
            for (int b = 0; b < rs.basis.rows(); ++b)
                acc += (*coeffs)[static_cast<size_t>(b)] * rs.transform.at(b, g);
            acc %= rs.modulus;
            if (acc < 0) acc += rs.modulus;
            x.at(i, g) = acc;
        }
    }
    return x;
}

PAdicRowSpaceResult padic_row_space_condition(const IntMat& j, const IntMat& k, const IntMat& a1,
                                              const Integer& p, int m, long replacement_bound) {
    PAdicRowSpaceResult out;
    out.p = p;
    out.m = m;
    Integer modulus = staf::pow(p, static_cast<unsigned long>(m));
    out.j_idem = idempotent_power_mod(j, p, m).second;
    out.k_idem = idempotent_power_mod(k, p, m).second;
    RowSpaceMod jspace = row_space_mod(out.j_idem, p, m);
    IntMat kred = reduce_mod(k, modulus);
    IntMat candidate = reduce_mod(a1, modulus);
    for (long r = 0; r <= replacement_bound; ++r) {
        IntMat ka = reduce_mod(out.k_idem * candidate, modulus);
        RowSpaceMod kaspace = row_space_mod(ka, p, m);
        if (kaspace == jspace) {
            out.pass = true;
            out.replacement_power = r;
            out.u = factor_through_row_space(jspace, ka);
            out.v = factor_through_row_space(kaspace, out.j_idem);
            return out;
        }
        candidate = reduce_mod(kred * candidate, modulus);
    }
    return out;
}

}  // namespace staf
