#include "staf/smith.hpp"

#include <algorithm>

namespace staf {

namespace {

struct SmithWork {
    IntMat u, d, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[a] += q * row[b]
    void add_row(int a, int b, const Integer& q) {
        if (q == 0) return;
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) += q * d.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) += q * u.at(b, j);
    }
    // col[a] += q * col[b]
    void add_col(int a, int b, const Integer& q) {
        if (q == 0) return;
        for (int i = 0; i < d.rows(); ++i) d.at(i, a) += q * d.at(i, b);
        for (int i = 0; i < v.rows(); ++i) v.at(i, a) += q * v.at(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
};

// Clear row and column t with gcd descent; afterwards d(t,t) is the gcd of
// the original submatrix column/row entries at position t.
void clear_position(SmithWork& w, int t) {
    int rows = w.d.rows(), cols = w.d.cols();
    while (true) {
        // pick the nonzero entry of smallest magnitude in the submatrix
        int bi = -1, bj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Integer& x = w.d.at(i, j);
                if (x == 0) continue;
                if (bi < 0 || abs(x) < abs(w.d.at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return;  // submatrix is zero
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (w.d.at(i, t) == 0) continue;
            Integer q = w.d.at(i, t) / w.d.at(t, t);  // truncated division
            w.add_row(i, t, -q);
            if (w.d.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (w.d.at(t, j) == 0) continue;
            Integer q = w.d.at(t, j) / w.d.at(t, t);
            w.add_col(j, t, -q);
            if (w.d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders exist; descend again
        // row and column are clear; make the pivot divide the rest
        bool divides_all = true;
        for (int i = t + 1; i < rows && divides_all; ++i)
            for (int j = t + 1; j < cols && divides_all; ++j)
                if (!divides(w.d.at(t, t), w.d.at(i, j))) divides_all = false;
        if (divides_all) return;
        // fold an offending row into row t and continue the descent
        for (int i = t + 1; i < rows; ++i) {
            bool offends = false;
            for (int j = t + 1; j < cols; ++j)
                if (!divides(w.d.at(t, t), w.d.at(i, j))) offends = true;
            if (offends) {
                w.add_row(t, i, Integer(1));
                break;
            }
        }
    }
}

}  // namespace

SmithForm smith_form(const IntMat& a) {
    SmithWork w{IntMat::identity(a.rows()), a, IntMat::identity(a.cols())};
    int n = std::min(a.rows(), a.cols());
    for (int t = 0; t < n; ++t) clear_position(w, t);
    for (int t = 0; t < n; ++t)
        if (w.d.at(t, t) < 0) w.negate_row(t);
    // the divisibility chain holds by construction (each pivot divides the
    // whole remaining submatrix before the next step)
    return SmithForm{w.u, w.d, w.v};
}

std::vector<IntMat> intertwiner_lattice(const IntMat& j, const IntMat& k) {
    if (!j.is_square() || !k.is_square()) throw precondition_error("intertwiner_lattice: non-square inputs");
    int n = j.rows();  // A has shape m x n
    int m = k.rows();
    int vars = m * n;
    IntMat s(vars, vars);
    auto idx = [n](int i, int l) { return i * n + l; };
    // equation (i,j): sum_l A[i][l] J[l][j] - sum_l K[i][l] A[l][j] = 0
    for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < n; ++jj) {
            int eq = idx(i, jj);
            for (int l = 0; l < n; ++l) s.at(eq, idx(i, l)) += j.at(l, jj);
            for (int l = 0; l < m; ++l) s.at(eq, idx(l, jj)) -= k.at(i, l);
        }
    SmithForm sf = smith_form(s);
    std::vector<IntMat> basis;
    for (int c = 0; c < vars; ++c) {
        if (c < std::min(vars, vars) && sf.D.at(c, c) != 0) continue;
        IntMat mat(m, n);
        bool nonzero = false;
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < n; ++l) {
                mat.at(i, l) = sf.V.at(idx(i, l), c);
                if (mat.at(i, l) != 0) nonzero = true;
            }
        if (nonzero) basis.push_back(std::move(mat));
    }
    return basis;
}

std::vector<IntPoly> invariant_factors(const IntMat& m) {
    if (!m.is_square()) throw precondition_error("invariant_factors: non-square matrix");
    int n = m.rows();
    std::vector<std::vector<RatPoly>> a(static_cast<size_t>(n), std::vector<RatPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            std::vector<Rational> c = {Rational(-m.at(i, jj))};
            if (i == jj) c.push_back(Rational(1));
            a[static_cast<size_t>(i)][static_cast<size_t>(jj)] = RatPoly(std::move(c));
        }
    // Smith reduction over the Euclidean domain Q[t], diagonal only
    for (int t = 0; t < n; ++t) {
        while (true) {
            // pivot of minimal degree
            int bi = -1, bj = -1;
            for (int i = t; i < n; ++i)
                for (int jj = t; jj < n; ++jj) {
                    const RatPoly& x = a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    if (x.is_zero()) continue;
                    if (bi < 0 || x.degree() < a[static_cast<size_t>(bi)][static_cast<size_t>(bj)].degree()) {
                        bi = i;
                        bj = jj;
                    }
                }
            if (bi < 0) break;
            std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(bi)]);
            for (int i = 0; i < n; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)], a[static_cast<size_t>(i)][static_cast<size_t>(bj)]);
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                const RatPoly& x = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (x.is_zero()) continue;
                RatPoly q = RatPoly::divmod(x, a[static_cast<size_t>(t)][static_cast<size_t>(t)]).first;
                for (int jj = t; jj < n; ++jj)
                    a[static_cast<size_t>(i)][static_cast<size_t>(jj)] =
                        a[static_cast<size_t>(i)][static_cast<size_t>(jj)] - q * a[static_cast<size_t>(t)][static_cast<size_t>(jj)];
                if (!a[static_cast<size_t>(i)][static_cast<size_t>(t)].is_zero()) clean = false;
            }
            for (int jj = t + 1; jj < n; ++jj) {
                const RatPoly& x = a[static_cast<size_t>(t)][static_cast<size_t>(jj)];
                if (x.is_zero()) continue;
                RatPoly q = RatPoly::divmod(x, a[static_cast<size_t>(t)][static_cast<size_t>(t)]).first;
                for (int i = t; i < n; ++i)
                    a[static_cast<size_t>(i)][static_cast<size_t>(jj)] =
                        a[static_cast<size_t>(i)][static_cast<size_t>(jj)] - q * a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (!a[static_cast<size_t>(t)][static_cast<size_t>(jj)].is_zero()) clean = false;
            }
            if (!clean) continue;
            bool divides_all = true;
            for (int i = t + 1; i < n && divides_all; ++i)
                for (int jj = t + 1; jj < n && divides_all; ++jj) {
                    const RatPoly& x = a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    if (x.is_zero()) continue;
                    if (!RatPoly::divmod(x, a[static_cast<size_t>(t)][static_cast<size_t>(t)]).second.is_zero())
                        divides_all = false;
                }
            if (divides_all) break;
            for (int i = t + 1; i < n; ++i) {
                bool offends = false;
                for (int jj = t + 1; jj < n; ++jj) {
                    const RatPoly& x = a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    if (!x.is_zero() &&
                        !RatPoly::divmod(x, a[static_cast<size_t>(t)][static_cast<size_t>(t)]).second.is_zero())
                        offends = true;
                }
                if (offends) {
                    for (int jj = t; jj < n; ++jj)
                        a[static_cast<size_t>(t)][static_cast<size_t>(jj)] =
                            a[static_cast<size_t>(t)][static_cast<size_t>(jj)] + a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    break;
                }
            }
        }
    }
    std::vector<IntPoly> out;
    for (int t = 0; t < n; ++t) {
        RatPoly d = a[static_cast<size_t>(t)][static_cast<size_t>(t)].monic();
        if (d.degree() > 0) {
            IntPoly p = to_int_poly_primitive(d);
            if (sign(p.lc()) < 0) p = -p;
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace staf
