#include "staf/matrix.hpp"

namespace staf {

RatMat to_rational(const IntMat& m) {
    return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

bool is_integral(const RatMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_integral(m.at(i, j))) return false;
    return true;
}

IntMat to_integer(const RatMat& m) {
    if (!is_integral(m)) throw precondition_error("to_integer: non-integral entry");
    return m.map<Integer>([](const Rational& x) { return x.get_num(); });
}

bool is_nonnegative(const IntMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < 0) return false;
    return true;
}

bool is_nonnegative(const RatMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < 0) return false;
    return true;
}

namespace {

// Fraction-free elimination over an integral domain with exact division.
// Returns the determinant. DivFn(a, b) must compute the exact quotient a/b.
template <class T, class DivFn>
T bareiss(Matrix<T> m, DivFn divfn) {
    int n = m.rows();
    if (n == 0) return T(1);
    T denom = T(1);
    int sgn_acc = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == T()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m.at(i, k) == T())) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return T();
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sgn_acc = -sgn_acc;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divfn(t, denom);
            }
            m.at(i, k) = T();
        }
        denom = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sgn_acc > 0 ? d : (T() - d);
}

}  // namespace

Integer det(const IntMat& m) {
    if (!m.is_square()) throw precondition_error("det: non-square matrix");
    return bareiss(m, [](const Integer& a, const Integer& b) { return divexact(a, b); });
}

Rational det(const RatMat& m) {
    if (!m.is_square()) throw precondition_error("det: non-square matrix");
    return bareiss(m, [](const Rational& a, const Rational& b) { return a / b; });
}

IntPoly charpoly(const IntMat& m) {
    if (!m.is_square()) throw precondition_error("charpoly: non-square matrix");
    int n = m.rows();
    Matrix<IntPoly> tm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly entry = IntPoly::constant(-m.at(i, j));
            if (i == j) entry = entry + IntPoly({Integer(0), Integer(1)});
            tm.at(i, j) = entry;
        }
    return bareiss(tm, [](const IntPoly& a, const IntPoly& b) { return IntPoly::exact_divide(a, b); });
}

void CompanionSpec::validate() const {
    if (m.empty()) throw precondition_error("companion: empty coefficient list");
    for (const auto& x : m)
        if (x < 0) throw precondition_error("companion: negative coefficient");
    if (m.back() == 0) throw precondition_error("companion: last coefficient is zero");
    Integer g(0);
    for (size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) g = staf::gcd(g, Integer(static_cast<long>(k) + 1));
    if (g != 1) throw precondition_error("companion: nonzero-index gcd " + g.get_str() + " != 1");
}

IntMat companion_matrix(const CompanionSpec& spec) {
    spec.validate();
    int n = spec.size();
    IntMat mat(n, n);
    for (int i = 0; i < n; ++i) mat.at(i, 0) = spec.m[static_cast<size_t>(i)];
    for (int i = 0; i + 1 < n; ++i) mat.at(i, i + 1) = 1;
    return mat;
}

std::optional<CompanionSpec> companion_spec_of(const IntMat& m) {
    if (!m.is_square() || m.rows() == 0) return std::nullopt;
    int n = m.rows();
    CompanionSpec spec;
    for (int i = 0; i < n; ++i) spec.m.push_back(m.at(i, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Integer expect = (j == i + 1) ? 1 : 0;
            if (m.at(i, j) != expect) return std::nullopt;
        }
    try {
        spec.validate();
    } catch (const precondition_error&) {
        return std::nullopt;
    }
    return spec;
}

int wielandt_bound(int n) { return n * n - 2 * n + 2; }

bool is_primitive(const IntMat& m) {
    if (!m.is_square() || m.rows() == 0) throw precondition_error("is_primitive: non-square matrix");
    int n = m.rows();
    std::vector<std::vector<char>> b(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) < 0) throw precondition_error("is_primitive: negative entry");
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j) > 0 ? 1 : 0;
        }
    auto all_positive = [&](const std::vector<std::vector<char>>& x) {
        for (const auto& row : x)
            for (char v : row)
                if (!v) return false;
        return true;
    };
    auto bool_mul = [&](const std::vector<std::vector<char>>& x, const std::vector<std::vector<char>>& y) {
        std::vector<std::vector<char>> r(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!x[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
                for (int j = 0; j < n; ++j)
                    if (y[static_cast<size_t>(k)][static_cast<size_t>(j)]) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
            }
        return r;
    };
    std::vector<std::vector<char>> p = b;
    int bound = wielandt_bound(n);
    for (int k = 1; k <= bound; ++k) {
        if (all_positive(p)) return true;
        p = bool_mul(p, b);
    }
    return all_positive(p);
}

IntMat mat_pow(const IntMat& m, unsigned n) {
    if (!m.is_square()) throw precondition_error("mat_pow: non-square matrix");
    IntMat acc = IntMat::identity(m.rows());
    IntMat base = m;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

RatMat mat_pow(const RatMat& m, long n) {
    if (!m.is_square()) throw precondition_error("mat_pow: non-square matrix");
    RatMat base = n < 0 ? inverse(m) : m;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    RatMat acc = RatMat::identity(m.rows());
    while (e) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1ul;
    }
    return acc;
}

RatMat mat_pow(const IntMat& m, long n) { return mat_pow(to_rational(m), n); }

RatMat inverse(const RatMat& m) {
    if (!m.is_square()) throw precondition_error("inverse: non-square matrix");
    int n = m.rows();
    RatMat a = m, inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw precondition_error("inverse: singular matrix");
        if (sel != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(sel, j), a.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        Rational piv = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMat inverse(const IntMat& m) { return inverse(to_rational(m)); }

}  // namespace staf
