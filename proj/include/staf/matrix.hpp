#pragma once

// Exact dense matrices over the library's scalar types (Integer, Rational,
// number-field elements, integer polynomials), with fraction-free
// determinants, characteristic polynomials, companion matrices, primitivity
// testing, and generic field elimination.

#include "staf/number_field.hpp"

namespace staf {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw precondition_error("Matrix: negative dimension");
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols_)
                throw precondition_error("Matrix: ragged rows");
            for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const T& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw precondition_error("Matrix: dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = T() - x;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T())) return false;
        return true;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(static_cast<size_t>(cols_));
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
        return r;
    }
    std::vector<T> col(int j) const {
        std::vector<T> r(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) r[static_cast<size_t>(i)] = at(i, j);
        return r;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn fn) const {
        Matrix<U> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = fn(at(i, j));
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw precondition_error("Matrix: shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> e_;
};

using IntMat = Matrix<Integer>;
using RatMat = Matrix<Rational>;
using NFMat = Matrix<NFElem>;

RatMat to_rational(const IntMat& m);
bool is_integral(const RatMat& m);
IntMat to_integer(const RatMat& m);
bool is_nonnegative(const IntMat& m);
bool is_nonnegative(const RatMat& m);

// matrix * column vector
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw precondition_error("mat_vec: dimension mismatch");
    std::vector<T> r(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        T acc{};
        for (int j = 0; j < m.cols(); ++j) acc = acc + m.at(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

// row vector * matrix
template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const Matrix<T>& m) {
    if (m.rows() != static_cast<int>(v.size())) throw precondition_error("vec_mat: dimension mismatch");
    std::vector<T> r(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        T acc{};
        for (int i = 0; i < m.rows(); ++i) acc = acc + v[static_cast<size_t>(i)] * m.at(i, j);
        r[static_cast<size_t>(j)] = acc;
    }
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw precondition_error("dot: dimension mismatch");
    T acc{};
    for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

// Fraction-free (Bareiss) determinant over the integers.
Integer det(const IntMat& m);
Rational det(const RatMat& m);

// Monic characteristic polynomial det(t*1 - M) by fraction-free elimination
// with polynomial entries.
IntPoly charpoly(const IntMat& m);

// First column m_1..m_N, ones on the superdiagonal. The constraints
// (m_N != 0, gcd of the indices of nonzero entries = 1) make the matrix
// nonsingular and primitive.
struct CompanionSpec {
    std::vector<Integer> m;

    int size() const { return static_cast<int>(m.size()); }
    void validate() const;
};

IntMat companion_matrix(const CompanionSpec& spec);
// Recognize a matrix of companion shape; nullopt when the pattern or the
// spec constraints fail.
std::optional<CompanionSpec> companion_spec_of(const IntMat& m);

// Wielandt bound N^2 - 2N + 2 on the exponent needed for positivity.
int wielandt_bound(int n);
// Primitivity via 0/1-capped powers up to the Wielandt bound; entries must
// be nonnegative.
bool is_primitive(const IntMat& m);

IntMat mat_pow(const IntMat& m, unsigned n);
// Exact power for any integer exponent; negative exponents require a
// nonsingular matrix.
RatMat mat_pow(const RatMat& m, long n);
RatMat mat_pow(const IntMat& m, long n);

// Gauss-Jordan inverse; throws precondition_error when singular.
RatMat inverse(const RatMat& m);
RatMat inverse(const IntMat& m);

// ---------------------------------------------------------------------------
// Generic elimination over a field (Rational or NFElem).

// Basis of the right nullspace { x : M x = 0 }.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<F>> a(static_cast<size_t>(rows), std::vector<F>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (!(a[static_cast<size_t>(r)][static_cast<size_t>(col)] == F())) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<size_t>(sel)], a[static_cast<size_t>(rank)]);
        F inv = F(1) / a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (auto& x : a[static_cast<size_t>(rank)]) x = x * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            F f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == F()) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    a[static_cast<size_t>(r)][static_cast<size_t>(j)] - f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<F> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(free)] = F(1);
        for (int i = 0; i < rank; ++i) {
            const F& coef = a[static_cast<size_t>(i)][static_cast<size_t>(free)];
            if (!(coef == F())) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = F() - coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace staf
