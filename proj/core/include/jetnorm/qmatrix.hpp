#pragma once

#include "jetnorm/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace jetnorm {

// Dense matrix over an exact field (Rat or GaussQ). Row-major.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T &operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T &operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto &x : a)
            if (!(x == T(0))) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator+(const Mat &x, const Mat &y) {
        if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat: shape mismatch in +");
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
        return r;
    }
    friend Mat operator-(const Mat &x, const Mat &y) {
        if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat: shape mismatch in -");
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
        return r;
    }
    friend Mat operator*(const Mat &x, const Mat &y) {
        if (x.cols != y.rows) throw std::invalid_argument("Mat: shape mismatch in *");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T &xik = x(i, k);
                if (xik == T(0)) continue;
                for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Mat operator*(const T &s, const Mat &x) {
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = s * x.a[k];
        return r;
    }
    friend bool operator==(const Mat &x, const Mat &y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::vector<T> apply(const std::vector<T> &v) const {
        if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("Mat: vector length mismatch");
        std::vector<T> r(rows, T(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!(v[j] == T(0))) r[i] += (*this)(i, j) * v[j];
        return r;
    }
};

using QMat = Mat<Rat>;
using CMat = Mat<GaussQ>;

// Reduced row echelon form (in place), generic over the field.
// Pivot rule: leftmost column, then first row with a nonzero entry.
// Returns the pivot columns in order.
template <class T>
std::vector<int> rref_inplace(Mat<T> &m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!(m(i, c) == T(0))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(pr, j));
        T inv = T(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank_of(Mat<T> m) { return static_cast<int>(rref_inplace(m).size()); }

// Null space basis; each column of the result is one basis vector,
// normalized so the free variable equals 1 (canonical from the RREF).
template <class T>
Mat<T> kernel_of(Mat<T> m) {
    std::vector<int> piv = rref_inplace(m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    int nfree = m.cols - static_cast<int>(piv.size());
    Mat<T> K(m.cols, nfree);
    int k = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        K(f, k) = T(1);
        for (size_t i = 0; i < piv.size(); ++i) K(piv[i], k) = -m(static_cast<int>(i), f);
        ++k;
    }
    return K;
}

// One solution of A x = b with free variables set to zero, or nullopt.
template <class T>
std::optional<std::vector<T>> solve_linear(const Mat<T> &A, const std::vector<T> &b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve_linear: shape mismatch");
    Mat<T> m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref_inplace(m);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // inconsistent
    std::vector<T> x(A.cols, T(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m(static_cast<int>(i), A.cols);
    return x;
}

template <class T>
std::optional<Mat<T>> inverse_of(const Mat<T> &A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse_of: not square");
    int n = A.rows;
    Mat<T> m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = A(i, j);
        m(i, n + i) = T(1);
    }
    std::vector<int> piv = rref_inplace(m);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
}

// Fraction-free (Bareiss) row echelon over the integers after clearing
// denominators. Pivot rule: in the working column, the row whose entry has
// the smallest absolute value. Cheap on the sparse cochain systems where
// plain rational pivoting blows up denominators.
int bareiss_rank(const QMat &m);

Rat det_of(const QMat &m);

// Characteristic polynomial det(xI - A), coefficients low

// degree first (size n+1, leading coefficient 1). Faddeev-LeVerrier.
std::vector<Rat> charpoly(const QMat &A);

// Exact positive-semidefiniteness of a symmetric rational matrix by
// diagonal-pivot LDL^T with Schur complements. radical = kernel basis
// columns when PSD.
struct PsdResult {
    bool psd = false;
    int rank = 0;
    std::optional<std::pair<int, int>> witness;  // (i,j) violating entry when not PSD
};
PsdResult psd_check(QMat s);

// columns of `vecs` span a subspace; reduce to a canonical basis (RREF rows
// of the transpose, transposed back).
QMat column_space_basis(const QMat &vecs);

// is u in the column span of B?
bool in_column_span(const QMat &B, const std::vector<Rat> &u);

} // namespace jetnorm
