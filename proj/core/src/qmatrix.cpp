#include "jetnorm/qmatrix.hpp"

namespace jetnorm {

namespace {

// Clear denominators row by row; content is irrelevant for rank.
Mat<Int> to_integer_rows(const QMat &m) {
    Mat<Int> z(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols; ++j) {
            const Rat &q = m(i, j);
            Int d = q.get_den();
            l = lcm(l, d);
        }
        for (int j = 0; j < m.cols; ++j) {
            const Rat &q = m(i, j);
            z(i, j) = q.get_num() * (l / q.get_den());
        }
    }
    return z;
}

} // namespace

int bareiss_rank(const QMat &m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Mat<Int> z = to_integer_rows(m);
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < z.cols && r < z.rows; ++c) {
        int pr = -1;
        for (int i = r; i < z.rows; ++i) {
            if (sgn(z(i, c)) == 0) continue;
            if (pr < 0 || cmp(abs(z(i, c)), abs(z(pr, c))) < 0) pr = i;
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < z.cols; ++j) std::swap(z(r, j), z(pr, j));
        for (int i = r + 1; i < z.rows; ++i) {
            for (int j = c + 1; j < z.cols; ++j) {
                Int t = z(i, j) * z(r, c) - z(i, c) * z(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z(i, j) = t;
            }
            z(i, c) = 0;
        }
        prev = z(r, c);
        ++r;
    }
    return r;
}

Rat det_of(const QMat &m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_of: not square");
    int n = m.rows;
    QMat w = m;
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(w(i, c))) { pr = i; break; }
        if (pr < 0) return Rat(0);
        if (pr != c) {
            for (int j = 0; j < n; ++j) std::swap(w(c, j), w(pr, j));
            det = -det;
        }
        det *= w(c, c);
        Rat inv = Rat(1) / w(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(w(i, c))) continue;
            Rat f = w(i, c) * inv;
            for (int j = c; j < n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    return det;
}

std::vector<Rat> charpoly(const QMat &A) {
    if (A.rows != A.cols) throw std::invalid_argument("charpoly: not square");
    int n = A.rows;
    // Faddeev-LeVerrier: M_0 = I, c_n = 1; c_{n-k} = -tr(A M_{k-1})/k,
    // M_k = A M_{k-1} + c_{n-k} I.
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    QMat M = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        QMat AM = A * M;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / k;
        if (k < n) {
            M = AM;
            for (int i = 0; i < n; ++i) M(i, i) += c[n - k];
        }
    }
    return c;
}

PsdResult psd_check(QMat s) {
    if (s.rows != s.cols) throw std::invalid_argument("psd_check: not square");
    int n = s.rows;
    std::vector<char> done(n, 0);
    PsdResult res;
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            int sg = sgn(s(i, i));
            if (sg < 0) {
                res.psd = false;
                res.witness = {i, i};
                return res;
            }
            if (sg > 0 && p < 0) p = i;
        }
        if (p < 0) break;  // all remaining diagonals zero
        // pivot out row/col p
        Rat inv = Rat(1) / s(p, p);
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p || is_zero(s(i, p))) continue;
            Rat f = s(i, p) * inv;
            for (int j = 0; j < n; ++j) {
                if (done[j] || j == p) continue;
                s(i, j) -= f * s(p, j);
            }
        }
        done[p] = 1;
        ++res.rank;
    }
    // a PSD matrix with zero diagonal block must vanish there
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (done[j]) continue;
            if (!is_zero(s(i, j))) {
                res.psd = false;
                res.witness = {i, j};
                return res;
            }
        }
    }
    res.psd = true;
    return res;
}

QMat column_space_basis(const QMat &vecs) {
    QMat t = vecs.transpose();
    std::vector<int> piv = rref_inplace(t);
    QMat out(vecs.rows, static_cast<int>(piv.size()));
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
        for (int j = 0; j < vecs.rows; ++j) out(j, i) = t(i, j);
    return out;
}

bool in_column_span(const QMat &B, const std::vector<Rat> &u) {
    return solve_linear(B, u).has_value();
}

} // namespace jetnorm
