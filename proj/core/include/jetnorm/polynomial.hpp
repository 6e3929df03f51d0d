#pragma once

#include "jetnorm/qmatrix.hpp"
#include "jetnorm/rational.hpp"

#include <complex>
#include <vector>

namespace jetnorm {

// Univariate polynomial over Q, coefficients low degree first.
// Invariant after normalize(): no trailing zero coefficients.
using QPoly = std::vector<Rat>;

void poly_normalize(QPoly &p);
int poly_deg(const QPoly &p);  // -1 for the zero polynomial
QPoly poly_add(const QPoly &a, const QPoly &b);
QPoly poly_sub(const QPoly &a, const QPoly &b);
QPoly poly_mul(const QPoly &a, const QPoly &b);
QPoly poly_scale(const Rat &c, const QPoly &a);
// quotient and remainder, denominator-free caller beware: exact over Q
std::pair<QPoly, QPoly> poly_divmod(const QPoly &a, const QPoly &b);
QPoly poly_derivative(const QPoly &a);
QPoly poly_monic(const QPoly &a);
QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd
Rat poly_eval(const QPoly &a, const Rat &x);
GaussQ poly_eval(const QPoly &a, const GaussQ &x);
QMat poly_eval(const QPoly &a, const QMat &M);  // a(M)
bool poly_divides(const QPoly &d, const QPoly &a);

// p(x) -> p(-x)
QPoly poly_flip_sign(const QPoly &a);
// for even p, the polynomial r with p(x) = r(x^2); throws otherwise
QPoly poly_even_part_as_square(const QPoly &p);
bool poly_is_even(const QPoly &p);

// Yun's algorithm. Returns (g_i, m_i) with p = c * prod g_i^{m_i},
// the g_i squarefree, monic and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &p);

// Irreducible factorization over Q: p = c * prod f_i^{m_i} with f_i monic
// irreducible. Zassenhaus (factor mod p, Hensel lift, recombine).
struct QFactorization {
    Rat content;
    std::vector<std::pair<QPoly, int>> factors;
};
QFactorization factorize_rational(const QPoly &p);

// Number of distinct real roots in (a, b] by Sturm chains; whole line if
// no bounds given.
int sturm_count_real_roots(const QPoly &p);
int sturm_count_real_roots(const QPoly &p, const Rat &a, const Rat &b);
// all real roots of p are < 0 (p nonzero; counts distinct roots)
bool all_real_roots_negative(const QPoly &p);

// Approximate complex roots of a monic polynomial with certified inclusion
// radii: every root of p lies in the union of the disks, and a connected
// union component built from m disks contains exactly m roots.
struct RootDisk {
    std::complex<double> center;
    double radius;
};
std::vector<RootDisk> numeric_roots(const QPoly &p);

} // namespace jetnorm
