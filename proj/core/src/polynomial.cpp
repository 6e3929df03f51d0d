#include "jetnorm/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace jetnorm {

void poly_normalize(QPoly &p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int poly_deg(const QPoly &p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_normalize(r);
    return r;
}

QPoly poly_sub(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_normalize(r);
    return r;
}

QPoly poly_mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_normalize(r);
    return r;
}

QPoly poly_scale(const Rat &c, const QPoly &a) {
    if (is_zero(c)) return {};
    QPoly r = a;
    for (auto &x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly &a, const QPoly &b) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    QPoly r = a, q;
    int db = poly_deg(b);
    if (poly_deg(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
    Rat lead_inv = Rat(1) / b.back();
    while (poly_deg(r) >= db) {
        int dr = poly_deg(r);
        Rat c = r.back() * lead_inv;
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        poly_normalize(r);
    }
    poly_normalize(q);
    return {q, r};
}

QPoly poly_derivative(const QPoly &a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * a[i];
    poly_normalize(r);
    return r;
}

QPoly poly_monic(const QPoly &a) {
    if (a.empty()) return a;
    return poly_scale(Rat(1) / a.back(), a);
}

QPoly poly_gcd(QPoly a, QPoly b) {
    poly_normalize(a);
    poly_normalize(b);
    while (!b.empty()) {
        QPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : poly_monic(a);
}

Rat poly_eval(const QPoly &a, const Rat &x) {
    Rat r(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

GaussQ poly_eval(const QPoly &a, const GaussQ &x) {
    GaussQ r(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + GaussQ(*it);
    return r;
}

QMat poly_eval(const QPoly &a, const QMat &M) {
    if (M.rows != M.cols) throw std::invalid_argument("poly_eval: matrix not square");
    QMat r(M.rows, M.rows);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r = r * M;
        for (int i = 0; i < M.rows; ++i) r(i, i) += *it;
    }
    return r;
}

bool poly_divides(const QPoly &d, const QPoly &a) {
    if (d.empty()) return a.empty();
    return poly_divmod(a, d).second.empty();
}

QPoly poly_flip_sign(const QPoly &a) {
    QPoly r = a;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

bool poly_is_even(const QPoly &p) {
    for (size_t i = 1; i < p.size(); i += 2)
        if (!is_zero(p[i])) return false;
    return true;
}

QPoly poly_even_part_as_square(const QPoly &p) {
    if (!poly_is_even(p)) throw std::invalid_argument("poly_even_part_as_square: not even");
    QPoly r((p.size() + 1) / 2);
    for (size_t i = 0; i < p.size(); i += 2) r[i / 2] = p[i];
    poly_normalize(r);
    return r;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &p0) {
    QPoly p = poly_monic(p0);
    std::vector<std::pair<QPoly, int>> out;
    if (poly_deg(p) <= 0) return out;
    // Yun
    QPoly dp = poly_derivative(p);
    QPoly g = poly_gcd(p, dp);
    QPoly w = poly_divmod(p, g).first;
    QPoly y = poly_divmod(dp, g).first;
    QPoly z = poly_sub(y, poly_derivative(w));
    int m = 1;
    while (poly_deg(w) > 0) {
        QPoly f = poly_gcd(w, z);
        if (poly_deg(f) > 0) out.emplace_back(poly_monic(f), m);
        w = poly_divmod(w, f).first;
        y = poly_divmod(z, f).first;
        z = poly_sub(y, poly_derivative(w));
        ++m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q: Zassenhaus on the primitive integer polynomial.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Int>;

void znormalize(ZPoly &p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly zmul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    znormalize(r);
    return r;
}

// modular polynomial arithmetic, coefficients in [0, p)
struct ModP {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using PPoly = std::vector<std::uint64_t>;

void pnormalize(PPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const ModP &m, const PPoly &a, const PPoly &b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
    }
    pnormalize(r);
    return r;
}

PPoly psub(const ModP &m, const PPoly &a, const PPoly &b) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = m.sub(r[i], b[i]);
    pnormalize(r);
    return r;
}

PPoly pmod(const ModP &m, PPoly a, const PPoly &b) {
    pnormalize(a);
    if (b.empty()) throw std::domain_error("pmod by zero");
    std::uint64_t binv = m.inv(b.back());
    while (a.size() >= b.size()) {
        std::uint64_t c = m.mul(a.back(), binv);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = m.sub(a[off + i], m.mul(c, b[i]));
        pnormalize(a);
    }
    return a;
}

PPoly pdiv(const ModP &m, PPoly a, const PPoly &b) {
    pnormalize(a);
    if (b.empty()) throw std::domain_error("pdiv by zero");
    if (a.size() < b.size()) return {};
    PPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t binv = m.inv(b.back());
    while (a.size() >= b.size()) {
        std::uint64_t c = m.mul(a.back(), binv);
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = m.sub(a[off + i], m.mul(c, b[i]));
        pnormalize(a);
        if (a.empty()) break;
    }
    pnormalize(q);
    return q;
}

PPoly pgcd(const ModP &m, PPoly a, PPoly b) {
    pnormalize(a);
    pnormalize(b);
    while (!b.empty()) {
        PPoly r = pmod(m, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = m.inv(a.back());
        for (auto &c : a) c = m.mul(c, inv);
    }
    return a;
}

PPoly ppowmod(const ModP &m, PPoly base, Int e, const PPoly &f) {
    PPoly r{1};
    base = pmod(m, base, f);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod(m, pmul(m, r, base), f);
        base = pmod(m, pmul(m, base, base), f);
        e >>= 1;
    }
    return r;
}

// distinct-degree then equal-degree splitting (Cantor-Zassenhaus), f monic
// squarefree mod p, p odd.
void equal_degree_split(const ModP &m, const PPoly &f, int d, std::vector<PPoly> &out, Rng &rng) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(m.p), static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;
    for (;;) {
        PPoly a(n, 0);
        for (int i = 0; i < n; ++i) a[i] = rng.below(m.p);
        pnormalize(a);
        if (a.size() <= 1) continue;
        PPoly g = pgcd(m, a, f);
        if (g.size() > 1 && g.size() <= f.size() - 1) {
            equal_degree_split(m, g, d, out, rng);
            equal_degree_split(m, pdiv(m, f, g), d, out, rng);
            return;
        }
        PPoly b = ppowmod(m, a, e, f);
        if (b.empty()) continue;
        b[0] = m.sub(b[0], 1);
        pnormalize(b);
        if (b.empty()) continue;
        g = pgcd(m, b, f);
        if (g.size() > 1 && g.size() <= f.size() - 1) {
            equal_degree_split(m, g, d, out, rng);
            equal_degree_split(m, pdiv(m, f, g), d, out, rng);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(const ModP &m, PPoly f, Rng &rng) {
    std::vector<PPoly> out;
    // make monic
    if (f.back() != 1) {
        std::uint64_t inv = m.inv(f.back());
        for (auto &c : f) c = m.mul(c, inv);
    }
    PPoly x{0, 1};
    PPoly h = x;
    int d = 0;
    while (static_cast<int>(f.size()) - 1 > 2 * (d + 1) - 2) {
        ++d;
        h = ppowmod(m, h, Int(static_cast<long>(m.p)), f);
        PPoly hm = h;
        if (hm.size() < 2) hm.resize(2, 0);
        hm[1] = m.sub(hm[1], 1);
        pnormalize(hm);
        PPoly g = hm.empty() ? f : pgcd(m, hm, f);
        if (g.size() > 1) {
            equal_degree_split(m, g, d, out, rng);
            f = pdiv(m, f, g);
            h = pmod(m, h, f);
        }
        if (f.size() <= 1) break;
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

// symmetric representative in (-p^k/2, p^k/2]
Int symmetric_mod(Int a, const Int &q) {
    a %= q;
    if (sgn(a) < 0) a += q;
    if (a * 2 > q) a -= q;
    return a;
}

ZPoly zmod_sym(const ZPoly &a, const Int &q) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = symmetric_mod(a[i], q);
    znormalize(r);
    return r;
}

// polynomial arithmetic mod q (q = p^k), coefficients symmetric
ZPoly zq_mul(const ZPoly &a, const ZPoly &b, const Int &q) { return zmod_sym(zmul(a, b), q); }

ZPoly zq_sub(const ZPoly &a, const ZPoly &b, const Int &q) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmod_sym(r, q);
}

// divide a by monic-mod-q b: returns (quot, rem) mod q; b.back() must be
// invertible mod q
std::pair<ZPoly, ZPoly> zq_divmod(ZPoly a, const ZPoly &b, const Int &q) {
    a = zmod_sym(a, q);
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), b.back().get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::domain_error("zq_divmod: non-invertible leading coefficient");
    ZPoly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int c = symmetric_mod(a.back() * binv, q);
        size_t off = a.size() - b.size();
        quot[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = symmetric_mod(a[off + i] - c * b[i], q);
        znormalize(a);
    }
    znormalize(quot);
    return {quot, a};
}

// Hensel: given f = g*h (mod p), s*g + t*h = 1 (mod p), lift to mod p^2 etc.
struct HenselPair {
    ZPoly g, h, s, t;
};

// one quadratic lifting step: from mod q to mod q^2 (capped at qmax)
void hensel_step(const ZPoly &f, HenselPair &hp, const Int &q, const Int &q2) {
    ZPoly e = zq_sub(f, zmul(hp.g, hp.h), q2);
    auto [qq, r] = zq_divmod(zq_mul(hp.s, e, q2), hp.h, q2);
    ZPoly gstar = zmod_sym(poly_gcd // placeholder avoided
                               ? ZPoly{}
                               : ZPoly{},
                           q2);
    (void)gstar;
    ZPoly gnew = zmod_sym(zmul(hp.t, e), q2);
    gnew = zq_sub(ZPoly{}, zq_sub(ZPoly{}, gnew, q2), q2);  // gnew = t*e mod q2
    gnew = zmod_sym(zmul(hp.t, e), q2);
    // g' = g + (t*e + q*g) adjusted: standard: g' = g + [t*e mod g?]  -- use
    // the asymmetric variant: h' = h + r? We follow von zur Gathen Alg. 15.10:
    // e = f - g h; (q', r') with s e = q' h + r'; g' = g + t e + q' g; h' = h + r'
    ZPoly gprime = zmod_sym(poly_gcd ? ZPoly{} : ZPoly{}, q2);
    (void)gprime;
    ZPoly te = zmod_sym(zmul(hp.t, e), q2);
    ZPoly qg = zmod_sym(zmul(qq, hp.g), q2);
    ZPoly g2(std::max({hp.g.size(), te.size(), qg.size()}), Int(0));
    for (size_t i = 0; i < hp.g.size(); ++i) g2[i] += hp.g[i];
    for (size_t i = 0; i < te.size(); ++i) g2[i] += te[i];
    for (size_t i = 0; i < qg.size(); ++i) g2[i] += qg[i];
    g2 = zmod_sym(g2, q2);
    ZPoly h2(std::max(hp.h.size(), r.size()), Int(0));
    for (size_t i = 0; i < hp.h.size(); ++i) h2[i] += hp.h[i];
    for (size_t i = 0; i < r.size(); ++i) h2[i] += r[i];
    h2 = zmod_sym(h2, q2);
    // lift Bezout: b = s g2 + t h2 - 1 (mod q2); (c, d) with s b = c h2 + d;
    // s' = s - d; t' = t - t b - c g2
    ZPoly b = zq_sub(zmod_sym(poly_gcd ? ZPoly{} : ZPoly{}, q2), ZPoly{}, q2);
    (void)b;
    ZPoly sb_g = zmod_sym(zmul(hp.s, g2), q2);
    ZPoly tb_h = zmod_sym(zmul(hp.t, h2), q2);
    ZPoly bb(std::max(sb_g.size(), tb_h.size()), Int(0));
    for (size_t i = 0; i < sb_g.size(); ++i) bb[i] += sb_g[i];
    for (size_t i = 0; i < tb_h.size(); ++i) bb[i] += tb_h[i];
    if (bb.empty()) bb.resize(1, Int(0));
    bb[0] -= 1;
    bb = zmod_sym(bb, q2);
    auto [cc, dd] = zq_divmod(zq_mul(hp.s, bb, q2), h2, q2);
    ZPoly s2 = zq_sub(hp.s, dd, q2);
    ZPoly tb = zmod_sym(zmul(hp.t, bb), q2);
    ZPoly cg = zmod_sym(zmul(cc, g2), q2);
    ZPoly t2 = zq_sub(zq_sub(hp.t, tb, q2), cg, q2);
    hp.g = g2;
    hp.h = h2;
    hp.s = s2;
    hp.t = t2;
    (void)q;
}

// lift the full list of monic modular factors of the primitive squarefree f
// (leading coefficient handled by caller) to factors mod `target`
std::vector<ZPoly> hensel_lift_tree(const ZPoly &f, const std::vector<PPoly> &mod_factors,
                                    const ModP &m, const Int &target, Int &reached);

ZPoly ppoly_to_z(const PPoly &f, const ModP &m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = symmetric_mod(Int(static_cast<unsigned long>(f[i])), Int(static_cast<unsigned long>(m.p)));
    return r;
}

// extended euclid mod p for PPoly: s*a + t*b = gcd
void pxgcd(const ModP &m, PPoly a, PPoly b, PPoly &s, PPoly &t) {
    PPoly s0{1}, s1{}, t0{}, t1{1};
    pnormalize(a);
    pnormalize(b);
    while (!b.empty()) {
        PPoly q = pdiv(m, a, b);
        PPoly r = pmod(m, a, b);
        a = std::move(b);
        b = std::move(r);
        PPoly s2 = psub(m, s0, pmul(m, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        PPoly t2 = psub(m, t0, pmul(m, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize gcd to 1 (a is a nonzero constant when inputs coprime)
    if (a.size() != 1) throw std::domain_error("pxgcd: inputs not coprime");
    std::uint64_t inv = m.inv(a[0]);
    for (auto &c : s0) c = m.mul(c, inv);
    for (auto &c : t0) c = m.mul(c, inv);
    s = s0;
    t = t0;
}

std::vector<ZPoly> hensel_lift_tree(const ZPoly &f, const std::vector<PPoly> &mod_factors,
                                    const ModP &m, const Int &target, Int &reached) {
    if (mod_factors.size() == 1) {
        reached = target;
        return {zmod_sym(f, target)};
    }
    // split factor list in two halves, g = prod first, h = prod second (mod p)
    size_t half = mod_factors.size() / 2;
    PPoly g{1}, h{1};
    for (size_t i = 0; i < half; ++i) g = pmul(m, g, mod_factors[i]);
    for (size_t i = half; i < mod_factors.size(); ++i) h = pmul(m, h, mod_factors[i]);
    PPoly s, t;
    pxgcd(m, g, h, s, t);
    HenselPair hp{ppoly_to_z(g, m), ppoly_to_z(h, m), ppoly_to_z(s, m), ppoly_to_z(t, m)};
    Int q(static_cast<unsigned long>(m.p));
    while (q < target) {
        Int q2 = q * q;
        if (q2 > target * target) q2 = target * target;  // keep modulus bounded
        hensel_step(f, hp, q, q2);
        q = q2;
    }
    reached = q;
    std::vector<PPoly> left(mod_factors.begin(), mod_factors.begin() + half);
    std::vector<PPoly> right(mod_factors.begin() + half, mod_factors.end());
    Int r1, r2;
    std::vector<ZPoly> lf = hensel_lift_tree(hp.g, left, m, q, r1);
    std::vector<ZPoly> rf = hensel_lift_tree(hp.h, right, m, q, r2);
    lf.insert(lf.end(), rf.begin(), rf.end());
    reached = q;
    return lf;
}

Int znorm2_bound(const ZPoly &f) {
    Int s = 0;
    for (const auto &c : f) s += c * c;
    return sqrt(s) + 1;
}

ZPoly zprimitive(ZPoly f) {
    Int g = 0;
    for (const auto &c : f) g = gcd(g, c);
    if (sgn(g) == 0) return f;
    if (sgn(f.back()) < 0) g = -g;
    for (auto &c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return f;
}

// irreducible factors of a primitive squarefree integer polynomial
std::vector<ZPoly> zassenhaus_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    znormalize(f);
    if (f.size() <= 1) return out;
    if (f.size() == 2) {
        out.push_back(zprimitive(f));
        return out;
    }
    static const std::uint64_t primes[] = {127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
                                           179, 181, 191, 193, 197, 199, 211, 223, 227, 229};
    ModP m{};
    std::vector<PPoly> mod_factors;
    Rng rng(0xC0FFEE);
    bool found = false;
    for (std::uint64_t p : primes) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        m.p = p;
        PPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Int c = f[i] % Int(static_cast<unsigned long>(p));
            if (sgn(c) < 0) c += static_cast<unsigned long>(p);
            fp[i] = c.get_ui();
        }
        pnormalize(fp);
        if (fp.size() != f.size()) continue;
        // squarefree mod p?
        PPoly dfp(fp.size() - 1);
        for (size_t i = 1; i < fp.size(); ++i) dfp[i - 1] = m.mul(fp[i], i % p);
        pnormalize(dfp);
        if (dfp.empty()) continue;
        PPoly g = pgcd(m, fp, dfp);
        if (g.size() != 1) continue;
        mod_factors = factor_mod_p(m, fp, rng);
        found = true;
        break;
    }
    if (!found) throw std::runtime_error("zassenhaus: no usable prime in table");
    if (mod_factors.size() == 1) {
        out.push_back(zprimitive(f));
        return out;
    }
    std::sort(mod_factors.begin(), mod_factors.end(),
              [](const PPoly &a, const PPoly &b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    // lift to modulus beyond the Mignotte-style bound
    Int lc = f.back();
    Int bound = (Int(1) << static_cast<unsigned long>(f.size())) * znorm2_bound(f) * abs(lc) * 2;
    Int reached;
    std::vector<ZPoly> lifted = hensel_lift_tree(zmod_sym(f, [&] {
                                                     Int q(static_cast<unsigned long>(m.p));
                                                     while (q < bound) q = q * q;
                                                     return q;
                                                 }()),
                                                 mod_factors, m, bound, reached);
    Int q = reached;
    // recombination over subsets of lifted factors
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    ZPoly rem = f;
    for (size_t take = 1; 2 * take <= alive.size();) {
        bool advanced = false;
        // iterate subsets of size `take` of alive indices
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{rem.back()};
            for (size_t i = 0; i < take; ++i) cand = zq_mul(cand, lifted[alive[idx[i]]], q);
            cand = zprimitive(cand);
            // trial division over Z
            bool ok = false;
            if (!cand.empty() && cand.size() <= rem.size()) {
                // exact division check in Q
                QPoly qc(cand.size()), qr(rem.size());
                for (size_t i = 0; i < cand.size(); ++i) qc[i] = Rat(cand[i]);
                for (size_t i = 0; i < rem.size(); ++i) qr[i] = Rat(rem[i]);
                if (poly_divides(qc, qr)) ok = true;
            }
            if (ok) {
                out.push_back(cand);
                // remove used factors, divide rem
                QPoly qc(cand.size()), qr(rem.size());
                for (size_t i = 0; i < cand.size(); ++i) qc[i] = Rat(cand[i]);
                for (size_t i = 0; i < rem.size(); ++i) qr[i] = Rat(rem[i]);
                QPoly quo = poly_divmod(qr, qc).first;
                ZPoly zq2(quo.size());
                for (size_t i = 0; i < quo.size(); ++i) {
                    if (quo[i].get_den() != 1) {
                        // clear: quotient of primitive by primitive factor is integral
                        // up to content; rebuild primitively
                    }
                    zq2[i] = quo[i].get_num();  // denominators are 1 here
                }
                rem = zprimitive(zq2);
                std::vector<int> keep;
                for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                    if (j < take && idx[j] == i) { ++j; continue; }
                    keep.push_back(alive[i]);
                }
                alive = keep;
                advanced = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[pos] == alive.size() - take + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!advanced) ++take;
    }
    if (rem.size() > 1) out.push_back(zprimitive(rem));
    return out;
}

} // namespace

QFactorization factorize_rational(const QPoly &p0) {
    QFactorization res;
    QPoly p = p0;
    poly_normalize(p);
    if (p.empty()) {
        res.content = 0;
        return res;
    }
    res.content = p.back();
    if (poly_deg(p) == 0) return res;
    for (auto &[sf, mult] : squarefree_decomposition(p)) {
        // clear denominators of the monic squarefree part
        Int l = 1;
        for (const auto &c : sf) l = lcm(l, Int(c.get_den()));
        ZPoly z(sf.size());
        for (size_t i = 0; i < sf.size(); ++i) z[i] = sf[i].get_num() * (l / sf[i].get_den());
        z = zprimitive(z);
        for (const ZPoly &f : zassenhaus_squarefree(z)) {
            QPoly qf(f.size());
            for (size_t i = 0; i < f.size(); ++i) qf[i] = Rat(f[i]);
            res.factors.emplace_back(poly_monic(qf), mult);
        }
    }
    // canonical order: by degree, then lexicographic on coefficients
    std::sort(res.factors.begin(), res.factors.end(), [](const auto &a, const auto &b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = 0; i < a.first.size(); ++i) {
            int c = cmp(a.first[i], b.first[i]);
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });
    return res;
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

namespace {

std::vector<QPoly> sturm_chain(const QPoly &p) {
    std::vector<QPoly> chain;
    QPoly a = p;
    poly_normalize(a);
    if (a.empty()) return chain;
    chain.push_back(a);
    QPoly b = poly_derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        QPoly r = poly_divmod(a, b).second;
        for (auto &c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

int sign_changes_at(const std::vector<QPoly> &chain, const Rat &x) {
    int last = 0, changes = 0;
    for (const auto &q : chain) {
        int s = sgn(poly_eval(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_changes_at_inf(const std::vector<QPoly> &chain, int dir) {
    int last = 0, changes = 0;
    for (const auto &q : chain) {
        if (q.empty()) continue;
        int s = sgn(q.back());
        if (dir < 0 && (poly_deg(q) % 2 == 1)) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int sturm_count_real_roots(const QPoly &p) {
    QPoly sf = poly_divmod(p, poly_gcd(p, poly_derivative(p))).first;
    auto chain = sturm_chain(sf);
    if (chain.empty()) return 0;
    return sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
}

int sturm_count_real_roots(const QPoly &p, const Rat &a, const Rat &b) {
    QPoly sf = poly_divmod(p, poly_gcd(p, poly_derivative(p))).first;
    auto chain = sturm_chain(sf);
    if (chain.empty()) return 0;
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

bool all_real_roots_negative(const QPoly &p) {
    QPoly q = p;
    poly_normalize(q);
    if (q.empty()) throw std::invalid_argument("all_real_roots_negative: zero polynomial");
    if (poly_deg(q) == 0) return true;  // vacuous
    if (is_zero(q[0])) return false;    // root at 0
    QPoly sf = poly_divmod(q, poly_gcd(q, poly_derivative(q))).first;
    auto chain = sturm_chain(sf);
    int total = sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
    int negative = sign_changes_at_inf(chain, -1) - sign_changes_at(chain, Rat(0));
    (void)total;
    // every real root negative AND at least covering all real roots
    int nonneg = sign_changes_at(chain, Rat(0)) - sign_changes_at_inf(chain, +1);
    return nonneg == 0;
}

// ---------------------------------------------------------------------------
// Numeric roots with certified radii (Durand-Kerner + Weierstrass bounds)
// ---------------------------------------------------------------------------

std::vector<RootDisk> numeric_roots(const QPoly &p0) {
    QPoly p = poly_monic(p0);
    int n = poly_deg(p);
    std::vector<RootDisk> out;
    if (n <= 0) return out;
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = p[i].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> r = 0;
        for (int i = n; i >= 0; --i) r = r * z + c[i];
        return r;
    };
    // initial guesses on a circle of radius ~ root bound
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    bound = 1.0 + bound;
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = bound * std::polar(0.7, 2.0 * M_PI * i / n + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = eval(z[i]), den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<double> w = num / den;
            z[i] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-14 * bound) break;
    }
    // Weierstrass corrections give inclusion radii: all roots lie in the
    // union of disks D(z_i, n |W_i|) and each connected component of the
    // union made of m disks contains exactly m roots (Elsner).
    out.resize(n);
    for (int i = 0; i < n; ++i) {
        std::complex<double> num = eval(z[i]), den = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) den *= (z[i] - z[j]);
        double w = std::abs(num / den);
        double r = n * w;
        if (!std::isfinite(r)) r = 2 * bound;
        out[i] = {z[i], std::max(r, 1e-13 * (1.0 + std::abs(z[i])))};
    }
    return out;
}

} // namespace jetnorm
