#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jetnorm {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator), so operator== is structural equality.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat &a) { return sgn(a) == 0; }

Rat rat_from_string(std::string_view s);   // accepts "p", "p/q", "-p/q"
std::string rat_to_string(const Rat &a);   // "p" or "p/q", no spaces

// Element of Q(i). Enough field structure for Cartan data and exact
// spectra of rational matrices whose char poly splits over Q(i).
struct GaussQ {
    Rat re;
    Rat im;

    GaussQ() = default;
    GaussQ(Rat r) : re(std::move(r)) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussQ(long r) : re(r) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussQ conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussQ operator-() const { return {-re, -im}; }
    GaussQ &operator+=(const GaussQ &o) { re += o.re; im += o.im; return *this; }
    GaussQ &operator-=(const GaussQ &o) { re -= o.re; im -= o.im; return *this; }

    friend GaussQ operator+(const GaussQ &a, const GaussQ &b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ &a, const GaussQ &b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator*(const GaussQ &a, const GaussQ &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ &a, const GaussQ &b);
    friend bool operator==(const GaussQ &a, const GaussQ &b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ &a, const GaussQ &b) { return !(a == b); }

    // total order (lexicographic), for canonical sorting of spectra
    friend bool operator<(const GaussQ &a, const GaussQ &b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

std::string gauss_to_string(const GaussQ &z);  // "p/q" or "p/q+r/s*i"
std::ostream &operator<<(std::ostream &os, const GaussQ &z);

// Deterministic splittable RNG for property tests and seeded fixtures.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    // small rational with numerator in [-num_max, num_max], denominator in [1, den_max]
    Rat rat(long num_max = 4, long den_max = 3) {
        long num = static_cast<long>(below(2 * num_max + 1)) - num_max;
        long den = 1 + static_cast<long>(below(den_max));
        return Rat(num, den);
    }
};

} // namespace jetnorm
