#include "jetnorm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace jetnorm {

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat &a) {
    return a.get_str();
}

GaussQ operator/(const GaussQ &a, const GaussQ &b) {
    Rat n2 = b.norm2();
    if (sgn(n2) == 0) throw std::domain_error("division by zero in Q(i)");
    GaussQ num = a * b.conj();
    return {num.re / n2, num.im / n2};
}

std::string gauss_to_string(const GaussQ &z) {
    if (z.is_real()) return rat_to_string(z.re);
    std::string s;
    if (sgn(z.re) != 0) s += rat_to_string(z.re);
    if (sgn(z.im) > 0 && !s.empty()) s += "+";
    s += rat_to_string(z.im) + "*i";
    return s;
}

std::ostream &operator<<(std::ostream &os, const GaussQ &z) {
    return os << gauss_to_string(z);
}

} // namespace jetnorm
