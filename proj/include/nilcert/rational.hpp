#ifndef NILCERT_RATIONAL_HPP
#define NILCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nilcert {

// Exact arbitrary-precision rational, GMP-backed. Every quantity the
// certifiers compare is held in this type; no floating point anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational &q) { return sgn(q) == 0; }

// mpq_class(num, den) does not canonicalize; GMP arithmetic assumes
// canonical operands, so every fraction built from an integer pair goes
// through here.
inline Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "3", "-4/5", "7/-2" (sign normalized, fraction canonicalized).
inline Rational parse_rational(const std::string &text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || text.empty())
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace nilcert

#endif
