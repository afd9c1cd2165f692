#pragma once

#include <gmpxx.h>
#include <string>

namespace frobtsct {

// exact arbitrary-precision arithmetic, GMP-backed
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// mpq_class does NOT canonicalize values built from a (num, den) pair or a
// string, and GMP arithmetic/equality silently assume lowest terms.  Every
// boundary that accepts a caller-supplied Rational must pass it through here.
inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

// "p" or "p/q" in lowest terms
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline long to_long(const Integer& z) { return z.get_si(); }

} // namespace frobtsct
