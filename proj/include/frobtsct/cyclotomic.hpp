#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frobtsct/rational.hpp"

namespace frobtsct {

// An element of Q(zeta_n), stored as rational coordinates on the power basis
// 1, z, ..., z^{phi(n)-1} of Q(zeta_n), i.e. reduced mod the n-th cyclotomic
// polynomial.  Arithmetic aligns operands at the lcm of their conductors;
// results that turn out rational are collapsed to conductor 1, otherwise the
// conductor is kept as produced (minimisation happens only for display).
// Equality is equality of values: operands are compared at a common conductor.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}                       // zero
    Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
    Cyclotomic(const Rational& v) : n_(1), c_{canonical(v)} {}

    // zeta_n^k; k taken mod n
    static Cyclotomic zeta(long n, long k);

    // parse the atom syntax: integers, rationals p/q, E(n), E(n)^k, +, -, *
    static Cyclotomic parse(std::string_view s);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()
    bool is_integral() const;        // rational with denominator 1

    // same value, represented at conductor N (current conductor must divide N)
    Cyclotomic promoted(long N) const;

    // same value at its minimal conductor
    Cyclotomic reduced() const;

    // complex conjugate (the Galois map z -> z^-1)
    Cyclotomic conjugate() const;

    // the Galois map z -> z^j, gcd(j, conductor) = 1
    Cyclotomic galois(long j) const;

    // deterministic canonical atom string, rendered at the minimal conductor
    std::string to_atom() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& q);
    Cyclotomic& operator/=(const Rational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void collapse_if_rational();

    long n_;                  // conductor
    std::vector<Rational> c_; // length euler_phi(n_)
};

} // namespace frobtsct
