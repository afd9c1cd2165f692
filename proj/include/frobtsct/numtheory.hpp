#pragma once

#include <vector>
#include <utility>

#include "frobtsct/rational.hpp"

namespace frobtsct {

bool is_prime(long n);

// distinct prime divisors, ascending
std::vector<long> prime_divisors(long n);

// (prime, exponent) pairs, ascending primes
std::vector<std::pair<long, int>> factorize(long n);

long euler_phi(long n);

// all positive divisors, ascending
std::vector<long> divisors(long n);

long pow_mod(long base, long exp, long mod);

// multiplicative order of a mod n, gcd(a, n) = 1
long order_mod(long a, long n);

// least primitive root mod an odd prime p
long smallest_primitive_root(long p);

// least quadratic non-residue mod an odd prime p
long smallest_quadratic_nonresidue(long p);

// coefficients of the n-th cyclotomic polynomial, index = degree,
// length euler_phi(n) + 1, monic
const std::vector<Integer>& cyclotomic_polynomial(long n);

} // namespace frobtsct
