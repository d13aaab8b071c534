#pragma once

// Elementary number theory on arbitrary-precision integers. Factorization is
// by trial division; every argument arising here has small prime factors.

#include <utility>
#include <vector>

#include "etaq/integer.hpp"

namespace etaq {

/// Kronecker-Jacobi symbol (a/b), total on Z x Z (Cohen's extension):
/// (a/0) = [a = +-1], (a/-1) = sign(a) with (0/-1) = 1, (a/2) from a mod 8.
int kronecker(const Integer& a, const Integer& b);

int moebius(const Integer& n);

Integer euler_phi(const Integer& n);

/// Product of the primes dividing gcd(a, b).
Integer rad_common(const Integer& a, const Integer& b);

/// The squarefree d with n / d a perfect square.
Integer squarefree_part(const Integer& n);

/// 2-adic valuation; the sign of n is ignored.
unsigned long v2(const Integer& n);

/// Positive divisors of n in increasing order.
std::vector<Integer> divisors(const Integer& n);

/// Prime factorization of n >= 1 as (p, e) pairs, p increasing.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// Distinct primes dividing n >= 1, increasing.
std::vector<Integer> prime_divisors(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace etaq
