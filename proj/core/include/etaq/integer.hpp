#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace etaq {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);

Integer floor(const Rational& x);

/// {x} = x - floor(x), in [0, 1) for every rational x including negatives.
Rational fractional_part(const Rational& x);

bool is_integer(const Rational& x);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace etaq
