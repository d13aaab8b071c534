#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/integer.hpp"

namespace etaq {

/// Truncated power series sum_j c_j q^{offset + j}, j < precision, with
/// offset in (1/24)Z and exact integer coefficients.
class QSeries {
 public:
  /// Precision is coeffs.size(), which must be positive.
  QSeries(std::int64_t offset_times_24, std::vector<Integer> coeffs);

  /// The constant series 1.
  static QSeries one(std::size_t precision);

  Rational offset() const { return make_rational(offset24_, 24); }
  std::int64_t offset_times_24() const { return offset24_; }
  std::size_t precision() const { return coeffs_.size(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Coefficient at index j, i.e. of q^{offset + j}.
  const Integer& operator[](std::size_t j) const { return coeffs_[j]; }

  /// Coefficient of q^exponent. Zero off the lattice offset + Z and below the
  /// offset; throws InsufficientPrecision at or beyond offset + precision.
  Integer coefficient(const Rational& exponent) const;

  QSeries truncated(std::size_t precision) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::int64_t offset24_;
  std::vector<Integer> coeffs_;
};

/// prod_{m >= 1} (1 - q^{n m})^r to the given precision, offset 0.
QSeries binomial_factor(std::int64_t n, std::int64_t r, std::size_t precision);

/// Product of two series; precision is the smaller of the two.
QSeries multiply(const QSeries& f, const QSeries& g);

/// The expansion q^{x_N/24} prod_{n | N} prod_m (1 - q^{n m})^{r_n}.
QSeries eta_quotient_expansion(const EtaQuotient& e, std::size_t precision);

}  // namespace etaq
