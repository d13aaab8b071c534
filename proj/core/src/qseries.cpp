#include "etaq/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "etaq/errors.hpp"

namespace etaq {

QSeries::QSeries(std::int64_t offset_times_24, std::vector<Integer> coeffs)
    : offset24_(offset_times_24), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries precision must be positive");
}

QSeries QSeries::one(std::size_t precision) {
  std::vector<Integer> c(precision, 0);
  if (!c.empty()) c[0] = 1;
  return QSeries(0, std::move(c));
}

Integer QSeries::coefficient(const Rational& exponent) const {
  // exponent = offset + j  <=>  24 * exponent - offset24 = 24 j
  const Rational shifted = exponent - offset();
  if (!is_integer(shifted)) return 0;
  const Integer j = shifted.get_num();
  if (j < 0) return 0;
  if (j >= static_cast<unsigned long>(coeffs_.size())) {
    throw InsufficientPrecision("coefficient of q^" + exponent.get_str() + " requested but series is known only below q^" +
                                Rational(offset() + static_cast<unsigned long>(coeffs_.size())).get_str());
  }
  return coeffs_[j.get_ui()];
}

QSeries QSeries::truncated(std::size_t precision) const {
  if (precision == 0 || precision > coeffs_.size()) throw std::invalid_argument("truncated: bad precision");
  return QSeries(offset24_, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(precision)));
}

QSeries binomial_factor(std::int64_t n, std::int64_t r, std::size_t precision) {
  if (n < 1) throw std::domain_error("binomial_factor: n must be positive");
  if (precision < 1) throw std::domain_error("binomial_factor: precision must be positive");
  std::vector<Integer> f(precision, 0);
  f[0] = 1;
  const std::size_t step = static_cast<std::size_t>(n);
  const std::int64_t reps = r < 0 ? -r : r;
  for (std::size_t j = step; j < precision; j += step) {
    for (std::int64_t t = 0; t < reps; ++t) {
      if (r > 0) {
        // times (1 - q^j)
        for (std::size_t i = precision - 1; i >= j; --i) f[i] -= f[i - j];
      } else {
        // divided by (1 - q^j): f_i += f_{i-j}, ascending
        for (std::size_t i = j; i < precision; ++i) f[i] += f[i - j];
      }
    }
  }
  return QSeries(0, std::move(f));
}

QSeries multiply(const QSeries& f, const QSeries& g) {
  const std::int64_t offset24 = f.offset_times_24() + g.offset_times_24();
  const std::size_t prec = std::min(f.precision(), g.precision());
  std::vector<Integer> out(prec, 0);
  for (std::size_t i = 0; i < prec; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j < prec; ++j) {
      if (g[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
    }
  }
  return QSeries(offset24, std::move(out));
}

QSeries eta_quotient_expansion(const EtaQuotient& e, std::size_t precision) {
  if (precision < 1) throw std::domain_error("eta_quotient_expansion: precision must be positive");
  std::int64_t x_n = 0;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) x_n += e.divisors()[i] * e.exponents()[i];

  // f = prod_j (1 - q^j)^{a_j} with a_j = sum_{n | gcd(j, N)} r_n. Its
  // logarithmic derivative gives i c_i = sum_{m=1}^{i} s_m c_{i-m} where
  // s_m = -sum_{j | m} j a_j.
  std::vector<long> a(precision, 0);
  for (std::size_t i = 0; i < e.divisors().size(); ++i) {
    const auto n = static_cast<std::size_t>(e.divisors()[i]);
    for (std::size_t j = n; j < precision; j += n) a[j] += e.exponents()[i];
  }
  std::vector<long> s(precision, 0);
  for (std::size_t j = 1; j < precision; ++j) {
    if (a[j] == 0) continue;
    const long term = static_cast<long>(j) * a[j];
    for (std::size_t m = j; m < precision; m += j) s[m] -= term;
  }

  std::vector<Integer> c(precision, 0);
  c[0] = 1;
  Integer acc;
  for (std::size_t i = 1; i < precision; ++i) {
    acc = 0;
    for (std::size_t m = 1; m <= i; ++m) {
      if (s[m] == 0 || c[i - m] == 0) continue;
      if (s[m] > 0) {
        mpz_addmul_ui(acc.get_mpz_t(), c[i - m].get_mpz_t(), static_cast<unsigned long>(s[m]));
      } else {
        mpz_submul_ui(acc.get_mpz_t(), c[i - m].get_mpz_t(), static_cast<unsigned long>(-s[m]));
      }
    }
    mpz_divexact_ui(c[i].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return QSeries(x_n, std::move(c));
}

}  // namespace etaq
