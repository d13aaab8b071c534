#include "etaq/dimension.hpp"

#include <numeric>

#include "etaq/errors.hpp"
#include "etaq/numtheory.hpp"

namespace etaq {

Integer gamma0_index(std::int64_t N) {
  if (N < 1) throw std::domain_error("gamma0_index: N must be positive");
  Integer m = N;
  for (const auto& p : prime_divisors(N)) {
    m /= p;
    m *= p + 1;
  }
  return m;
}

Integer elliptic_count2(std::int64_t N) {
  if (N < 1) throw std::domain_error("elliptic_count2: N must be positive");
  if (N % 4 == 0) return 0;
  Integer e = 1;
  for (const auto& p : prime_divisors(N)) e *= 1 + kronecker(-4, p);
  return e;
}

Integer elliptic_count3(std::int64_t N) {
  if (N < 1) throw std::domain_error("elliptic_count3: N must be positive");
  if (N % 9 == 0) return 0;
  Integer e = 1;
  for (const auto& p : prime_divisors(N)) e *= 1 + kronecker(-3, p);
  return e;
}

DimensionData dimension_data(const EtaQuotient& e) {
  const std::int64_t N = e.level();
  const DerivedInvariants inv = derive(e);

  DimensionData d;
  d.index_m = gamma0_index(N);
  d.eps2 = elliptic_count2(N);
  d.eps3 = elliptic_count3(N);

  const Rational m(d.index_m);
  Rational cusp_sum_dim = 0;
  Rational cusp_sum_bound = 0;
  for (const auto& [c, x] : inv.x_c) {
    const Rational phi(euler_phi(std::gcd(c, N / c)));
    const Rational frac = fractional_part(make_rational(x, 24));
    const Rational term = phi * (Rational(1, 2) - frac);
    d.cusp_terms.emplace(c, term);
    cusp_sum_dim += term;
    cusp_sum_bound += phi * (1 - frac);
  }

  d.weight_bound = 2 - Rational(6) / m * Rational(d.eps2) - Rational(8) / m * Rational(d.eps3) -
                   Rational(12) / m * cusp_sum_bound;
  d.applicable = inv.k > d.weight_bound;
  d.dim = (inv.k - 1) / 12 * m + Rational(d.eps2) / 4 + Rational(d.eps3) / 3 + cusp_sum_dim;
  return d;
}

bool dimension_formula_applies(const EtaQuotient& e) { return dimension_data(e).applicable; }

Rational dimension(const EtaQuotient& e) {
  DimensionData d = dimension_data(e);
  if (!d.applicable) {
    throw FormulaNotApplicable("dimension formula needs k > " + d.weight_bound.get_str() + " for " + e.to_string() +
                               " at level " + std::to_string(e.level()));
  }
  return d.dim;
}

}  // namespace etaq
