#pragma once

#include <cstdint>
#include <map>

#include "etaq/eta_quotient.hpp"
#include "etaq/integer.hpp"

namespace etaq {

/// [SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p).
Integer gamma0_index(std::int64_t N);

/// prod_{p | N} (1 + (-4/p)), or 0 when 4 | N.
Integer elliptic_count2(std::int64_t N);

/// prod_{p | N} (1 + (-3/p)), or 0 when 9 | N.
Integer elliptic_count3(std::int64_t N);

/// Terms of the dimension formula for M_k(Gamma0(N), chi_r), where chi_r is
/// the multiplier system of the eta-quotient.
struct DimensionData {
  Integer index_m;
  Integer eps2;
  Integer eps3;
  /// phi(gcd(c, N/c)) * (1/2 - {x_c/24}) for each c | N.
  std::map<std::int64_t, Rational> cusp_terms;
  /// The formula holds when k exceeds this bound strictly.
  Rational weight_bound;
  bool applicable = false;
  /// Value of the formula; meaningful only when `applicable`.
  Rational dim;
};

DimensionData dimension_data(const EtaQuotient& e);

bool dimension_formula_applies(const EtaQuotient& e);

/// dim M_k(Gamma0(N), chi_r). Throws FormulaNotApplicable when the weight
/// bound is not met.
Rational dimension(const EtaQuotient& e);

}  // namespace etaq
