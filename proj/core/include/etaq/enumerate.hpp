#pragma once

// Bounded search for holomorphic eta-quotients of integral weight,
// non-vanishing at infinity, whose space M_k(Gamma0(N), chi_r) has dimension
// one by the dimension formula. Completeness holds only inside the exponent box.

#include <cstdint>
#include <optional>
#include <vector>

#include "etaq/eta_quotient.hpp"

namespace etaq {

struct EnumerationConfig {
  std::int64_t level = 1;
  /// Every |r_n| <= bound. Reproducing the table needs bound >= 17.
  std::int64_t bound = 20;
  /// Defaults to k_max_for(level).
  std::optional<std::int64_t> k_max;
  /// Keep only results whose dimension formula applies and gives 1.
  bool dimension_filter = true;
  /// Keep only r whose support has lcm equal to the level, so a quotient
  /// padded with zeros from a lower level is not reported again.
  bool exact_level = true;
  unsigned jobs = 1;
};

/// Ceiling of the largest k allowed by dim = 1:
/// (k - 1) m / 12 <= 1 + (11/24) sum_{c | N} phi(gcd(c, N/c)).
std::int64_t k_max_for(std::int64_t N);

/// Matches in lexicographic order of the divisor-ordered exponent vector.
std::vector<EtaQuotient> enumerate_level(const EnumerationConfig& config);

/// Levels the table deliberately omits; searches there yield candidates only.
bool is_candidate_only_level(std::int64_t N);

struct LevelReconstruction {
  std::int64_t level = 0;
  std::vector<EtaQuotient> found;
  std::vector<EtaQuotient> missing;  // in the table, not found
  std::vector<EtaQuotient> surplus;  // found, not in the table: findings to report
  bool candidate_only = false;

  bool reproduces_table() const { return missing.empty(); }
};

/// enumerate_level compared against the table rows at that level.
LevelReconstruction reconstruct_level(const EnumerationConfig& config);

}  // namespace etaq
