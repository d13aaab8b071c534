#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "etaq/integer.hpp"
#include "etaq/table.hpp"

namespace etaq {

struct Mismatch {
  enum class Kind { coefficient, column, dimension, eigen, error };
  Kind kind;
  std::string what;  // e.g. "c_f(25)", "m_r", "dim"
  std::string expected;
  std::string got;
};

std::string to_string(Mismatch::Kind kind);

/// Outcome of checking one table row end to end. Verified iff no mismatches.
struct VerificationReport {
  std::size_t entry_id = 0;
  std::int64_t level = 0;
  std::string r_string;
  std::size_t precision = 0;
  std::vector<std::int64_t> l_tested;    // indices compared against the closed formula
  std::vector<std::int64_t> eigen_l;     // indices used for the eigen-relation check
  std::size_t eigen_checks = 0;          // (l, n) pairs compared
  Rational dimension = 0;
  bool dimension_applicable = false;
  std::vector<Mismatch> mismatches;

  bool verified() const { return mismatches.empty(); }
};

/// Expands the row to `precision` and checks: published columns against the
/// derived invariants; the closed formula against every coefficient c_f(l),
/// l = 1 mod m_r, l < precision; the dimension formula (applicable, value 1);
/// and T_l f = c_l f coefficientwise for the first three admissible l >= 2 and
/// all n with l n < precision. Failures are recorded, never thrown.
VerificationReport verify_entry(const TableEntry& row, std::size_t precision);

/// verify_entry over `rows` on `jobs` worker threads; output is in input order
/// regardless of `jobs`.
std::vector<VerificationReport> verify_entries(const std::vector<TableEntry>& rows, std::size_t precision, unsigned jobs);

}  // namespace etaq
