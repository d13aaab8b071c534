#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/integer.hpp"

namespace etaq {

/// prod_{n | N} eta(n tau)^{r_n}: a level N and one exponent per divisor of N.
///
/// Every divisor carries an entry; zero exponents are kept so the r-string
/// prints back exactly as written (e.g. "1^{0}2^{3}3^{0}6^{-1}").
class EtaQuotient {
 public:
  static constexpr std::int64_t kMaxLevel = 1'000'000;
  static constexpr std::int64_t kMaxAbsExponent = 10'000;

  /// Keys must divide `level`; divisors without a key get exponent 0.
  EtaQuotient(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents);

  /// Exponents given in increasing-divisor order; size must equal the divisor count.
  EtaQuotient(std::int64_t level, std::vector<std::int64_t> exponents);

  /// Parses the "n^{e}" concatenation, e.g. "1^{-4}2^{10}4^{-4}". Bases must be
  /// increasing divisors of `level`; omitted divisors default to 0.
  static EtaQuotient parse(std::int64_t level, std::string_view r_string);

  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& divisors() const { return divisors_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

  /// r_n; zero when n is not a divisor of the level.
  std::int64_t exponent(std::int64_t n) const;

  /// Canonical r-string listing every divisor, zeros included.
  std::string to_string() const;

  /// Pointwise sum of exponents; levels must agree.
  EtaQuotient operator+(const EtaQuotient& other) const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
  friend auto operator<=>(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  std::vector<std::int64_t> exponents_;
};

std::vector<std::int64_t> divisors_of(std::int64_t n);

/// Everything that is a pure function of (N, r).
struct DerivedInvariants {
  Rational k;        // weight, (1/2) sum r_n
  Integer pi;        // prod (N/n)^{|r_n|}
  Integer pi_sf;     // squarefree part of pi
  int m_r = 1;       // 24 / gcd(24, sum n r_n, sum (N/n) r_n)
  int delta = 0;     // 1 iff the odd part of pi is 3 mod 4
  Integer x_n;       // sum n r_n
  std::map<std::int64_t, Integer> x_c;  // cusp data, one per divisor c of N
};

DerivedInvariants derive(const EtaQuotient& e);

/// x_c = sum_n N/gcd(N,c^2) * gcd(n,c)^2/n * r_n.
Integer cusp_value(const EtaQuotient& e, std::int64_t c);

bool is_integral_weight(const EtaQuotient& e);

/// x_c >= 0 at every divisor c of N.
bool is_holomorphic(const EtaQuotient& e);

/// x_N / 24.
Rational vanishing_order_at_infinity(const EtaQuotient& e);

enum class Parity { even, odd };

inline Parity parity_of(std::int64_t l) { return l % 2 == 0 ? Parity::even : Parity::odd; }

/// False exactly when 2 | l, 2 | N and N(k + delta) = 2 mod 4 all hold. In that
/// case the fourth-root factor of the Hecke transform depends on b and the
/// simplified coefficient formula is unavailable. Requires integral weight.
bool psi_independent_of_b(const EtaQuotient& e, Parity l_parity);
bool psi_independent_of_b(const EtaQuotient& e, const DerivedInvariants& inv, Parity l_parity);

/// N even, or k + delta even. Under this the fourth-root factors compose
/// multiplicatively for every l, including 4 | l with N odd.
bool psi_multiplicative(const EtaQuotient& e);
bool psi_multiplicative(const EtaQuotient& e, const DerivedInvariants& inv);

}  // namespace etaq
