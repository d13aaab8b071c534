#include "etaq/eta_quotient.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "etaq/errors.hpp"
#include "etaq/numtheory.hpp"

namespace etaq {
namespace {

void check_level(std::int64_t level) {
  if (level < 1 || level > EtaQuotient::kMaxLevel) {
    throw std::invalid_argument("level must be in [1, " + std::to_string(EtaQuotient::kMaxLevel) +
                                "], got " + std::to_string(level));
  }
}

void check_exponent(std::int64_t r) {
  if (r < -EtaQuotient::kMaxAbsExponent || r > EtaQuotient::kMaxAbsExponent) {
    throw std::invalid_argument("exponent out of range: " + std::to_string(r));
  }
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad integer '" + std::string(s) + "' in r-string '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors_of: argument must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

EtaQuotient::EtaQuotient(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents)
    : level_(level) {
  check_level(level);
  divisors_ = divisors_of(level);
  exponents_.assign(divisors_.size(), 0);
  for (const auto& [n, r] : exponents) {
    if (n < 1 || level % n != 0) {
      throw std::invalid_argument(std::to_string(n) + " is not a divisor of level " + std::to_string(level));
    }
    check_exponent(r);
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), n);
    exponents_[static_cast<std::size_t>(it - divisors_.begin())] = r;
  }
}

EtaQuotient::EtaQuotient(std::int64_t level, std::vector<std::int64_t> exponents)
    : level_(level), exponents_(std::move(exponents)) {
  check_level(level);
  divisors_ = divisors_of(level);
  if (exponents_.size() != divisors_.size()) {
    throw std::invalid_argument("level " + std::to_string(level) + " has " + std::to_string(divisors_.size()) +
                                " divisors but " + std::to_string(exponents_.size()) + " exponents were given");
  }
  for (auto r : exponents_) check_exponent(r);
}

EtaQuotient EtaQuotient::parse(std::int64_t level, std::string_view text) {
  check_level(level);
  std::map<std::int64_t, std::int64_t> exps;
  std::int64_t last = 0;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty r-string");
  while (pos < text.size()) {
    const auto caret = text.find("^{", pos);
    if (caret == std::string_view::npos || caret == pos) {
      throw ParseError("expected 'n^{e}' at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    const auto close = text.find('}', caret + 2);
    if (close == std::string_view::npos) throw ParseError("unterminated exponent in '" + std::string(text) + "'");
    const std::int64_t n = parse_int(text.substr(pos, caret - pos), text);
    const std::int64_t r = parse_int(text.substr(caret + 2, close - caret - 2), text);
    if (n <= last) throw ParseError("bases must be strictly increasing in '" + std::string(text) + "'");
    if (level % n != 0) {
      throw ParseError(std::to_string(n) + " does not divide level " + std::to_string(level));
    }
    last = n;
    exps[n] = r;
    pos = close + 1;
  }
  return EtaQuotient(level, exps);
}

std::int64_t EtaQuotient::exponent(std::int64_t n) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), n);
  if (it == divisors_.end() || *it != n) return 0;
  return exponents_[static_cast<std::size_t>(it - divisors_.begin())];
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < divisors_.size(); ++i) os << divisors_[i] << "^{" << exponents_[i] << '}';
  return os.str();
}

EtaQuotient EtaQuotient::operator+(const EtaQuotient& other) const {
  if (level_ != other.level_) throw std::invalid_argument("cannot add eta-quotients of different levels");
  std::vector<std::int64_t> sum(exponents_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = exponents_[i] + other.exponents_[i];
  return EtaQuotient(level_, std::move(sum));
}

Integer cusp_value(const EtaQuotient& e, std::int64_t c) {
  const std::int64_t N = e.level();
  if (c < 1 || N % c != 0) throw std::invalid_argument("cusp_value: c must divide N");
  const Integer Nz = N;
  const Integer cz = c;
  const Integer scale = Nz / gcd(Nz, cz * cz);
  Rational x = 0;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) {
    const std::int64_t n = e.divisors()[i];
    const Integer g = std::gcd(n, c);
    x += make_rational(scale * g * g * e.exponents()[i], n);
  }
  if (!is_integer(x)) throw std::logic_error("x_c is not an integer for " + e.to_string());
  return x.get_num();
}

DerivedInvariants derive(const EtaQuotient& e) {
  const std::int64_t N = e.level();
  DerivedInvariants inv;
  Integer sum_r = 0;
  Integer sum_nr = 0;
  Integer sum_dual = 0;
  inv.pi = 1;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) {
    const std::int64_t n = e.divisors()[i];
    const std::int64_t r = e.exponents()[i];
    sum_r += r;
    sum_nr += Integer(n) * r;
    sum_dual += Integer(N / n) * r;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(N / n), static_cast<unsigned long>(r < 0 ? -r : r));
    inv.pi *= power;
  }
  inv.k = make_rational(sum_r, 2);
  inv.pi_sf = squarefree_part(inv.pi);
  inv.x_n = sum_nr;
  const Integer g = gcd(gcd(Integer(24), sum_nr), sum_dual);
  inv.m_r = static_cast<int>(24 / g.get_si());

  Integer odd = inv.pi;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), v2(odd));
  inv.delta = mpz_fdiv_ui(odd.get_mpz_t(), 4) == 3 ? 1 : 0;

  for (auto c : e.divisors()) inv.x_c.emplace(c, cusp_value(e, c));
  return inv;
}

bool is_integral_weight(const EtaQuotient& e) {
  std::int64_t s = 0;
  for (auto r : e.exponents()) s += r;
  return s % 2 == 0;
}

bool is_holomorphic(const EtaQuotient& e) {
  return std::all_of(e.divisors().begin(), e.divisors().end(), [&](std::int64_t c) { return cusp_value(e, c) >= 0; });
}

Rational vanishing_order_at_infinity(const EtaQuotient& e) {
  Integer x = 0;
  for (std::size_t i = 0; i < e.divisors().size(); ++i) x += Integer(e.divisors()[i]) * e.exponents()[i];
  return make_rational(x, 24);
}

bool psi_independent_of_b(const EtaQuotient& e, const DerivedInvariants& inv, Parity l_parity) {
  if (!is_integer(inv.k)) throw std::domain_error("psi_independent_of_b requires integral weight");
  if (l_parity == Parity::odd || e.level() % 2 != 0) return true;
  const Integer k_delta = inv.k.get_num() + inv.delta;
  const Integer value = Integer(e.level()) * k_delta;
  return mpz_fdiv_ui(value.get_mpz_t(), 4) != 2;
}

bool psi_independent_of_b(const EtaQuotient& e, Parity l_parity) {
  return psi_independent_of_b(e, derive(e), l_parity);
}

bool psi_multiplicative(const EtaQuotient& e, const DerivedInvariants& inv) {
  if (e.level() % 2 == 0) return true;
  if (!is_integer(inv.k)) return false;
  const Integer k_delta = inv.k.get_num() + inv.delta;
  return mpz_even_p(k_delta.get_mpz_t()) != 0;
}

bool psi_multiplicative(const EtaQuotient& e) { return psi_multiplicative(e, derive(e)); }

}  // namespace etaq
