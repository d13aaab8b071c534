#include "etaq/hecke.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "etaq/errors.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/table.hpp"

namespace etaq {
namespace {

int power_sign(std::int64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

// a^e for a >= 1 and any integer e.
Rational int_power(std::int64_t a, std::int64_t e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(1, p) : Rational(p);
}

void require_catalog(const HeckeContext& ctx, EntryPolicy policy) {
  if (policy == EntryPolicy::allow_unverified) return;
  if (!find_table_entry(ctx.entry())) {
    throw NotInCatalog("closed formula is only established for table entries; " + ctx.entry().to_string() +
                       " at level " + std::to_string(ctx.entry().level()) + " is not one");
  }
}

void require_positive_weight(const HeckeContext& ctx) {
  if (ctx.weight() < 1) throw FormulaNotApplicable("weight must be at least 1");
}

void require_b_independence(const HeckeContext& ctx) {
  if (!psi_independent_of_b(ctx.entry(), ctx.invariants(), parity_of(ctx.l()))) {
    throw FormulaNotApplicable("l even, N even and N(k+delta) = 2 mod 4: psi depends on b");
  }
}

// (a/Pi), checked against (a/Pi'), which must agree for a coprime to N.
int kronecker_pi(const HeckeContext& ctx, std::int64_t a) {
  const int full = kronecker(a, ctx.invariants().pi);
  if (full != kronecker(a, ctx.invariants().pi_sf)) {
    throw std::logic_error("(a/Pi) != (a/Pi') for a = " + std::to_string(a));
  }
  return full;
}

// n - l x_N / 24, which is an integer for n on the lattice x_N/24 + Z.
Integer lattice_shift(const HeckeContext& ctx, const Rational& n) {
  const Rational xn24 = make_rational(ctx.invariants().x_n, 24);
  if (!is_integer(n - xn24)) {
    throw std::invalid_argument("n = " + n.get_str() + " is not in x_N/24 + Z (x_N = " + ctx.invariants().x_n.get_str() + ")");
  }
  const Rational shift = n - Rational(ctx.l()) * xn24;
  if (!is_integer(shift)) throw std::logic_error("n - l x_N/24 is not an integer although l = 1 mod m_r");
  return shift.get_num();
}

Rational mobius_inner_sum(std::int64_t a, std::int64_t d, const Integer& shift) {
  Rational sum = 0;
  for (auto t : divisors_of(std::gcd(a, d))) {
    if (mpz_divisible_ui_p(shift.get_mpz_t(), static_cast<unsigned long>(a / t)) == 0) continue;
    sum += make_rational(moebius(t), t);
  }
  return sum;
}

}  // namespace

std::complex<double> FourthRoot::to_complex() const {
  switch (turns_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

GaussianRational::GaussianRational(FourthRoot w) : re(0), im(0) {
  switch (w.quarter_turns()) {
    case 0: re = 1; break;
    case 1: im = 1; break;
    case 2: re = -1; break;
    default: im = -1; break;
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  const std::string imag = (im == 1 ? "" : im == -1 ? "-" : im.get_str() + "*") + "i";
  if (re == 0) return imag;
  return re.get_str() + (im > 0 ? " + " : " - ") + (im == 1 || im == -1 ? "i" : Rational(abs(im)).get_str() + "*i");
}

InadmissibleIndex::InadmissibleIndex(std::int64_t l, int m_r)
    : std::invalid_argument("l = " + std::to_string(l) + " is not 1 mod m_r = " + std::to_string(m_r)), l_(l), m_r_(m_r) {}

HeckeContext::HeckeContext(EtaQuotient entry, std::int64_t l)
    : HeckeContext(entry, derive(entry), l) {}

HeckeContext::HeckeContext(EtaQuotient entry, DerivedInvariants inv, std::int64_t l)
    : entry_(std::move(entry)), inv_(std::move(inv)), l_(l), weight_(0) {
  if (l_ < 1) throw std::domain_error("l must be positive");
  if (!is_integer(inv_.k)) throw std::domain_error("Hecke transforms here need integral weight; k = " + inv_.k.get_str());
  if ((l_ - 1) % inv_.m_r != 0) throw InadmissibleIndex(l_, inv_.m_r);
  weight_ = to_int64(inv_.k.get_num());
  for (auto a : divisors_of(l_)) {
    if (std::gcd(a, entry_.level()) == 1) coprime_divisors_.push_back(a);
  }
}

int epsilon_sign(const HeckeContext& ctx, std::int64_t a) {
  if (a < 1 || std::gcd(a, ctx.entry().level()) != 1) {
    throw std::invalid_argument("epsilon_sign: a must be positive and coprime to N");
  }
  if (ctx.l() % 2 == 0 && ctx.entry().level() % 2 != 0) return 1;
  if (a % 2 == 0) throw std::invalid_argument("epsilon_sign: a must be odd here");
  return power_sign(ctx.k_plus_delta() % 2 * ((a - 1) / 2 % 2));
}

FourthRoot psi(const HeckeContext& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t l = ctx.l();
  const std::int64_t N = ctx.entry().level();
  if (a < 1 || l % a != 0 || std::gcd(a, N) != 1) throw std::invalid_argument("psi: need a | l and gcd(a, N) = 1");
  const std::int64_t kd = ctx.k_plus_delta() % 4;
  const std::int64_t d = l / a;
  if (l % 2 != 0) {
    return FourthRoot(-kd * ((d - 1) % 4) + kd * ((l - 1) % 4) * ((N - 1) % 4));
  }
  if (N % 2 == 0) {
    // delta_1 = 1 only for half-integral k, which HeckeContext rules out.
    constexpr std::int64_t delta1 = 0;
    return FourthRoot(-kd * ((a - 1) % 4) - (N % 4) * kd * (1 + delta1) * (b % 4));
  }
  return FourthRoot(0);
}

Integer closed_coefficient(const HeckeContext& ctx, EntryPolicy policy) {
  require_catalog(ctx, policy);
  require_positive_weight(ctx);
  const std::int64_t k = ctx.weight();
  Integer sum = 0;
  for (auto a : ctx.coprime_divisors()) {
    const int sign = kronecker_pi(ctx, a) * epsilon_sign(ctx, a);
    if (sign == 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k - 1));
    if (sign > 0) sum += term;
    else sum -= term;
  }
  return -ctx.entry().exponent(1) * sum;
}

Integer closed_coefficient_recursive(const HeckeContext& ctx, EntryPolicy policy) {
  require_catalog(ctx, policy);
  require_positive_weight(ctx);
  const std::int64_t k = ctx.weight();
  const std::int64_t l = ctx.l();
  const FourthRoot psi_one_inv = psi(ctx, 1, 1).inverse();

  GaussianRational first;
  GaussianRational second;
  for (auto a : ctx.coprime_divisors()) {
    const int chi = kronecker_pi(ctx, a);
    if (chi == 0) continue;
    const GaussianRational ratio(psi(ctx, a, 1) * psi_one_inv);
    Rational inner = 0;
    for (auto t : divisors_of(std::gcd(a, l / a))) inner += make_rational(moebius(t), t);
    first += GaussianRational(chi * int_power(a, k - 1) * inner) * ratio;

    if (a > 1 && (l / a) % a == 0) {
      const int mu = moebius(a);
      if (mu == 0) continue;
      const Integer smaller = closed_coefficient_recursive(ctx.with_index(l / (a * a)), EntryPolicy::allow_unverified);
      second += GaussianRational(chi * mu * int_power(a, k - 2) * Rational(smaller)) * ratio;
    }
  }
  const GaussianRational value = GaussianRational(Rational(-ctx.entry().exponent(1))) * first - second;
  if (value.im != 0 || !is_integer(value.re)) {
    throw std::logic_error("recursive coefficient is not an integer: " + value.to_string());
  }
  return value.re.get_num();
}

GaussianRational scaled_transform_simplified(const HeckeContext& ctx, const Rational& n, const QSeries& f) {
  require_b_independence(ctx);
  const Integer shift = lattice_shift(ctx, n);
  const std::int64_t l = ctx.l();
  GaussianRational sum;
  for (auto a : ctx.coprime_divisors()) {
    const int chi = kronecker_pi(ctx, a);
    if (chi == 0) continue;
    const std::int64_t d = l / a;
    const Rational inner = mobius_inner_sum(a, d, shift);
    if (inner == 0) continue;
    const Integer c = f.coefficient(Rational(l) * n / Rational(a * a));
    if (c == 0) continue;
    const Rational scalar = chi * int_power(a, ctx.weight() - 1) * Rational(c) * inner;
    sum += GaussianRational(scalar) * GaussianRational(psi(ctx, a, 1));
  }
  return sum;
}

GaussianRational scaled_transform_special(const HeckeContext& ctx, const Rational& n, const QSeries& f) {
  require_b_independence(ctx);
  const Integer shift = lattice_shift(ctx, n);
  const std::int64_t l = ctx.l();
  const Integer rad = rad_common(shift, l);
  if (mpz_divisible_ui_p(Integer(ctx.entry().level()).get_mpz_t(), rad.get_ui()) == 0) {
    throw FormulaNotApplicable("rad(n - l x_N/24, l) = " + rad.get_str() + " does not divide N");
  }
  GaussianRational sum;
  for (auto a : ctx.coprime_divisors()) {
    if ((l / a) % a != 0) continue;
    const int coeff = kronecker_pi(ctx, a) * moebius(a);
    if (coeff == 0) continue;
    const Integer c = f.coefficient(Rational(l) * n / Rational(a * a));
    if (c == 0) continue;
    const Rational scalar = coeff * int_power(a, ctx.weight() - 2) * Rational(c);
    sum += GaussianRational(scalar) * GaussianRational(psi(ctx, a, 1));
  }
  return sum;
}

std::complex<double> transform_general(const HeckeContext& ctx, const Rational& n, const QSeries& f) {
  require_positive_weight(ctx);
  lattice_shift(ctx, n);
  const std::int64_t l = ctx.l();
  const std::int64_t N = ctx.entry().level();
  const Rational s = n / Rational(l) - make_rational(ctx.invariants().x_n, 24);

  std::complex<double> total = 0.0;
  for (auto a : ctx.coprime_divisors()) {
    const int chi = kronecker_pi(ctx, a);
    if (chi == 0) continue;
    const Integer c = f.coefficient(Rational(l) * n / Rational(a * a));
    if (c == 0) continue;
    const std::int64_t d = l / a;
    const std::int64_t g = std::gcd(a, d);

    std::complex<double> b_sum = 0.0;
    for (std::int64_t b = 0; b < d; ++b) {
      if (std::gcd(g, b) != 1) continue;
      // (-Nb / g)^{2k}: zero stays zero, +-1 becomes 1 for k >= 1.
      if (kronecker(Integer(-N) * b, g) == 0) continue;
      const double phase = fractional_part(Rational(b * d) * s).get_d();
      const std::complex<double> root = std::polar(1.0, 2.0 * std::numbers::pi * phase);
      b_sum += root * psi(ctx, a, b).to_complex();
    }
    const double scalar = Rational(chi * int_power(a, ctx.weight()) * Rational(c)).get_d();
    total += scalar * b_sum;
  }
  return total / static_cast<double>(l);
}

}  // namespace etaq
