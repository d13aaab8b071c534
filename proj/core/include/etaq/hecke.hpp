#pragma once

// Coefficient action of Wohlfahrt's extension T_l of the Hecke operators on
// eta-quotients with l = 1 mod m_r, and the closed coefficient formula it
// yields for one-dimensional spaces.
//
// The transform values carry the factor l^{1-k/2}, irrational for odd k. All
// exact routes here return l^{k/2-1} c_{T_l f}(n), which is Gaussian-rational.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/integer.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

/// i^quarter_turns.
class FourthRoot {
 public:
  constexpr FourthRoot() = default;
  constexpr explicit FourthRoot(std::int64_t quarter_turns) : turns_(static_cast<int>(((quarter_turns % 4) + 4) % 4)) {}

  constexpr int quarter_turns() const { return turns_; }
  constexpr FourthRoot operator*(FourthRoot o) const { return FourthRoot(turns_ + o.turns_); }
  constexpr FourthRoot inverse() const { return FourthRoot(-turns_); }
  constexpr bool is_real() const { return turns_ % 2 == 0; }
  std::complex<double> to_complex() const;

  friend constexpr bool operator==(FourthRoot, FourthRoot) = default;

 private:
  int turns_ = 0;
};

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
  explicit GaussianRational(FourthRoot w);

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;
};

/// l is not 1 mod m_r.
class InadmissibleIndex : public std::invalid_argument {
 public:
  InadmissibleIndex(std::int64_t l, int m_r);
  std::int64_t l() const { return l_; }
  int m_r() const { return m_r_; }

 private:
  std::int64_t l_;
  int m_r_;
};

/// The closed formula was requested for an eta-quotient outside the table.
class NotInCatalog : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EntryPolicy { catalog_only, allow_unverified };

/// An integral-weight eta-quotient together with an index l = 1 mod m_r.
class HeckeContext {
 public:
  /// Throws std::domain_error for non-integral weight or l < 1, and
  /// InadmissibleIndex when l is not 1 mod m_r.
  HeckeContext(EtaQuotient entry, std::int64_t l);
  HeckeContext(EtaQuotient entry, DerivedInvariants inv, std::int64_t l);

  const EtaQuotient& entry() const { return entry_; }
  const DerivedInvariants& invariants() const { return inv_; }
  std::int64_t l() const { return l_; }
  std::int64_t weight() const { return weight_; }
  std::int64_t k_plus_delta() const { return weight_ + inv_.delta; }

  /// Divisors a of l with gcd(a, N) = 1, increasing.
  const std::vector<std::int64_t>& coprime_divisors() const { return coprime_divisors_; }

  /// The same eta-quotient at a different index.
  HeckeContext with_index(std::int64_t l) const { return HeckeContext(entry_, inv_, l); }

 private:
  EtaQuotient entry_;
  DerivedInvariants inv_;
  std::int64_t l_;
  std::int64_t weight_;
  std::vector<std::int64_t> coprime_divisors_;
};

/// The sign epsilon_{l,a}: 1 when l is even and N odd, else (-1)^{(k+delta)(a-1)/2}.
int epsilon_sign(const HeckeContext& ctx, std::int64_t a);

/// psi_{l,r}(a, b) for a | l, gcd(a, N) = 1.
FourthRoot psi(const HeckeContext& ctx, std::int64_t a, std::int64_t b);

/// c_f(l) = -r_1 sum_{a | l, (a,N)=1} (a/Pi) a^{k-1} epsilon_{l,a}.
Integer closed_coefficient(const HeckeContext& ctx, EntryPolicy policy = EntryPolicy::catalog_only);

/// The same value computed by recursing on c_f(l/a^2) for a^2 | l.
Integer closed_coefficient_recursive(const HeckeContext& ctx, EntryPolicy policy = EntryPolicy::catalog_only);

/// l^{k/2-1} c_{T_l f}(n) with the sum over b worked out:
/// sum_{a | l, (a,N)=1} (a/Pi) a^{k-1} psi(a,1) c_f(ln/a^2) sum_{t | (a,d), (a/t) | n - l x_N/24} mu(t)/t.
/// `f` supplies c_f; exponents it cannot serve raise InsufficientPrecision.
/// Throws FormulaNotApplicable when psi depends on b.
GaussianRational scaled_transform_simplified(const HeckeContext& ctx, const Rational& n, const QSeries& f);

/// Same scale as scaled_transform_simplified, valid when rad(n - l x_N/24, l) | N:
/// sum_{a^2 | l, (a,N)=1} (a/Pi) mu(a) a^{k-2} psi(a,1) c_f(ln/a^2).
GaussianRational scaled_transform_special(const HeckeContext& ctx, const Rational& n, const QSeries& f);

/// Floating-point evaluation of the full double sum over (a, b), returned at
/// the scale of scaled_transform_simplified. Needs k >= 1.
std::complex<double> transform_general(const HeckeContext& ctx, const Rational& n, const QSeries& f);

}  // namespace etaq
