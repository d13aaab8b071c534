#include "etaq/hecke.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "etaq/errors.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/table.hpp"
#include "oracles.hpp"

namespace etaq {
namespace {

const EtaQuotient kLevel3 = EtaQuotient::parse(3, "1^{3}3^{-1}");
const EtaQuotient kTwoSquares = EtaQuotient::parse(4, "1^{-4}2^{10}4^{-4}");
const EtaQuotient kLevel2 = EtaQuotient::parse(2, "1^{4}2^{-2}");
const EtaQuotient kLevel10 = EtaQuotient::parse(10, "1^{2}2^{-1}5^{2}10^{-1}");
const EtaQuotient kCarlitz = EtaQuotient::parse(3, "1^{9}3^{-3}");

TEST(FourthRoot, Arithmetic) {
  const FourthRoot i(1);
  EXPECT_EQ(i * i, FourthRoot(2));
  EXPECT_EQ(i * i * i * i, FourthRoot(0));
  EXPECT_EQ(FourthRoot(-1), FourthRoot(3));
  EXPECT_EQ(i * i.inverse(), FourthRoot());
  EXPECT_EQ(GaussianRational(i) * GaussianRational(i), GaussianRational(Rational(-1)));
  EXPECT_TRUE(FourthRoot(2).is_real());
  EXPECT_FALSE(FourthRoot(3).is_real());
}

TEST(HeckeContext, RejectsInadmissibleIndex) {
  try {
    HeckeContext(kLevel3, 2);
    FAIL() << "expected InadmissibleIndex";
  } catch (const InadmissibleIndex& ex) {
    EXPECT_EQ(ex.m_r(), 3);
    EXPECT_EQ(ex.l(), 2);
  }
  EXPECT_THROW(HeckeContext(kLevel3, 0), std::domain_error);
  EXPECT_THROW(HeckeContext(EtaQuotient::parse(1, "1^{1}"), 1), std::domain_error);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_sign(HeckeContext(kLevel3, 7), 1), 1);
  EXPECT_EQ(epsilon_sign(HeckeContext(kTwoSquares, 5), 3), -1);
  EXPECT_EQ(epsilon_sign(HeckeContext(kLevel3, 4), 2), 1);
  EXPECT_THROW(epsilon_sign(HeckeContext(kLevel3, 4), 3), std::invalid_argument);
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(HeckeContext(kLevel3, 1), 1, 1), FourthRoot(0));
  EXPECT_EQ(psi(HeckeContext(kLevel3, 7), 1, 1), FourthRoot(0));
  EXPECT_EQ(psi(HeckeContext(kTwoSquares, 2), 1, 0), FourthRoot(0));
  EXPECT_THROW(psi(HeckeContext(kLevel3, 7), 2, 1), std::invalid_argument);
}

TEST(ClosedCoefficient, Examples) {
  EXPECT_EQ(closed_coefficient(HeckeContext(kLevel3, 4)), -3);
  EXPECT_EQ(closed_coefficient(HeckeContext(kTwoSquares, 9)), 4);
  EXPECT_EQ(closed_coefficient(HeckeContext(kLevel10, 1)), -2);
}

TEST(ClosedCoefficient, CatalogGate) {
  EXPECT_THROW(closed_coefficient(HeckeContext(kCarlitz, 5)), NotInCatalog);
  EXPECT_NO_THROW(closed_coefficient(HeckeContext(kCarlitz, 5), EntryPolicy::allow_unverified));
}

TEST(ClosedCoefficient, LevelTenWorkedExample) {
  // -2 sum_{a | l, (a,10)=1} (a/5) (-1)^{(a-1)/2} for l = 1 mod 4
  const QSeries f = eta_quotient_expansion(kLevel10, 400);
  for (std::int64_t l = 1; l < 400; l += 4) {
    const mpz_class expected = -2 * oracle::divisor_sum(
                                   l, [](std::int64_t a) { return oracle::gcd_naive(a, 10) == 1; },
                                   [](std::int64_t a) { return oracle::legendre_euler(a, 5) * ((a % 4 == 1) ? 1 : -1); });
    ASSERT_EQ(closed_coefficient(HeckeContext(kLevel10, l)), expected) << l;
    ASSERT_EQ(f[static_cast<std::size_t>(l)], expected) << l;
  }
}

TEST(ClosedCoefficientRecursive, Examples) {
  EXPECT_EQ(closed_coefficient_recursive(HeckeContext(kTwoSquares, 25)), 12);
  const QSeries f = eta_quotient_expansion(kLevel2, 10);
  EXPECT_EQ(closed_coefficient_recursive(HeckeContext(kLevel2, 9)), f[9]);
  // l squarefree and prime to N: no recursive terms.
  EXPECT_EQ(closed_coefficient_recursive(HeckeContext(kLevel3, 7)), closed_coefficient(HeckeContext(kLevel3, 7)));
}

TEST(ScaledTransform, EigenvalueAtZero) {
  const QSeries f3 = eta_quotient_expansion(kLevel3, 60);
  EXPECT_EQ(scaled_transform_simplified(HeckeContext(kLevel3, 4), 0, f3), GaussianRational(Rational(3, 2)));
  EXPECT_EQ(scaled_transform_simplified(HeckeContext(kLevel3, 7), 0, f3), GaussianRational(Rational(2)));
  const QSeries f2 = eta_quotient_expansion(kLevel2, 60);
  EXPECT_EQ(scaled_transform_simplified(HeckeContext(kLevel2, 9), 0, f2), GaussianRational(Rational(4, 3)));
}

TEST(ScaledTransform, EigenRelationAtOne) {
  const QSeries f = eta_quotient_expansion(kLevel3, 60);
  const HeckeContext ctx(kLevel3, 4);
  EXPECT_EQ(scaled_transform_simplified(ctx, 1, f),
            scaled_transform_simplified(ctx, 0, f) * GaussianRational(Rational(f[1])));
  EXPECT_EQ(scaled_transform_simplified(ctx, 1, f), GaussianRational(Rational(-9, 2)));
}

TEST(ScaledTransform, IndexOneIsIdentity) {
  const QSeries f = eta_quotient_expansion(kTwoSquares, 40);
  const HeckeContext ctx(kTwoSquares, 1);
  for (std::int64_t n = 0; n < 40; ++n) {
    ASSERT_EQ(scaled_transform_simplified(ctx, n, f), GaussianRational(Rational(f[static_cast<std::size_t>(n)])));
    const auto g = transform_general(ctx, n, f);
    ASSERT_EQ(g.real(), f[static_cast<std::size_t>(n)].get_d());
    ASSERT_EQ(g.imag(), 0.0);
  }
}

TEST(ScaledTransform, PrecisionShortfallIsAnError) {
  const QSeries f = eta_quotient_expansion(kLevel3, 20);
  const HeckeContext ctx(kLevel3, 7);
  EXPECT_NO_THROW(scaled_transform_simplified(ctx, 2, f));
  EXPECT_THROW(scaled_transform_simplified(ctx, 3, f), InsufficientPrecision);
  EXPECT_THROW(transform_general(ctx, 3, f), InsufficientPrecision);
}

TEST(ScaledTransform, RejectsOffLatticeArgument) {
  const QSeries f = eta_quotient_expansion(kLevel3, 20);
  EXPECT_THROW(scaled_transform_simplified(HeckeContext(kLevel3, 4), Rational(1, 2), f), std::invalid_argument);
}

TEST(SpecialTransform, SquarefreeIndex) {
  const QSeries f = eta_quotient_expansion(kLevel3, 200);
  for (std::int64_t l : {7, 13, 19}) {
    const HeckeContext ctx(kLevel3, l);
    for (std::int64_t n = 1; l * n < 200; ++n) {
      if (rad_common(n, l) != 1) continue;
      const GaussianRational expected =
          GaussianRational(psi(ctx, 1, 1)) * GaussianRational(Rational(f[static_cast<std::size_t>(l * n)]));
      ASSERT_EQ(scaled_transform_special(ctx, n, f), expected);
      ASSERT_EQ(scaled_transform_special(ctx, n, f), scaled_transform_simplified(ctx, n, f));
    }
  }
}

TEST(SpecialTransform, LevelTwoIndexNine) {
  const QSeries f = eta_quotient_expansion(kLevel2, 100);
  const HeckeContext ctx(kLevel2, 9);
  // rad(0, 9) = 3 does not divide 2.
  EXPECT_THROW(scaled_transform_special(ctx, 0, f), FormulaNotApplicable);
  for (std::int64_t n : {1, 2, 4, 5, 7, 8, 10}) {
    EXPECT_EQ(scaled_transform_special(ctx, n, f), scaled_transform_simplified(ctx, n, f)) << n;
  }
}

TEST(GeneralTransform, MatchesSimplified) {
  const QSeries f = eta_quotient_expansion(kLevel3, 100);
  const HeckeContext ctx(kLevel3, 7);
  for (std::int64_t n = 0; n <= 14; ++n) {
    const auto exact = scaled_transform_simplified(ctx, n, f).to_complex();
    const auto approx = transform_general(ctx, n, f);
    EXPECT_LE(std::abs(approx - exact), 1e-9 * std::max(1.0, std::abs(exact))) << n;
  }
}

TEST(TableProperties, EpsilonIsPsiRatio) {
  for (const auto& row : load_table()) {
    for (std::int64_t l = 1; l <= 120; l += row.m_r) {
      const HeckeContext ctx(row.entry, l);
      const FourthRoot base = psi(ctx, 1, 1);
      for (auto a : ctx.coprime_divisors()) {
        const FourthRoot ratio = psi(ctx, a, 1) * base.inverse();
        ASSERT_TRUE(ratio.is_real());
        ASSERT_EQ(ratio == FourthRoot(0) ? 1 : -1, epsilon_sign(ctx, a)) << row.entry.to_string() << " l=" << l << " a=" << a;
      }
    }
  }
}

TEST(TableProperties, PsiIdentityUnderSufficientConditions) {
  for (const auto& row : load_table()) {
    const std::int64_t N = row.entry.level();
    for (std::int64_t l = 1; l <= 400; l += row.m_r) {
      const HeckeContext ctx(row.entry, l);
      const bool covered = l % 2 == 1 || N % 2 == 0 || l % 4 == 2 || (row.k + row.delta) % 2 == 0;
      if (!covered) continue;
      const FourthRoot base_inv = psi(ctx, 1, 1).inverse();
      for (auto a1 : ctx.coprime_divisors()) {
        if ((l / a1) % a1 != 0) continue;
        const HeckeContext reduced = ctx.with_index(l / (a1 * a1));
        const FourthRoot reduced_inv = psi(reduced, 1, 1).inverse();
        for (auto a2 : reduced.coprime_divisors()) {
          const FourthRoot lhs = psi(ctx, a1, 1) * psi(reduced, a2, 1) * base_inv * reduced_inv;
          const FourthRoot rhs = psi(ctx, a1 * a2, 1) * base_inv;
          ASSERT_EQ(lhs, rhs) << row.entry.to_string() << " l=" << l << " a1=" << a1 << " a2=" << a2;
        }
      }
    }
  }
}

TEST(TableProperties, KroneckerAgainstSquarefreePart) {
  for (const auto& row : load_table()) {
    const auto inv = derive(row.entry);
    for (std::int64_t a = 1; a < 300; ++a) {
      if (oracle::gcd_naive(a, row.entry.level()) != 1) continue;
      ASSERT_EQ(kronecker(a, inv.pi), kronecker(a, inv.pi_sf)) << row.entry.to_string() << " a=" << a;
    }
  }
}

TEST(TableProperties, RecursiveMatchesClosed) {
  for (const auto& row : load_table()) {
    for (std::int64_t l = 1; l <= 200; l += row.m_r) {
      const HeckeContext ctx(row.entry, l);
      ASSERT_EQ(closed_coefficient_recursive(ctx), closed_coefficient(ctx)) << row.entry.to_string() << " l=" << l;
    }
  }
}

TEST(Fixtures, CarlitzSmallRange) {
  const QSeries f = eta_quotient_expansion(kCarlitz, 120);
  for (std::int64_t l = 1; l < 120; ++l) {
    const mpz_class expected = -9 * oracle::divisor_sum(
                                   l, [](std::int64_t a) { return a % 3 != 0; },
                                   [](std::int64_t a) { return mpz_class(oracle::legendre_euler(a, 3) * a * a); });
    ASSERT_EQ(f[static_cast<std::size_t>(l)], expected) << l;
    ASSERT_EQ(closed_coefficient(HeckeContext(kCarlitz, l), EntryPolicy::allow_unverified), expected) << l;
  }
}

TEST(Fixtures, VanishingViaLevelSix) {
  const QSeries f = eta_quotient_expansion(kLevel3, 120);
  const EtaQuotient doubled = EtaQuotient::parse(6, "1^{0}2^{3}3^{0}6^{-1}");
  for (std::int64_t l = 2; l < 120; l += 3) {
    ASSERT_EQ(f[static_cast<std::size_t>(l)], 0) << l;
    ASSERT_EQ(closed_coefficient(HeckeContext(doubled, 2 * l)), 0) << l;
  }
}

}  // namespace
}  // namespace etaq
