#include "etaq/eta_quotient.hpp"

#include <gtest/gtest.h>

#include <random>

#include "etaq/errors.hpp"
#include "etaq/table.hpp"

namespace etaq {
namespace {

TEST(EtaQuotient, ParseAndPrint) {
  const auto e = EtaQuotient::parse(6, "1^{0}2^{3}3^{0}6^{-1}");
  EXPECT_EQ(e.level(), 6);
  EXPECT_EQ(e.exponent(2), 3);
  EXPECT_EQ(e.exponent(6), -1);
  EXPECT_EQ(e.exponent(5), 0);
  EXPECT_EQ(e.to_string(), "1^{0}2^{3}3^{0}6^{-1}");
  EXPECT_EQ(EtaQuotient::parse(6, "2^{3}6^{-1}").to_string(), "1^{0}2^{3}3^{0}6^{-1}");
}

TEST(EtaQuotient, ParseRejectsMalformed) {
  EXPECT_THROW(EtaQuotient::parse(4, ""), ParseError);
  EXPECT_THROW(EtaQuotient::parse(4, "1^{2"), ParseError);
  EXPECT_THROW(EtaQuotient::parse(4, "1^{x}"), ParseError);
  EXPECT_THROW(EtaQuotient::parse(4, "3^{1}"), ParseError);
  EXPECT_THROW(EtaQuotient::parse(4, "2^{1}1^{1}"), ParseError);
  EXPECT_THROW(EtaQuotient::parse(4, "1^{1} 2^{1}"), ParseError);
  EXPECT_THROW(EtaQuotient::parse(0, "1^{1}"), std::invalid_argument);
}

TEST(EtaQuotient, ConstructorValidates) {
  EXPECT_THROW(EtaQuotient(4, std::map<std::int64_t, std::int64_t>{{3, 1}}), std::invalid_argument);
  EXPECT_THROW(EtaQuotient(4, std::vector<std::int64_t>{1, 2}), std::invalid_argument);
}

TEST(Derive, TwoSquaresRow) {
  const auto inv = derive(EtaQuotient::parse(4, "1^{-4}2^{10}4^{-4}"));
  EXPECT_EQ(inv.k, 1);
  Integer two18;
  mpz_ui_pow_ui(two18.get_mpz_t(), 2, 18);
  EXPECT_EQ(inv.pi, two18);
  EXPECT_EQ(inv.pi_sf, 1);
  EXPECT_EQ(inv.m_r, 1);
  EXPECT_EQ(inv.delta, 0);
  EXPECT_EQ(inv.x_n, 0);
}

TEST(Derive, LevelThreeRow) {
  const auto inv = derive(EtaQuotient::parse(3, "1^{3}3^{-1}"));
  EXPECT_EQ(inv.k, 1);
  EXPECT_EQ(inv.pi, 27);
  EXPECT_EQ(inv.pi_sf, 3);
  EXPECT_EQ(inv.m_r, 3);
  EXPECT_EQ(inv.delta, 1);
  EXPECT_EQ(inv.x_n, 0);
}

TEST(Derive, CuspValues) {
  const auto inv = derive(EtaQuotient::parse(2, "1^{4}2^{-2}"));
  EXPECT_EQ(inv.x_c.at(1), 6);
  EXPECT_EQ(inv.x_c.at(2), 0);
}

TEST(Derive, ScalingDoublesWeightAndSquaresPi) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> ex(-8, 8);
  for (std::int64_t N : {2, 6, 8, 12, 20}) {
    const auto divs = divisors_of(N);
    std::vector<std::int64_t> r(divs.size());
    for (auto& x : r) x = ex(rng);
    const EtaQuotient e(N, r);
    const auto a = derive(e);
    const auto b = derive(e + e);
    EXPECT_EQ(b.k, 2 * a.k);
    EXPECT_EQ(b.x_n, 2 * a.x_n);
    EXPECT_EQ(b.pi, a.pi * a.pi);
  }
}

TEST(Derive, XNIsCuspValueAtN) {
  for (const auto& row : load_table()) {
    const auto inv = derive(row.entry);
    EXPECT_EQ(inv.x_c.at(row.entry.level()), inv.x_n) << row.entry.to_string();
  }
}

TEST(Predicates, IntegralWeight) {
  EXPECT_TRUE(is_integral_weight(EtaQuotient::parse(2, "1^{4}2^{-2}")));
  EXPECT_FALSE(is_integral_weight(EtaQuotient::parse(1, "1^{1}")));
  EXPECT_TRUE(is_integral_weight(EtaQuotient::parse(1, "1^{24}")));
}

TEST(Predicates, Holomorphic) {
  EXPECT_TRUE(is_holomorphic(EtaQuotient::parse(4, "1^{-4}2^{10}4^{-4}")));
  EXPECT_FALSE(is_holomorphic(EtaQuotient::parse(1, "1^{-24}")));
  EXPECT_TRUE(is_holomorphic(EtaQuotient::parse(2, "1^{4}2^{-2}")));
}

TEST(Predicates, VanishingOrder) {
  EXPECT_EQ(vanishing_order_at_infinity(EtaQuotient::parse(3, "1^{3}3^{-1}")), 0);
  EXPECT_EQ(vanishing_order_at_infinity(EtaQuotient::parse(1, "1^{24}")), 1);
  EXPECT_EQ(vanishing_order_at_infinity(EtaQuotient::parse(2, "1^{1}2^{1}")), Rational(1, 8));
}

TEST(Predicates, PsiIndependentOfB) {
  const auto two_squares = EtaQuotient::parse(4, "1^{-4}2^{10}4^{-4}");
  EXPECT_TRUE(psi_independent_of_b(two_squares, Parity::even));
  EXPECT_TRUE(psi_independent_of_b(two_squares, Parity::odd));
  // N = 2, k + delta = 1: N(k+delta) = 2 mod 4.
  const auto bad = EtaQuotient::parse(2, "1^{1}2^{1}");
  EXPECT_FALSE(psi_independent_of_b(bad, Parity::even));
  EXPECT_TRUE(psi_independent_of_b(bad, Parity::odd));
  EXPECT_THROW(psi_independent_of_b(EtaQuotient::parse(1, "1^{1}"), Parity::odd), std::domain_error);
}

TEST(Predicates, PsiMultiplicative) {
  EXPECT_TRUE(psi_multiplicative(EtaQuotient::parse(3, "1^{3}3^{-1}")));
  EXPECT_TRUE(psi_multiplicative(EtaQuotient::parse(9, "1^{0}3^{6}9^{-2}")));
  EXPECT_TRUE(psi_multiplicative(EtaQuotient::parse(2, "1^{4}2^{-2}")));
  // N = 3, k = 1, Pi = 3^2, delta = 0: k + delta odd.
  EXPECT_FALSE(psi_multiplicative(EtaQuotient::parse(3, "1^{2}3^{0}")));
}

TEST(Table, AllRowsSatisfyStructuralPredicates) {
  for (const auto& row : load_table()) {
    const auto& e = row.entry;
    SCOPED_TRACE(e.to_string());
    EXPECT_TRUE(is_integral_weight(e));
    EXPECT_TRUE(is_holomorphic(e));
    EXPECT_EQ(vanishing_order_at_infinity(e), 0);
    // Even l is admissible only when m_r is odd.
    if (row.m_r % 2 == 1) EXPECT_TRUE(psi_independent_of_b(e, Parity::even));
    EXPECT_TRUE(psi_independent_of_b(e, Parity::odd));
    EXPECT_TRUE(psi_multiplicative(e));
  }
}

}  // namespace
}  // namespace etaq
