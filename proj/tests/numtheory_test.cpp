#include "etaq/numtheory.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace etaq {
namespace {

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(1, 1), 1);
  EXPECT_EQ(kronecker(2, 15), 1);
  EXPECT_EQ(kronecker(-4, 2), 0);
  EXPECT_EQ(kronecker(3, 5), -1);
}

TEST(Kronecker, ZeroAndNegativeDenominators) {
  EXPECT_EQ(kronecker(1, 0), 1);
  EXPECT_EQ(kronecker(-1, 0), 1);
  EXPECT_EQ(kronecker(2, 0), 0);
  EXPECT_EQ(kronecker(5, -1), 1);
  EXPECT_EQ(kronecker(-5, -1), -1);
  EXPECT_EQ(kronecker(0, 1), 1);
  EXPECT_EQ(kronecker(0, 3), 0);
  // (a/2) by a mod 8
  EXPECT_EQ(kronecker(1, 2), 1);
  EXPECT_EQ(kronecker(7, 2), 1);
  EXPECT_EQ(kronecker(3, 2), -1);
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(-1, 2), 1);
}

TEST(Kronecker, AgreesWithEulerCriterion) {
  for (std::int64_t p = 3; p < 100; p += 2) {
    if (!oracle::is_prime_naive(p)) continue;
    for (std::int64_t a = -99; a < 100; ++a) {
      ASSERT_EQ(kronecker(a, p), oracle::legendre_euler(a, p)) << a << "/" << p;
    }
  }
}

TEST(Kronecker, CompletelyMultiplicative) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> num(-500, 500);
  std::uniform_int_distribution<std::int64_t> den(1, 500);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto a1 = num(rng), a2 = num(rng), b = den(rng), b2 = den(rng);
    ASSERT_EQ(kronecker(a1 * a2, b), kronecker(a1, b) * kronecker(a2, b)) << a1 << " " << a2 << " " << b;
    ASSERT_EQ(kronecker(a1, b * b2), kronecker(a1, b) * kronecker(a1, b2)) << a1 << " " << b << " " << b2;
  }
}

TEST(Kronecker, LargeDenominator) {
  Integer pi;
  mpz_ui_pow_ui(pi.get_mpz_t(), 2, 29);
  // (a/2^29) = (a/2)^29 = (a/2)
  EXPECT_EQ(kronecker(3, pi), -1);
  EXPECT_EQ(kronecker(7, pi), 1);
}

TEST(Moebius, Examples) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_THROW(moebius(0), std::domain_error);
  EXPECT_THROW(moebius(-3), std::domain_error);
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(6), 2);
  EXPECT_EQ(euler_phi(9), 6);
  EXPECT_THROW(euler_phi(0), std::domain_error);
}

TEST(EulerPhi, MatchesDirectCount) {
  for (std::int64_t n = 1; n <= 300; ++n) ASSERT_EQ(euler_phi(n), oracle::phi_by_count(n)) << n;
}

TEST(DivisorSums, PhiAndMoebiusIdentities) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    Integer phi_sum = 0;
    int mu_sum = 0;
    for (const auto& d : divisors(n)) {
      phi_sum += euler_phi(d);
      mu_sum += moebius(d);
    }
    ASSERT_EQ(phi_sum, n);
    ASSERT_EQ(mu_sum, n == 1 ? 1 : 0) << n;
  }
}

TEST(RadCommon, Examples) {
  EXPECT_EQ(rad_common(12, 18), 6);
  EXPECT_EQ(rad_common(5, 7), 1);
  EXPECT_EQ(rad_common(8, 4), 2);
  EXPECT_EQ(rad_common(0, 9), 3);
  EXPECT_THROW(rad_common(0, 0), std::domain_error);
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(squarefree_part(1), 1);
  Integer two18;
  mpz_ui_pow_ui(two18.get_mpz_t(), 2, 18);
  EXPECT_EQ(squarefree_part(two18), 1);
  EXPECT_EQ(squarefree_part(27), 3);
  EXPECT_THROW(squarefree_part(0), std::domain_error);
}

TEST(SquarefreePart, TimesSquareGivesN) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const Integer d = squarefree_part(n);
    ASSERT_EQ(n % d.get_si(), 0);
    ASSERT_NE(mpz_perfect_square_p(Integer(n / d.get_si()).get_mpz_t()), 0) << n;
    ASSERT_NE(moebius(d), 0) << n;
  }
}

TEST(V2, Examples) {
  EXPECT_EQ(v2(1), 0u);
  EXPECT_EQ(v2(48), 4u);
  EXPECT_EQ(v2(-6), 1u);
  EXPECT_THROW(v2(0), std::domain_error);
}

TEST(Divisors, Examples) {
  auto as_ints = [](const std::vector<Integer>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
  };
  EXPECT_EQ(as_ints(divisors(1)), (std::vector<long>{1}));
  EXPECT_EQ(as_ints(divisors(12)), (std::vector<long>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(as_ints(divisors(32)), (std::vector<long>{1, 2, 4, 8, 16, 32}));
  EXPECT_THROW(divisors(0), std::domain_error);
}

}  // namespace
}  // namespace etaq
