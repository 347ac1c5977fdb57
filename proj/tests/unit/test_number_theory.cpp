#include <gtest/gtest.h>

#include "lcmlat/error.hpp"
#include "lcmlat/number_theory.hpp"
#include "oracles.hpp"

namespace lcmlat {
namespace {

TEST(NumberTheory, Factorize) {
  const Factorization f = factorize(BigInt("1020180525"));
  BigInt product = 1;
  for (const auto& [p, e] : f) {
    EXPECT_TRUE(is_probable_prime(p));
    product *= pow(p, e);
  }
  EXPECT_EQ(product, BigInt("1020180525"));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  EXPECT_EQ(factorize(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
}

TEST(NumberTheory, LargePrimeCofactorAccepted) {
  const BigInt p("1000000000000000003");
  ASSERT_TRUE(is_probable_prime(p));
  EXPECT_EQ(factorize(p * 6, 1000), (Factorization{{2, 1}, {3, 1}, {p, 1}}));
}

TEST(NumberTheory, HardCofactorRejected) {
  const BigInt p("1000000007");
  const BigInt q("1000000009");
  try {
    factorize(p * q, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFactoringTooHard);
  }
  EXPECT_THROW(factorize(0), Error);
}

TEST(NumberTheory, DivisorsAndMobius) {
  EXPECT_EQ(divisors(BigInt(12)), (std::vector<BigInt>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(mobius_mu(BigInt(1)), 1);
  EXPECT_EQ(mobius_mu(BigInt(30)), -1);
  EXPECT_EQ(mobius_mu(BigInt(45)), 0);
  EXPECT_EQ(mobius_mu(BigInt(15)), 1);
}

TEST(NumberTheory, PhiMatchesCounting) {
  for (unsigned long n = 1; n <= 200; ++n) {
    EXPECT_EQ(euler_phi(BigInt(n)), BigInt(oracle::phi_by_count(n))) << n;
  }
}

TEST(NumberTheory, Primes) {
  EXPECT_EQ(first_primes(5), (std::vector<BigInt>{2, 3, 5, 7, 11}));
  EXPECT_EQ(first_odd_primes(3), (std::vector<BigInt>{3, 5, 7}));
  EXPECT_EQ(gcd(BigInt(12), BigInt(18)), 6);
  EXPECT_EQ(lcm(BigInt(12), BigInt(18)), 36);
}

}  // namespace
}  // namespace lcmlat
