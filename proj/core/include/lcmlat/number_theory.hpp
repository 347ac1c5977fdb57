#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace lcmlat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

inline constexpr std::uint64_t kDefaultTrialLimit = 10'000'000;

/// Factors n >= 1 by trial division up to trial_limit. Throws
/// kFactoringTooHard if a cofactor above trial_limit^2 remains that is not a
/// probable prime, kNonPositive for n < 1.
Factorization factorize(const BigInt& n, std::uint64_t trial_limit = kDefaultTrialLimit);

/// All positive divisors of the factored number, increasing.
std::vector<BigInt> divisors(const Factorization& f);
std::vector<BigInt> divisors(const BigInt& n);

/// Number-theoretic Möbius function.
int mobius_mu(const Factorization& f);
int mobius_mu(const BigInt& n);

/// Euler's totient.
BigInt euler_phi(const BigInt& n);

bool is_probable_prime(const BigInt& n);

/// The first count primes, and the first count odd primes.
std::vector<BigInt> first_primes(std::size_t count);
std::vector<BigInt> first_odd_primes(std::size_t count);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// b^e for e >= 0.
BigInt pow(const BigInt& b, unsigned long e);

}  // namespace lcmlat
