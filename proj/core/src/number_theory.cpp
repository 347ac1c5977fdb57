#include "lcmlat/number_theory.hpp"

#include <algorithm>

#include "lcmlat/error.hpp"

namespace lcmlat {

Factorization factorize(const BigInt& n, std::uint64_t trial_limit) {
  if (n < 1) throw Error(ErrorCode::kNonPositive, "cannot factor " + n.get_str());
  Factorization out;
  BigInt rest = n;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (std::uint64_t k = 5; k <= trial_limit; k += 6) {
    const BigInt a(static_cast<unsigned long>(k));
    if (a * a > rest) break;
    strip(a);
    const BigInt b = a + 2;
    if (b * b > rest) break;
    strip(b);
  }
  if (rest > 1) {
    const BigInt limit(static_cast<unsigned long>(trial_limit));
    if (rest > limit * limit && !is_probable_prime(rest)) {
      throw Error(ErrorCode::kFactoringTooHard,
                  "cofactor " + rest.get_str() + " of " + n.get_str() +
                      " has no factor below the trial limit");
    }
    out.emplace_back(rest, 1);
  }
  return out;
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) { return divisors(factorize(n)); }

int mobius_mu(const Factorization& f) {
  for (const auto& pe : f) {
    if (pe.second > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

int mobius_mu(const BigInt& n) { return mobius_mu(factorize(n)); }

BigInt euler_phi(const BigInt& n) {
  BigInt out = n;
  for (const auto& pe : factorize(n)) out = out / pe.first * (pe.first - 1);
  return out;
}

bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<BigInt> first_primes(std::size_t count) {
  std::vector<BigInt> out;
  BigInt p = 2;
  while (out.size() < count) {
    out.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

std::vector<BigInt> first_odd_primes(std::size_t count) {
  auto out = first_primes(count + 1);
  out.erase(out.begin());
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace lcmlat
