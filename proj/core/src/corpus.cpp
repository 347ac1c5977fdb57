#include "lcmlat/corpus.hpp"

#include <algorithm>

#include "lcmlat/enumeration.hpp"
#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

constexpr int kMaxAttempts = 1000;

}  // namespace

Corpus::Corpus(std::uint64_t seed, CorpusOptions options)
    : rng_(seed), options_(options) {
  if (options_.min_size < 1 || options_.min_size > options_.max_size ||
      options_.max_size > 8) {
    throw Error(ErrorCode::kInvalidArgument, "corpus sizes must satisfy 1 <= min <= max <= 8");
  }
}

const std::vector<Poset>& Corpus::structures(std::size_t n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) {
    it = cache_.emplace(n, enumerate_meet_semilattices(n, EnumerationOptions{1})).first;
  }
  return it->second;
}

std::vector<BigInt> Corpus::random_primes(std::size_t count, bool odd, unsigned below) {
  std::vector<BigInt> pool;
  for (BigInt p = odd ? 3 : 2; p < below; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    pool.push_back(p);
  }
  if (pool.size() < count) {
    throw Error(ErrorCode::kBadPrimes, "not enough primes below " + std::to_string(below));
  }
  std::shuffle(pool.begin(), pool.end(), rng_);
  pool.resize(count);
  return pool;
}

Realization Corpus::random_realization(const Poset& l, bool odd, unsigned max_inflations) {
  Realization r = realize_squarefree(l, random_primes(l.size() - 1, odd, 100));
  if (l.size() < 2) return r;
  std::uniform_int_distribution<unsigned> count(0, max_inflations);
  std::uniform_int_distribution<std::size_t> element(1, l.size() - 1);
  std::uniform_int_distribution<unsigned> power(1, 3);
  for (unsigned t = count(rng_); t > 0; --t) {
    r = inflate_realization(r, r.base_index[element(rng_)], power(rng_));
  }
  return r;
}

GcdClosedSet Corpus::next_gcd_closed() {
  std::uniform_int_distribution<std::size_t> size(options_.min_size, options_.max_size);
  std::bernoulli_distribution inflate(options_.inflate_probability);
  std::bernoulli_distribution scale(options_.scale_probability);
  const BigInt bound(static_cast<unsigned long>(options_.max_element));

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t n = size(rng_);
    const auto& pool = structures(n);
    const Poset& l = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng_)];
    // Small primes keep large structures under the element bound.
    const unsigned below = n <= 4 ? 60 : 32;
    Realization r = realize_squarefree(l, random_primes(n - 1, options_.odd, below));
    if (n > 1 && inflate(rng_)) {
      std::uniform_int_distribution<std::size_t> element(1, n - 1);
      r = inflate_realization(r, r.base_index[element(rng_)],
                              std::uniform_int_distribution<unsigned>(1, 2)(rng_));
    }
    std::vector<BigInt> values = r.base.elements();
    if (scale(rng_)) {
      std::uniform_int_distribution<unsigned> factor(2, 30);
      unsigned c = factor(rng_);
      if (options_.odd) c |= 1U;
      for (auto& v : values) v *= c;
    }
    if (options_.max_element != 0 && values.back() > bound) continue;
    return GcdClosedSet::from_elements(std::move(values));
  }
  throw Error(ErrorCode::kInvalidArgument, "could not sample a set under the element bound");
}

GcdClosedSet Corpus::next_factor_closed(unsigned max_root) {
  std::uniform_int_distribution<unsigned> count(1, 3);
  std::uniform_int_distribution<unsigned> root(1, std::max(1U, max_root));
  std::vector<BigInt> values;
  for (unsigned t = count(rng_); t > 0; --t) {
    for (auto& d : divisors(BigInt(root(rng_)))) values.push_back(std::move(d));
  }
  return GcdClosedSet::from_elements(std::move(values));
}

}  // namespace lcmlat
