#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "lcmlat/integer_sets.hpp"

namespace lcmlat {

struct CorpusOptions {
  std::size_t min_size = 1;
  std::size_t max_size = 8;
  /// Upper bound on every element; 0 disables the bound.
  std::uint64_t max_element = 1'000'000;
  /// Restrict to odd sets.
  bool odd = false;
  double inflate_probability = 0.3;
  double scale_probability = 0.2;
};

/// Seeded source of random gcd-closed sets. Structures are drawn uniformly
/// from the meet-semilattice classes of a random size, realized with random
/// distinct primes, then optionally inflated and scaled by a constant.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed, CorpusOptions options = {});

  GcdClosedSet next_gcd_closed();

  /// Union of the divisor sets of one to three random integers <= max_root.
  GcdClosedSet next_factor_closed(unsigned max_root = 360);

  /// Realization of l with random distinct primes below 100 (odd when asked)
  /// and up to max_inflations random inflations of power 1..3.
  Realization random_realization(const Poset& l, bool odd, unsigned max_inflations = 2);

  std::mt19937_64& rng() noexcept { return rng_; }

 private:
  const std::vector<Poset>& structures(std::size_t n);
  std::vector<BigInt> random_primes(std::size_t count, bool odd, unsigned below);

  std::mt19937_64 rng_;
  CorpusOptions options_;
  std::map<std::size_t, std::vector<Poset>> cache_;
};

}  // namespace lcmlat
