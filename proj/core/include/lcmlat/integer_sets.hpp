#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcmlat/number_theory.hpp"
#include "lcmlat/poset.hpp"

namespace lcmlat {

/// Strictly increasing positive integers x_1 < ... < x_n, closed under gcd.
/// Increasing order is a linear extension of divisibility.
class GcdClosedSet {
 public:
  GcdClosedSet() = default;

  /// Sorts and deduplicates. Throws kNonPositive or kNotGcdClosed.
  static GcdClosedSet from_elements(std::vector<BigInt> xs);

  const std::vector<BigInt>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const BigInt& operator[](std::size_t i) const { return elems_[i]; }
  const BigInt& max() const { return elems_.back(); }
  std::optional<std::size_t> index_of(const BigInt& x) const;

  friend bool operator==(const GcdClosedSet&, const GcdClosedSet&) = default;

 private:
  std::vector<BigInt> elems_;
};

/// Smallest gcd-closed superset. Throws kNonPositive.
GcdClosedSet gcd_closure(std::span<const BigInt> xs);

bool is_gcd_closed(std::span<const BigInt> xs);
bool is_lcm_closed(std::span<const BigInt> xs);
/// Every divisor of every element is present. Factors each element.
bool is_factor_closed(std::span<const BigInt> xs);

/// leq(i, j) iff x_i | x_j.
Poset divisibility_poset(const GcdClosedSet& s);

/// A gcd-closed set whose divisibility order is isomorphic to `source`.
struct Realization {
  Poset source;
  GcdClosedSet base;
  /// primes[e] is the prime attached to source element e; 0 for the bottom.
  std::vector<BigInt> primes;
  /// base[base_index[e]] realizes source element e.
  std::vector<std::size_t> base_index;
  /// Inverse of base_index.
  std::vector<std::size_t> element_of;

  const BigInt& value_of(std::size_t element) const { return base[base_index[element]]; }
};

/// x'_1 = 1 and x'_i = p_i * lcm{x'_j : j < i, z_j <= z_i}, with p_i taken
/// from `primes` in element order (n - 1 entries are used). Default primes
/// are 3, 5, 7, ... Throws kNotSemilattice or kBadPrimes.
Realization realize_squarefree(const Poset& l,
                               std::optional<std::vector<BigInt>> primes = std::nullopt);

/// Multiplies every multiple of base[i] by p^power, where p is the prime of
/// the element realized by base[i]. Throws kBadIndex for the bottom or an
/// out-of-range index, kInvalidArgument for power 0.
Realization inflate_realization(const Realization& r, std::size_t i, unsigned power);
GcdClosedSet inflate(const Realization& r, std::size_t i, unsigned power);

/// {x_n / x_i}, sorted. Throws kNoTopDivisor unless every x_i divides x_n.
std::vector<BigInt> dual_lcm_closed(const GcdClosedSet& s);

}  // namespace lcmlat
