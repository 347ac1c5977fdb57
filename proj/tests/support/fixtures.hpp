#pragma once

#include <initializer_list>
#include <vector>

#include "lcmlat/integer_sets.hpp"
#include "lcmlat/poset.hpp"

namespace lcmlat::fixtures {

inline Poset chain(std::size_t n) {
  std::vector<CoverPair> covers;
  for (std::size_t i = 1; i < n; ++i) covers.emplace_back(i - 1, i);
  return Poset::from_covers(n, covers);
}

inline Poset antichain(std::size_t n) { return Poset::from_covers(n, {}); }

/// Bottom 0, incomparable 1 and 2, top 3.
inline Poset diamond() {
  const std::vector<CoverPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return Poset::from_covers(4, covers);
}

inline GcdClosedSet set_of(std::initializer_list<unsigned long> xs) {
  std::vector<BigInt> v;
  for (auto x : xs) v.emplace_back(x);
  return GcdClosedSet::from_elements(v);
}

/// The nine-element odd set whose largest Ψ value vanishes at α = 1.
inline GcdClosedSet odd_nine() {
  return GcdClosedSet::from_elements(
      {1, 3, 5, 7, 195, 291, 1407, 4025, BigInt("1020180525")});
}

/// odd_nine with the two largest elements multiplied by q.
inline GcdClosedSet odd_nine_scaled_top(unsigned long q) {
  return GcdClosedSet::from_elements({1, 3, 5, 7, 195, 291, 1407, BigInt(4025) * q,
                                      BigInt("1020180525") * q});
}

}  // namespace lcmlat::fixtures
