#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcmlat/poset.hpp"

namespace lcmlat {

/// Isomorphism-invariant byte string: one size byte followed by the strict
/// down-set of every element under the canonical labeling, each row written
/// big-endian in ceil(n/8) bytes. Equal strings <=> isomorphic posets.
using CanonicalForm = std::string;

struct CanonicalLabeling {
  /// position[v] = index of v in the canonical poset.
  std::vector<std::size_t> position;
  CanonicalForm form;
};

/// Color refinement seeded by (level, lower-cover count, upper-cover count),
/// then individualization over the first non-singleton cell, keeping the
/// lexicographically least encoding. Interchangeable twins (equal strict
/// down- and up-sets) are branched on once. Because cells stay sorted by
/// level, the canonical labeling is always a linear extension.
CanonicalLabeling canonical_labeling(const Poset& p);

CanonicalForm canonical_form(const Poset& p);

/// p relabeled by its canonical labeling.
Poset canonical_poset(const Poset& p);

bool are_isomorphic(const Poset& p, const Poset& q);

}  // namespace lcmlat
