#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lcmlat {

/// Bit set over poset elements; bit i stands for element i.
using Mask = std::uint64_t;

/// A Hasse-diagram edge (child, parent): parent covers child.
using CoverPair = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kMaxPosetSize = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : bit(n) - 1;
}

/// Calls f(i) for every set bit i of m, in increasing order.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<std::size_t> mask_elements(Mask m);

/// Finite poset on the elements 0..n-1.
///
/// The index order is always a linear extension: leq(i, j) with i != j
/// implies i < j. Instances are immutable once built; all queries are O(1)
/// bit operations on cached down-sets, up-sets and cover sets.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from its Hasse diagram. Throws kBadIndex, kCycleDetected,
  /// kNotReduced or kBadIndexOrder.
  static Poset from_covers(std::size_t n, std::span<const CoverPair> covers);

  struct Relabeled;

  /// Like from_covers, but an input whose indexing is not a linear extension
  /// is relabeled (smallest available index first) instead of rejected.
  static Relabeled from_covers_relabeled(std::size_t n,
                                         std::span<const CoverPair> covers);

  /// Builds a poset from inclusive down-sets (down[x] holds every y <= x).
  /// The relation must be a partial order whose index order is a linear
  /// extension.
  static Poset from_down_sets(std::vector<Mask> down);

  std::size_t size() const noexcept { return n_; }
  Mask all() const noexcept { return low_bits(n_); }

  bool leq(std::size_t a, std::size_t b) const noexcept {
    return (down_[b] >> a) & 1U;
  }
  bool less(std::size_t a, std::size_t b) const noexcept {
    return a != b && leq(a, b);
  }
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  /// Inclusive down-set / up-set of x.
  Mask down_set(std::size_t x) const noexcept { return down_[x]; }
  Mask up_set(std::size_t x) const noexcept { return up_[x]; }

  /// Elements covered by x, elements covering x.
  Mask lower_covers(std::size_t x) const noexcept { return lower_covers_[x]; }
  Mask upper_covers(std::size_t x) const noexcept { return upper_covers_[x]; }

  /// Elements of the closed interval [z, x] (empty unless z <= x).
  Mask interval(std::size_t z, std::size_t x) const noexcept {
    return up_[z] & down_[x];
  }

  /// Cover pairs sorted lexicographically.
  std::vector<CoverPair> covers() const;

  std::vector<std::size_t> maximal_elements() const;
  std::vector<std::size_t> minimal_elements() const;

  /// Length of the longest chain ending in x, counted in elements minus one.
  std::vector<std::size_t> levels() const;

  /// Applies new_index[old] = new. The result must again be indexed by a
  /// linear extension (kBadIndexOrder otherwise).
  Poset relabeled(std::span<const std::size_t> new_index) const;

  /// Induced subposet on all elements except x; indices above x shift down.
  Poset without(std::size_t x) const;

  /// Adjoins a new element n with the given strict down-set, which must be a
  /// down-closed subset of the current elements.
  Poset with_new_maximal(Mask below) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(std::vector<Mask> down);

  std::size_t n_ = 0;
  std::vector<Mask> down_;
  std::vector<Mask> up_;
  std::vector<Mask> lower_covers_;
  std::vector<Mask> upper_covers_;
};

struct Poset::Relabeled {
  Poset poset;
  /// new_index[old element] = element index in `poset`.
  std::vector<std::size_t> new_index;
};

/// Greatest lower bound of a and b, if one exists.
std::optional<std::size_t> meet(const Poset& p, std::size_t a, std::size_t b);

/// Greatest element of `lower_bounds`, provided it is below all of them.
std::optional<std::size_t> greatest_of(const Poset& p, Mask lower_bounds);

bool is_meet_semilattice(const Poset& p);

/// Elements covered by x.
std::vector<std::size_t> covers_of(const Poset& p, std::size_t x);

/// Meet of the elements covered by x, or x itself when x covers nothing.
/// Throws kNotSemilattice when that meet does not exist.
std::size_t xi(const Poset& p, std::size_t x);

/// True iff every element covers at most one element. Requires a meet
/// semilattice (kNotSemilattice otherwise).
bool is_wedge_tree(const Poset& p);

/// μ(z, x) for all pairs, as exact integers.
class MobiusTable {
 public:
  MobiusTable() = default;
  explicit MobiusTable(std::size_t n) : n_(n), values_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t z, std::size_t x) const noexcept {
    return values_[z * n_ + x];
  }
  std::int64_t& at(std::size_t z, std::size_t x) noexcept {
    return values_[z * n_ + x];
  }

  friend bool operator==(const MobiusTable&, const MobiusTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> values_;
};

enum class MobiusRecursion {
  /// μ(z, x) = -Σ_{z <= v < x} μ(z, v)
  kFromBelow,
  /// μ(z, x) = -Σ_{z < v <= x} μ(v, x)
  kFromAbove,
};

MobiusTable mobius(const Poset& p,
                   MobiusRecursion recursion = MobiusRecursion::kFromAbove);

/// Column μ(·, x). With prune_with_xi the recursion only visits the interval
/// [ξ(x), x] and leaves every other entry zero; this requires a meet
/// semilattice.
std::vector<std::int64_t> mobius_column(const Poset& p, std::size_t x,
                                        bool prune_with_xi = false);

/// True iff μ(z, x) > 0 for some z != x.
bool has_positive_nontrivial_mobius(const Poset& p);
bool has_positive_nontrivial_mobius(const Poset& p, const MobiusTable& mu);

}  // namespace lcmlat
