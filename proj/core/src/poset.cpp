#include "lcmlat/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "lcmlat/error.hpp"

namespace lcmlat {

std::vector<std::size_t> mask_elements(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

namespace {

std::string pair_text(const CoverPair& c) {
  return "(" + std::to_string(c.first) + ", " + std::to_string(c.second) + ")";
}

// Validates a cover list and returns the inclusive down-sets of its
// reflexive-transitive closure. The index order is not checked here.
std::vector<Mask> close_covers(std::size_t n, std::span<const CoverPair> covers,
                               std::vector<std::size_t>* topo_order) {
  if (n > kMaxPosetSize) {
    throw Error(ErrorCode::kSizeTooLarge,
                "posets are limited to " + std::to_string(kMaxPosetSize) + " elements");
  }
  std::vector<Mask> below(n, 0);  // direct lower covers
  for (const auto& c : covers) {
    if (c.first >= n || c.second >= n) {
      throw Error(ErrorCode::kBadIndex, "cover " + pair_text(c) +
                                            " references an element >= " + std::to_string(n));
    }
    if (c.first == c.second) {
      throw Error(ErrorCode::kCycleDetected, "self-loop " + pair_text(c));
    }
    if (below[c.second] & bit(c.first)) {
      throw Error(ErrorCode::kNotReduced, "duplicate cover " + pair_text(c));
    }
    below[c.second] |= bit(c.first);
  }

  // Kahn's algorithm, smallest available element first.
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    pending[x] = static_cast<std::size_t>(std::popcount(below[x]));
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (pending[x] == 0) ready.push(x);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t x = ready.top();
    ready.pop();
    order.push_back(x);
    for (std::size_t y = 0; y < n; ++y) {
      if ((below[y] & bit(x)) && --pending[y] == 0) ready.push(y);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kCycleDetected, "cover relation contains a cycle");
  }

  std::vector<Mask> down(n, 0);
  for (std::size_t x : order) {
    down[x] = bit(x);
    for_each_bit(below[x], [&](std::size_t c) { down[x] |= down[c]; });
  }
  for (const auto& c : covers) {
    const Mask strictly_between = (down[c.second] & ~bit(c.second) & ~bit(c.first));
    bool implied = false;
    for_each_bit(strictly_between, [&](std::size_t v) {
      if (down[v] & bit(c.first)) implied = true;
    });
    if (implied) {
      throw Error(ErrorCode::kNotReduced,
                  "cover " + pair_text(c) + " is implied by other covers");
    }
  }
  if (topo_order != nullptr) *topo_order = std::move(order);
  return down;
}

Mask remove_bit(Mask m, std::size_t x) {
  return (m & low_bits(x)) | ((m >> (x + 1)) << x);
}

}  // namespace

Poset::Poset(std::vector<Mask> down) : n_(down.size()), down_(std::move(down)) {
  up_.assign(n_, 0);
  lower_covers_.assign(n_, 0);
  upper_covers_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    for_each_bit(down_[x], [&](std::size_t y) { up_[y] |= bit(x); });
  }
  for (std::size_t x = 0; x < n_; ++x) {
    const Mask strict = down_[x] & ~bit(x);
    Mask shadowed = 0;
    for_each_bit(strict, [&](std::size_t y) { shadowed |= down_[y] & ~bit(y); });
    lower_covers_[x] = strict & ~shadowed;
    for_each_bit(lower_covers_[x], [&](std::size_t y) { upper_covers_[y] |= bit(x); });
  }
}

Poset Poset::from_covers(std::size_t n, std::span<const CoverPair> covers) {
  auto down = close_covers(n, covers, nullptr);
  for (const auto& c : covers) {
    if (c.first > c.second) {
      throw Error(ErrorCode::kBadIndexOrder,
                  "cover " + pair_text(c) + " puts a larger index below a smaller one");
    }
  }
  return Poset(std::move(down));
}

Poset::Relabeled Poset::from_covers_relabeled(std::size_t n,
                                              std::span<const CoverPair> covers) {
  std::vector<std::size_t> order;
  close_covers(n, covers, &order);
  std::vector<std::size_t> new_index(n);
  for (std::size_t pos = 0; pos < n; ++pos) new_index[order[pos]] = pos;
  std::vector<CoverPair> mapped;
  mapped.reserve(covers.size());
  for (const auto& c : covers) mapped.emplace_back(new_index[c.first], new_index[c.second]);
  return Relabeled{from_covers(n, mapped), std::move(new_index)};
}

Poset Poset::from_down_sets(std::vector<Mask> down) {
  const std::size_t n = down.size();
  if (n > kMaxPosetSize) {
    throw Error(ErrorCode::kSizeTooLarge,
                "posets are limited to " + std::to_string(kMaxPosetSize) + " elements");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!(down[x] & bit(x))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "down-set of " + std::to_string(x) + " does not contain it");
    }
    if (down[x] & ~low_bits(x + 1)) {
      throw Error(ErrorCode::kBadIndexOrder,
                  "element " + std::to_string(x) + " lies above a larger index");
    }
    for_each_bit(down[x], [&](std::size_t y) {
      if ((down[y] & down[x]) != down[y]) {
        throw Error(ErrorCode::kInvalidArgument, "relation is not transitive");
      }
    });
  }
  return Poset(std::move(down));
}

std::vector<CoverPair> Poset::covers() const {
  std::vector<CoverPair> out;
  for (std::size_t x = 0; x < n_; ++x) {
    for_each_bit(lower_covers_[x], [&](std::size_t y) { out.emplace_back(y, x); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (upper_covers_[x] == 0) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (lower_covers_[x] == 0) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::levels() const {
  std::vector<std::size_t> level(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    for_each_bit(lower_covers_[x],
                 [&](std::size_t y) { level[x] = std::max(level[x], level[y] + 1); });
  }
  return level;
}

Poset Poset::relabeled(std::span<const std::size_t> new_index) const {
  if (new_index.size() != n_) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling has the wrong length");
  }
  std::vector<Mask> down(n_, 0);
  std::vector<bool> seen(n_, false);
  for (std::size_t x = 0; x < n_; ++x) {
    if (new_index[x] >= n_ || seen[new_index[x]]) {
      throw Error(ErrorCode::kInvalidArgument, "relabeling is not a permutation");
    }
    seen[new_index[x]] = true;
  }
  for (std::size_t x = 0; x < n_; ++x) {
    Mask m = 0;
    for_each_bit(down_[x], [&](std::size_t y) { m |= bit(new_index[y]); });
    down[new_index[x]] = m;
  }
  return from_down_sets(std::move(down));
}

Poset Poset::without(std::size_t x) const {
  if (x >= n_) throw Error(ErrorCode::kBadIndex, "no element " + std::to_string(x));
  std::vector<Mask> down;
  down.reserve(n_ - 1);
  for (std::size_t y = 0; y < n_; ++y) {
    if (y != x) down.push_back(remove_bit(down_[y], x));
  }
  return Poset(std::move(down));
}

Poset Poset::with_new_maximal(Mask below) const {
  if (n_ + 1 > kMaxPosetSize) {
    throw Error(ErrorCode::kSizeTooLarge, "poset would exceed the size limit");
  }
  if (below & ~all()) {
    throw Error(ErrorCode::kBadIndex, "down-set references missing elements");
  }
  for_each_bit(below, [&](std::size_t y) {
    if ((down_[y] & below) != down_[y]) {
      throw Error(ErrorCode::kInvalidArgument, "new element's down-set is not down-closed");
    }
  });
  std::vector<Mask> down = down_;
  down.push_back(below | bit(n_));
  return Poset(std::move(down));
}

std::optional<std::size_t> greatest_of(const Poset& p, Mask set) {
  if (set == 0) return std::nullopt;
  // A greatest element has the largest index, since indices extend the order.
  const auto top = static_cast<std::size_t>(63 - std::countl_zero(set));
  if ((p.down_set(top) & set) == set) return top;
  return std::nullopt;
}

std::optional<std::size_t> meet(const Poset& p, std::size_t a, std::size_t b) {
  return greatest_of(p, p.down_set(a) & p.down_set(b));
}

bool is_meet_semilattice(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (!meet(p, a, b)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> covers_of(const Poset& p, std::size_t x) {
  return mask_elements(p.lower_covers(x));
}

std::size_t xi(const Poset& p, std::size_t x) {
  const Mask covered = p.lower_covers(x);
  if (covered == 0) return x;
  Mask common = p.all();
  for_each_bit(covered, [&](std::size_t y) { common &= p.down_set(y); });
  const auto m = greatest_of(p, common);
  if (!m) {
    throw Error(ErrorCode::kNotSemilattice,
                "elements covered by " + std::to_string(x) + " have no meet");
  }
  return *m;
}

bool is_wedge_tree(const Poset& p) {
  if (!is_meet_semilattice(p)) {
    throw Error(ErrorCode::kNotSemilattice, "wedge-tree test needs a meet semilattice");
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (std::popcount(p.lower_covers(x)) > 1) return false;
  }
  return true;
}

MobiusTable mobius(const Poset& p, MobiusRecursion recursion) {
  const std::size_t n = p.size();
  MobiusTable mu(n);
  if (recursion == MobiusRecursion::kFromBelow) {
    for (std::size_t z = 0; z < n; ++z) {
      mu.at(z, z) = 1;
      for_each_bit(p.up_set(z) & ~bit(z), [&](std::size_t x) {
        std::int64_t sum = 0;
        for_each_bit(p.interval(z, x) & ~bit(x), [&](std::size_t v) { sum += mu(z, v); });
        mu.at(z, x) = -sum;
      });
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      const auto column = mobius_column(p, x, false);
      for (std::size_t z = 0; z < n; ++z) mu.at(z, x) = column[z];
    }
  }
  return mu;
}

std::vector<std::int64_t> mobius_column(const Poset& p, std::size_t x, bool prune_with_xi) {
  if (x >= p.size()) throw Error(ErrorCode::kBadIndex, "no element " + std::to_string(x));
  Mask candidates = p.down_set(x);
  if (prune_with_xi) {
    if (!is_meet_semilattice(p)) {
      throw Error(ErrorCode::kNotSemilattice, "pruned Möbius column needs a meet semilattice");
    }
    candidates = p.interval(xi(p, x), x);
  }
  std::vector<std::int64_t> column(p.size(), 0);
  column[x] = 1;
  const auto below = mask_elements(candidates & ~bit(x));
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    const std::size_t z = *it;
    std::int64_t sum = 0;
    for_each_bit(p.interval(z, x) & ~bit(z), [&](std::size_t v) { sum += column[v]; });
    column[z] = -sum;
  }
  return column;
}

bool has_positive_nontrivial_mobius(const Poset& p, const MobiusTable& mu) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t z = 0; z < x; ++z) {
      if (mu(z, x) > 0) return true;
    }
  }
  return false;
}

bool has_positive_nontrivial_mobius(const Poset& p) {
  return has_positive_nontrivial_mobius(p, mobius(p));
}

}  // namespace lcmlat
