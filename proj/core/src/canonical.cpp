#include "lcmlat/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lcmlat {

namespace {

using Coloring = std::vector<std::uint8_t>;

// Ranks items by a lexicographic key; returns the number of distinct keys.
template <typename KeyFn>
std::size_t rank_by_key(std::size_t n, std::size_t key_len, KeyFn&& fill, Coloring& out) {
  std::vector<std::uint8_t> keys(n * key_len, 0);
  for (std::size_t v = 0; v < n; ++v) fill(v, &keys[v * key_len]);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto key_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(&keys[a * key_len], &keys[a * key_len] + key_len,
                                        &keys[b * key_len], &keys[b * key_len] + key_len);
  };
  std::sort(idx.begin(), idx.end(), key_less);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && key_less(idx[k - 1], idx[k])) ++rank;
    out[idx[k]] = static_cast<std::uint8_t>(rank);
  }
  return n == 0 ? 0 : rank + 1;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()) {
    strict_down_.resize(n_);
    strict_up_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      strict_down_[v] = p.down_set(v) & ~bit(v);
      strict_up_[v] = p.up_set(v) & ~bit(v);
    }
  }

  CanonicalLabeling run() {
    Coloring color(n_, 0);
    const auto level = p_.levels();
    const std::size_t cells = rank_by_key(
        n_, 3,
        [&](std::size_t v, std::uint8_t* key) {
          key[0] = static_cast<std::uint8_t>(level[v]);
          key[1] = static_cast<std::uint8_t>(std::popcount(p_.lower_covers(v)));
          key[2] = static_cast<std::uint8_t>(std::popcount(p_.upper_covers(v)));
        },
        color);
    search(std::move(color), cells);

    CanonicalLabeling out;
    out.position.assign(best_color_.begin(), best_color_.end());
    const std::size_t row_bytes = (n_ + 7) / 8;
    out.form.reserve(1 + n_ * row_bytes);
    out.form.push_back(static_cast<char>(n_));
    for (Mask row : best_rows_) {
      for (std::size_t b = row_bytes; b-- > 0;) {
        out.form.push_back(static_cast<char>((row >> (8 * b)) & 0xFFU));
      }
    }
    return out;
  }

 private:
  std::size_t refine(Coloring& color, std::size_t cells) const {
    Coloring next(n_);
    while (cells < n_) {
      const std::size_t key_len = 1 + 2 * cells;
      const std::size_t refined = rank_by_key(
          n_, key_len,
          [&](std::size_t v, std::uint8_t* key) {
            key[0] = color[v];
            for_each_bit(strict_down_[v], [&](std::size_t u) { ++key[1 + color[u]]; });
            for_each_bit(strict_up_[v], [&](std::size_t u) { ++key[1 + cells + color[u]]; });
          },
          next);
      if (refined == cells) break;
      color.swap(next);
      cells = refined;
    }
    return cells;
  }

  bool twins(std::size_t a, std::size_t b) const {
    return strict_down_[a] == strict_down_[b] && strict_up_[a] == strict_up_[b];
  }

  void leaf(const Coloring& color) {
    std::vector<Mask> rows(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      Mask row = 0;
      for_each_bit(strict_down_[v], [&](std::size_t u) { row |= bit(color[u]); });
      rows[color[v]] = row;
    }
    if (!have_best_ || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_color_ = color;
      have_best_ = true;
    }
  }

  void search(Coloring color, std::size_t cells) {
    cells = refine(color, cells);
    if (cells == n_) {
      leaf(color);
      return;
    }
    std::array<std::uint8_t, kMaxPosetSize> count{};
    for (std::size_t v = 0; v < n_; ++v) ++count[color[v]];
    std::uint8_t target = 0;
    while (count[target] < 2) ++target;

    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); })) {
        continue;
      }
      Coloring child = color;
      for (std::size_t u = 0; u < n_; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      }
      search(std::move(child), cells + 1);
      tried.push_back(v);
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<Mask> strict_down_;
  std::vector<Mask> strict_up_;
  std::vector<Mask> best_rows_;
  Coloring best_color_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Poset& p) { return CanonicalSearch(p).run(); }

CanonicalForm canonical_form(const Poset& p) { return canonical_labeling(p).form; }

Poset canonical_poset(const Poset& p) {
  return p.relabeled(canonical_labeling(p).position);
}

bool are_isomorphic(const Poset& p, const Poset& q) {
  return p.size() == q.size() && canonical_form(p) == canonical_form(q);
}

}  // namespace lcmlat
