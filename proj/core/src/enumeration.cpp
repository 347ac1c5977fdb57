#include "lcmlat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "lcmlat/canonical.hpp"
#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

struct Node {
  Poset poset;
  CanonicalForm form;
};

template <typename F>
void for_each_down_set(const Poset& p, std::size_t i, Mask current, F& f) {
  if (i == p.size()) {
    f(current);
    return;
  }
  for_each_down_set(p, i + 1, current, f);
  const Mask needed = p.down_set(i) & ~bit(i);
  if ((needed & ~current) == 0) for_each_down_set(p, i + 1, current | bit(i), f);
}

std::vector<Node> children_of(const Node& parent, bool semilattices_only) {
  std::vector<Node> out;
  std::unordered_set<CanonicalForm> seen;
  const std::size_t added = parent.poset.size();
  auto visit = [&](Mask below) {
    Poset child = parent.poset.with_new_maximal(below);
    if (semilattices_only && !is_meet_semilattice(child)) return;
    CanonicalLabeling labeling = canonical_labeling(child);

    // Canonical deletion: the maximal element with the largest canonical
    // position. Any other choice of labeling differs by an automorphism.
    std::size_t chosen = added;
    for (std::size_t m : child.maximal_elements()) {
      if (labeling.position[m] > labeling.position[chosen]) chosen = m;
    }
    if (chosen != added && canonical_form(child.without(chosen)) != parent.form) return;
    if (!seen.insert(labeling.form).second) return;
    out.push_back(Node{child.relabeled(labeling.position), std::move(labeling.form)});
  };
  for_each_down_set(parent.poset, 0, 0, visit);
  return out;
}

std::vector<Node> next_level(const std::vector<Node>& parents, bool semilattices_only,
                             std::size_t workers) {
  std::vector<std::vector<Node>> per_parent(parents.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < parents.size(); i = cursor++) {
      per_parent[i] = children_of(parents[i], semilattices_only);
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(parents.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<Node> out;
  for (auto& batch : per_parent) {
    std::move(batch.begin(), batch.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Poset> generate(std::size_t n, bool semilattices_only,
                            const EnumerationOptions& options) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "enumeration needs n >= 1");
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::kSizeTooLarge,
                "enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize));
  }
  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

  const Poset single = Poset::from_down_sets({bit(0)});
  std::vector<Node> level{Node{single, canonical_form(single)}};
  for (std::size_t size = 1; size < n; ++size) {
    level = next_level(level, semilattices_only, workers);
  }
  std::sort(level.begin(), level.end(),
            [](const Node& a, const Node& b) { return a.form < b.form; });
  std::vector<Poset> out;
  out.reserve(level.size());
  for (auto& node : level) out.push_back(std::move(node.poset));
  return out;
}

Poset from_one_based(std::initializer_list<CoverPair> covers) {
  std::vector<CoverPair> zero_based;
  for (const auto& [child, parent] : covers) zero_based.emplace_back(child - 1, parent - 1);
  return Poset::from_covers(8, zero_based);
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n, const EnumerationOptions& options) {
  return generate(n, false, options);
}

std::vector<Poset> enumerate_meet_semilattices(std::size_t n,
                                               const EnumerationOptions& options) {
  return generate(n, true, options);
}

bool filter_max_cover_at_least(const Poset& p, std::size_t k) {
  for (std::size_t m : p.maximal_elements()) {
    if (static_cast<std::size_t>(std::popcount(p.lower_covers(m))) < k) return false;
  }
  return true;
}

bool filter_no_prunable_zero(const Poset& p, std::size_t top) {
  if (top >= p.size() || p.upper_covers(top) != 0) {
    throw Error(ErrorCode::kNotMaximal, std::to_string(top) + " is not a maximal element");
  }
  const auto mu = mobius_column(p, top);
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (mu[e] == 0 && std::popcount(p.lower_covers(e)) <= 1 &&
        std::popcount(p.upper_covers(e)) == 1) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> admissible_tops(const Poset& p) {
  std::vector<std::size_t> out;
  for (std::size_t m : p.maximal_elements()) {
    if (filter_no_prunable_zero(p, m)) out.push_back(m);
  }
  return out;
}

const std::vector<TaggedStructure>& eight_element_classes() {
  // Element x_i of each Hasse diagram is index i - 1; the top is x_8.
  static const std::vector<TaggedStructure> classes = {
      {"8_A", from_one_based({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 6}, {1, 7},
                              {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_B", from_one_based({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                              {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_C", from_one_based({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {5, 6}, {3, 7},
                              {4, 8}, {6, 8}, {7, 8}})},
      {"8_D", from_one_based({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7},
                              {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_E", from_one_based({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {1, 7},
                              {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_F", from_one_based({{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                              {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_G", from_one_based({{1, 2}, {2, 3}, {2, 4}, {1, 5}, {1, 6}, {1, 7},
                              {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_H", from_one_based({{1, 2}, {2, 3}, {3, 4}, {3, 5}, {2, 6}, {1, 7},
                              {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_I", from_one_based({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                              {2, 8}, {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}})},
      {"8_J", from_one_based({{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {2, 6}, {4, 6},
                              {3, 7}, {4, 7}, {5, 8}, {6, 8}, {7, 8}})},
  };
  return classes;
}

const Poset& eight_element_class(const std::string& tag) {
  for (const auto& c : eight_element_classes()) {
    if (c.tag == tag) return c.poset;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown structure tag '" + tag + "'");
}

std::optional<std::string> classify_8(const Poset& p) {
  if (p.size() != 8) {
    throw Error(ErrorCode::kWrongSize, "classify_8 needs 8 elements, got " +
                                           std::to_string(p.size()));
  }
  static const std::vector<CanonicalForm> forms = [] {
    std::vector<CanonicalForm> out;
    for (const auto& c : eight_element_classes()) out.push_back(canonical_form(c.poset));
    return out;
  }();
  const CanonicalForm form = canonical_form(p);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i] == form) return eight_element_classes()[i].tag;
  }
  return std::nullopt;
}

EnumerationStats pipeline(std::size_t n, const EnumerationOptions& options) {
  EnumerationStats stats;
  stats.n = n;
  const auto posets = enumerate_posets(n, options);
  stats.total_posets = posets.size();
  for (const auto& p : posets) {
    if (!is_meet_semilattice(p)) continue;
    ++stats.meet_semilattices;
    if (!filter_max_cover_at_least(p, 3)) continue;
    ++stats.after_cover_filter;
    if (admissible_tops(p).empty()) continue;
    ++stats.after_mobius_filter;
    stats.class_reps.push_back(p);
    stats.class_tags.push_back(n == 8 ? classify_8(p).value_or("") : "");
  }
  return stats;
}

}  // namespace lcmlat
