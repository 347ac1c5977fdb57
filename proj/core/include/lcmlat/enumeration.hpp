#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcmlat/poset.hpp"

namespace lcmlat {

inline constexpr std::size_t kMaxEnumerationSize = 9;

struct EnumerationOptions {
  /// Worker threads used per generation level; 0 picks the hardware count.
  std::size_t workers = 0;
};

/// One canonical representative per isomorphism class of n-element posets,
/// sorted by canonical form. Grown by adjoining a maximal element with an
/// arbitrary down-set; an extension is kept only when deleting the child's
/// canonical maximal element gives back its parent. Throws kSizeTooLarge for
/// n > 9.
std::vector<Poset> enumerate_posets(std::size_t n, const EnumerationOptions& options = {});

/// One canonical representative per isomorphism class of n-element meet
/// semilattices, sorted by canonical form. Uses the same generation tree but
/// only expands meet semilattices: deleting a maximal element from a meet
/// semilattice leaves a meet semilattice, so no class loses its parent.
std::vector<Poset> enumerate_meet_semilattices(std::size_t n,
                                               const EnumerationOptions& options = {});

/// Every maximal element covers at least k elements.
bool filter_max_cover_at_least(const Poset& p, std::size_t k);

/// True iff no element e has μ(e, top) = 0, covers at most one element and is
/// covered by exactly one. Throws kNotMaximal if top is not maximal.
bool filter_no_prunable_zero(const Poset& p, std::size_t top);

/// Maximal elements that pass filter_no_prunable_zero.
std::vector<std::size_t> admissible_tops(const Poset& p);

/// The ten eight-element structures 8_A..8_J ("8_A" .. "8_J"), in order.
struct TaggedStructure {
  std::string tag;
  Poset poset;
};
const std::vector<TaggedStructure>& eight_element_classes();

/// Poset of class tag (e.g. "8_J"); throws kInvalidArgument for unknown tags.
const Poset& eight_element_class(const std::string& tag);

/// Tag of the matching built-in structure, if any. Throws kWrongSize unless
/// p has 8 elements.
std::optional<std::string> classify_8(const Poset& p);

struct EnumerationStats {
  std::size_t n = 0;
  std::size_t total_posets = 0;
  std::size_t meet_semilattices = 0;
  std::size_t after_cover_filter = 0;
  std::size_t after_mobius_filter = 0;
  std::vector<Poset> class_reps;
  /// classify_8 tags of class_reps when n == 8; empty strings otherwise.
  std::vector<std::string> class_tags;
};

/// enumerate -> meet-semilattice filter -> every maximal element covers >= 3
/// -> some maximal element admits no prunable zero of μ(·, top).
EnumerationStats pipeline(std::size_t n, const EnumerationOptions& options = {});

}  // namespace lcmlat
