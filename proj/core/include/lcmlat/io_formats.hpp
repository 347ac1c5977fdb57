#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcmlat/alpha_search.hpp"
#include "lcmlat/enumeration.hpp"
#include "lcmlat/matrix_analysis.hpp"

namespace lcmlat {

using Json = nlohmann::ordered_json;

/// Poset text format: the first non-comment line is "n <count>", every
/// further line a "child parent" cover pair; '#' starts a comment. Throws
/// kSyntaxError naming the line; order errors come from Poset::from_covers.
/// With relabel, inputs not indexed by a linear extension are renumbered.
Poset parse_poset(std::string_view text, bool relabel = false);
/// Header plus covers in lexicographic order.
std::string emit_poset(const Poset& p);

/// DOT digraph with edges child -> parent and one rank per level.
std::string emit_dot(const Poset& p, const std::vector<std::string>& labels = {});

/// Positive or negative integers separated by whitespace or commas, '#'
/// comments. Throws kSyntaxError.
std::vector<BigInt> parse_integers(std::string_view text);
/// One integer per line.
std::string emit_integers(std::span<const BigInt> xs);

/// Always "p/q", also for integers.
std::string to_fraction_string(const Rational& q);
/// Accepts "p/q", "p" and finite decimals such as "0.25". Throws kSyntaxError.
Rational parse_rational(std::string_view text);

struct Report {
  std::string schema_version = "1";
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();

  Json to_json() const;
  static Report from_json(const Json& j);
  friend bool operator==(const Report&, const Report&) = default;
};

// JSON views of library values. Big integers and rationals are decimal
// strings; set indices are reported 1-based (x_1 .. x_n) while poset
// elements keep their 0-based indices.
Json to_json(const Poset& p);
Json to_json(std::span<const BigInt> xs);
Json to_json(const CertifiedReal& x, int digits = 20);
Json to_json(const EnumerationStats& stats, bool with_representatives);
Json to_json(const PsiExpansion& expansion);
Json to_json(const SingularityVerdict& verdict);
Json to_json(const AlphaBracket& bracket);
Json to_json(const SearchReport& report);

Poset poset_from_json(const Json& j);
std::vector<BigInt> integers_from_json(const Json& j);

}  // namespace lcmlat
