#include "lcmlat/io_formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
    line.remove_prefix(1);
  }
  return line;
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  if (!all_digits(s) || s.size() > 6) syntax_error(line, "expected an element index, got '" + s + "'");
  return std::stoul(s);
}

BigInt parse_big(const std::string& s) {
  BigInt out;
  const std::string digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  if (!all_digits(digits) || out.set_str(s[0] == '+' ? digits : s, 10) != 0) {
    throw Error(ErrorCode::kSyntaxError, "not an integer: '" + s + "'");
  }
  return out;
}

}  // namespace

Poset parse_poset(std::string_view text, bool relabel) {
  std::optional<std::size_t> n;
  std::vector<CoverPair> covers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    const auto line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    const auto t = tokens(line);
    if (!n) {
      if (t.size() != 2 || t[0] != "n") syntax_error(line_no, "expected header 'n <count>'");
      n = parse_index(t[1], line_no);
      if (*n > kMaxPosetSize) {
        throw Error(ErrorCode::kSizeTooLarge, "posets are limited to 64 elements");
      }
      continue;
    }
    if (t.size() != 2) syntax_error(line_no, "expected 'child parent'");
    covers.emplace_back(parse_index(t[0], line_no), parse_index(t[1], line_no));
  }
  if (!n) syntax_error(line_no, "missing header 'n <count>'");
  if (relabel) return Poset::from_covers_relabeled(*n, covers).poset;
  return Poset::from_covers(*n, covers);
}

std::string emit_poset(const Poset& p) {
  std::string out = "n " + std::to_string(p.size()) + "\n";
  for (const auto& [child, parent] : p.covers()) {
    out += std::to_string(child) + " " + std::to_string(parent) + "\n";
  }
  return out;
}

std::string emit_dot(const Poset& p, const std::vector<std::string>& labels) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < p.size(); ++v) {
    const std::string label = v < labels.size() ? labels[v] : std::to_string(v);
    out += "  " + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  const auto level = p.levels();
  const std::size_t height = p.size() == 0 ? 0 : *std::max_element(level.begin(), level.end()) + 1;
  for (std::size_t h = 0; h < height; ++h) {
    out += "  { rank=same;";
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (level[v] == h) out += " " + std::to_string(v) + ";";
    }
    out += " }\n";
  }
  for (const auto& [child, parent] : p.covers()) {
    out += "  " + std::to_string(child) + " -> " + std::to_string(parent) + ";\n";
  }
  out += "}\n";
  return out;
}

std::vector<BigInt> parse_integers(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string line(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    std::replace(line.begin(), line.end(), ',', ' ');
    for (const auto& t : tokens(line)) {
      try {
        out.push_back(parse_big(t));
      } catch (const Error&) {
        syntax_error(line_no, "not an integer: '" + t + "'");
      }
    }
  }
  return out;
}

std::string emit_integers(std::span<const BigInt> xs) {
  std::string out;
  for (const auto& x : xs) out += x.get_str() + "\n";
  return out;
}

std::string to_fraction_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(strip_comment(text));
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      const BigInt den = parse_big(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::kSyntaxError, "zero denominator");
      Rational q(parse_big(s.substr(0, slash)), den);
      q.canonicalize();
      return q;
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (!frac.empty() && !all_digits(frac)) throw Error(ErrorCode::kSyntaxError, s);
      std::string whole = s.substr(0, dot);
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      Rational q(parse_big(whole + frac), pow(BigInt(10), frac.size()));
      q.canonicalize();
      return q;
    }
    return Rational(parse_big(s));
  } catch (const Error&) {
    throw Error(ErrorCode::kSyntaxError, "not a rational number: '" + s + "'");
  }
}

Json Report::to_json() const {
  return Json{{"schema_version", schema_version},
              {"command", command},
              {"inputs", inputs},
              {"results", results}};
}

Report Report::from_json(const Json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("malformed report: ") + e.what());
  }
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [child, parent] : p.covers()) covers.push_back(Json::array({child, parent}));
  return Json{{"n", p.size()}, {"covers", covers}};
}

Json to_json(std::span<const BigInt> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Json to_json(const CertifiedReal& x, int digits) {
  return Json{{"lo", x.lo().to_string(digits, MPFR_RNDD)},
              {"hi", x.hi().to_string(digits, MPFR_RNDU)},
              {"precision", x.precision()}};
}

Json to_json(const EnumerationStats& stats, bool with_representatives) {
  Json out{{"n", stats.n},
           {"counts",
            {{"total_posets", stats.total_posets},
             {"meet_semilattices", stats.meet_semilattices},
             {"after_cover_filter", stats.after_cover_filter},
             {"after_mobius_filter", stats.after_mobius_filter}}}};
  Json tags = Json::array();
  for (const auto& t : stats.class_tags) tags.push_back(t);
  out["class_tags"] = tags;
  if (with_representatives) {
    Json reps = Json::array();
    for (const auto& p : stats.class_reps) reps.push_back(to_json(p));
    out["representatives"] = reps;
  }
  return out;
}

Json to_json(const PsiExpansion& expansion) {
  Json indices = Json::array();
  for (auto k : expansion.indices) indices.push_back(k + 1);
  return Json{{"denominator", expansion.denominator.get_str()},
              {"indices", indices},
              {"numerators", to_json(expansion.numerators)},
              {"numerator_sum", expansion.numerator_sum.get_str()}};
}

Json to_json(const SingularityVerdict& verdict) {
  Json witnesses = Json::array();
  for (auto i : verdict.witnesses) witnesses.push_back(i + 1);
  Json psi = Json::array();
  for (const auto& q : verdict.psi) psi.push_back(to_fraction_string(q));
  return Json{{"verdict", verdict_name(verdict.kind)},
              {"singular", verdict.kind == SingularityVerdict::Kind::kSingular},
              {"exact", verdict.exact},
              {"witnesses", witnesses},
              {"psi", psi}};
}

Json to_json(const AlphaBracket& bracket) {
  Json out{{"lo", bracket.lo.to_string(20)},
           {"hi", bracket.hi.to_string(20)},
           {"i", bracket.i + 1},
           {"sign_lo", sign_name(bracket.sign_lo)},
           {"sign_hi", sign_name(bracket.sign_hi)}};
  out["k"] = bracket.k ? Json(*bracket.k + 1) : Json(nullptr);
  return out;
}

Json to_json(const SearchReport& report) {
  return Json{{"set", to_json(report.set.elements())},
              {"i", report.i + 1},
              {"k", report.k + 1},
              {"alpha0", to_json(report.root.alpha0)},
              {"r_used", report.r_used},
              {"iterations", report.root.iterations},
              {"element", report.element},
              {"prime", report.prime.get_str()},
              {"derivative_at_zero", to_json(report.derivative, 12)},
              {"bracket", to_json(report.bracket)}};
}

Poset poset_from_json(const Json& j) {
  try {
    std::vector<CoverPair> covers;
    for (const auto& c : j.at("covers")) {
      covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    }
    return Poset::from_covers(j.at("n").get<std::size_t>(), covers);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("malformed poset: ") + e.what());
  }
}

std::vector<BigInt> integers_from_json(const Json& j) {
  std::vector<BigInt> out;
  try {
    for (const auto& x : j) out.push_back(parse_big(x.get<std::string>()));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("malformed integer list: ") + e.what());
  }
  return out;
}

}  // namespace lcmlat
