#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "lcmlat/alpha_search.hpp"
#include "lcmlat/corpus.hpp"
#include "lcmlat/enumeration.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/io_formats.hpp"
#include "lcmlat/matrix_analysis.hpp"

namespace lcmlat::cli {

namespace {

// Bad input that is the caller's fault rather than a mathematical failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  Precision precision = kDefaultPrecision;
  double tol = 1e-9;
  unsigned r_max = 64;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "text";
};

struct Output {
  Report report;
  std::string text;
  std::optional<std::string> dot;
};

const std::vector<BigInt> kCounterexample = {
    1, 3, 5, 7, 195, 291, 1407, 4025, BigInt("1020180525")};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<BigInt>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i].get_str();
  }
  return out;
}

std::string interval_text(const CertifiedReal& x, int digits = 12) {
  return "[" + x.lo().to_string(digits, MPFR_RNDD) + ", " + x.hi().to_string(digits, MPFR_RNDU) +
         "]";
}

std::size_t one_based(long value, std::size_t n, const char* what) {
  if (value < 1 || static_cast<std::size_t>(value) > n) {
    throw UsageError(std::string(what) + " must lie in 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(value) - 1;
}

SearchOptions search_options(const Globals& g) {
  SearchOptions o;
  o.precision = g.precision;
  o.max_precision = std::max<Precision>(g.precision * 32, 8192);
  o.tol = g.tol;
  o.r_max = g.r_max;
  return o;
}

// Input selection shared by analyze and find-alpha.
struct SetSource {
  std::string file;
  std::string values;

  bool given() const { return !file.empty() || !values.empty(); }
  GcdClosedSet load() const {
    if (!file.empty() && !values.empty()) throw UsageError("give either --set or --values");
    if (!given()) throw UsageError("an integer set is required (--set or --values)");
    const auto xs = parse_integers(file.empty() ? values : read_file(file));
    if (xs.empty()) throw UsageError("the integer set is empty");
    return GcdClosedSet::from_elements(xs);
  }
};

struct StructureSource {
  std::string file;
  std::string tag;
  bool relabel = false;

  bool given() const { return !file.empty() || !tag.empty(); }
  Poset load() const {
    if (!file.empty() && !tag.empty()) throw UsageError("give either a poset file or --class");
    if (!tag.empty()) return eight_element_class(tag);
    if (file.empty()) throw UsageError("a poset is required");
    return parse_poset(read_file(file), relabel);
  }
};

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  std::size_t workers = 0;
  bool representatives = false;
};

Output cmd_enumerate(const EnumerateArgs& a) {
  const EnumerationStats stats = pipeline(a.n, EnumerationOptions{a.workers});
  Output out;
  out.report.command = "enumerate";
  out.report.inputs = {{"n", a.n}};
  out.report.results = to_json(stats, a.representatives);

  std::ostringstream text;
  text << "n                   " << stats.n << "\n"
       << "posets              " << stats.total_posets << "\n"
       << "meet semilattices   " << stats.meet_semilattices << "\n"
       << "max covers >= 3     " << stats.after_cover_filter << "\n"
       << "no prunable zero    " << stats.after_mobius_filter << "\n";
  if (stats.n == 8) {
    text << "classes            ";
    for (const auto& t : stats.class_tags) text << " " << (t.empty() ? "?" : t);
    text << "\n";
  }
  std::string dot;
  if (a.representatives) {
    for (std::size_t r = 0; r < stats.class_reps.size(); ++r) {
      const std::string& tag = stats.class_tags[r];
      text << "\n# representative " << r + 1 << (tag.empty() ? "" : " " + tag) << "\n"
           << emit_poset(stats.class_reps[r]);
      dot += emit_dot(stats.class_reps[r]);
    }
  }
  out.text = text.str();
  if (a.representatives) out.dot = dot;
  return out;
}

// ---- verify-counterexample -------------------------------------------------

struct VerifyArgs {
  unsigned long alpha = 1;
  bool dual = false;
  long q = 0;
  double range_hi = 64.0;
  std::size_t grid = 64;
};

Output cmd_verify(const VerifyArgs& a, const Globals& g) {
  std::vector<BigInt> xs = kCounterexample;
  if (a.q != 0) {
    if (a.q < 2) throw UsageError("--q must be an integer >= 2");
    xs[7] *= a.q;
    xs[8] *= a.q;
  }
  const GcdClosedSet s = GcdClosedSet::from_elements(xs);
  const std::size_t top = s.size() - 1;
  const PsiExpansion e = psi_expansion(s, a.alpha, top);
  Rational value(e.numerator_sum, e.denominator);
  value.canonicalize();

  Output out;
  out.report.command = "verify-counterexample";
  out.report.inputs = {{"alpha", a.alpha}, {"q", a.q}, {"dual", a.dual}};
  out.report.results = {{"set", to_json(s.elements())},
                        {"expansion", to_json(e)},
                        {"psi", to_fraction_string(value)},
                        {"singular", value == 0}};

  std::ostringstream text;
  text << "set      " << join(s.elements()) << "\n"
       << "alpha    " << a.alpha << "\n"
       << "Psi(x_" << top + 1 << ") = (";
  for (std::size_t t = 0; t < e.numerators.size(); ++t) {
    const BigInt& v = e.numerators[t];
    if (t > 0) text << (v < 0 ? " - " : " + ");
    else if (v < 0) text << "-";
    text << BigInt(abs(v)).get_str();
  }
  text << ") / " << e.denominator.get_str() << "\n"
       << "sum      " << e.numerator_sum.get_str() << "\n"
       << "Psi      " << to_fraction_string(value) << "\n"
       << "verdict  " << (value == 0 ? "singular" : "nonsingular at this index") << "\n";

  if (a.q != 0) {
    const CertifiedReal h1 = h_eval(s, top, Rational(1), g.precision);
    SearchOptions o = search_options(g);
    o.range_lo = 1.0;
    o.range_hi = a.range_hi;
    o.grid = a.grid;
    const auto bracket = find_sign_change(s, top, o);
    text << "h(1)     " << interval_text(h1) << " " << sign_name(h1.sign()) << "\n";
    out.report.results["h_at_1"] = to_json(h1);
    out.report.results["h_at_1_sign"] = sign_name(h1.sign());
    if (bracket) {
      const RootIsolation root = bisect_root(s, top, *bracket, o);
      text << "alpha0   " << interval_text(root.alpha0) << "\n";
      out.report.results["alpha0"] = to_json(root.alpha0);
    } else {
      text << "alpha0   no sign change in [1, " << a.range_hi << "] (inconclusive)\n";
      out.report.results["alpha0"] = nullptr;
    }
  }

  if (a.dual) {
    const DualDeterminantCheck d = dual_determinant_check(s, a.alpha);
    text << "dual     " << join(d.dual) << "\n"
         << "lcm closed " << (is_lcm_closed(d.dual) ? "yes" : "no") << "\n"
         << "det [S']_{N^a} = x_n^n * det (S)_{1/N^a}:      "
         << (d.holds_with_xn_pow_n ? "holds" : "fails") << "\n"
         << "det [S']_{N^a} = x_n^(n a) * det (S)_{1/N^a}:  "
         << (d.holds_with_xn_pow_n_alpha ? "holds" : "fails") << "\n";
    out.report.results["dual"] = {
        {"set", to_json(d.dual)},
        {"lcm_closed", is_lcm_closed(d.dual)},
        {"det_dual_join", to_fraction_string(d.det_dual_join)},
        {"det_reciprocal_meet", to_fraction_string(d.det_reciprocal_meet)},
        {"holds_with_xn_pow_n", d.holds_with_xn_pow_n},
        {"holds_with_xn_pow_n_alpha", d.holds_with_xn_pow_n_alpha}};
  }
  out.text = text.str();
  return out;
}

// ---- find-alpha -------------------------------------------------------------

struct FindAlphaArgs {
  SetSource set;
  StructureSource structure;
  long index = 0;
  double range_lo = 1.0 / 1024.0;
  double range_hi = 64.0;
  std::size_t grid = 64;
};

Output cmd_find_alpha(const FindAlphaArgs& a, const Globals& g) {
  SearchOptions o = search_options(g);
  o.range_lo = a.range_lo;
  o.range_hi = a.range_hi;
  o.grid = a.grid;
  Output out;
  out.report.command = "find-alpha";
  out.report.inputs = {{"range", {a.range_lo, a.range_hi}}, {"grid", a.grid}, {"tol", g.tol}};
  std::ostringstream text;

  if (a.structure.given()) {
    if (a.set.given()) throw UsageError("give either a set or a structure");
    const Poset l = a.structure.load();
    out.report.inputs["structure"] = to_json(l);
    const SearchReport r = construct_singular_instance(l, o);
    out.report.results = to_json(r);
    text << "set       " << join(r.set.elements()) << "\n"
         << "index     x_" << r.i + 1 << " (structure element " << r.element << ")\n"
         << "k         x_" << r.k + 1 << "\n"
         << "prime     " << r.prime.get_str() << "^" << r.r_used << "\n"
         << "slope     " << interval_text(r.derivative) << "\n"
         << "alpha0    " << interval_text(r.root.alpha0, 15) << "\n"
         << "steps     " << r.root.iterations << "\n";
    out.text = text.str();
    return out;
  }

  const GcdClosedSet s = a.set.load();
  const std::size_t i =
      a.index == 0 ? s.size() - 1 : one_based(a.index, s.size(), "--index");
  out.report.inputs["set"] = to_json(s.elements());
  out.report.inputs["i"] = i + 1;
  const auto bracket = find_sign_change(s, i, o);
  text << "set       " << join(s.elements()) << "\n"
       << "index     x_" << i + 1 << "\n";
  if (!bracket) {
    text << "result    no sign change in [" << a.range_lo << ", " << a.range_hi
         << "] (inconclusive)\n";
    out.report.results = {{"found", false}};
    out.text = text.str();
    return out;
  }
  const RootIsolation root = bisect_root(s, i, *bracket, o);
  text << "bracket   [" << bracket->lo.to_string(12) << ", " << bracket->hi.to_string(12)
       << "]\n"
       << "alpha0    " << interval_text(root.alpha0, 15) << "\n"
       << "steps     " << root.iterations << "\n";
  out.report.results = {{"found", true},
                        {"bracket", to_json(*bracket)},
                        {"alpha0", to_json(root.alpha0)},
                        {"iterations", root.iterations}};
  out.text = text.str();
  return out;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  SetSource set;
  std::string alpha = "1";
  bool dot = false;
};

Output cmd_analyze(const AnalyzeArgs& a, const Globals& g) {
  const GcdClosedSet s = a.set.load();
  const Rational alpha = parse_rational(a.alpha);
  const SingularityVerdict v = is_singular_power_lcm(s, alpha, search_options(g));

  Output out;
  out.report.command = "analyze";
  out.report.inputs = {{"set", to_json(s.elements())}, {"alpha", to_fraction_string(alpha)}};
  out.report.results = to_json(v);

  std::ostringstream text;
  text << "set       " << join(s.elements()) << "\n"
       << "alpha     " << to_fraction_string(alpha) << "\n";
  if (v.exact) {
    const Rational product = det_product(s, alpha);
    const Rational meet = det_direct(meet_matrix(s, ArithFn::reciprocal_power(alpha)));
    const Rational join_det = det_direct(join_matrix(s, ArithFn::power(alpha)));
    for (std::size_t i = 0; i < s.size(); ++i) {
      text << "Psi(x_" << i + 1 << ")  " << to_fraction_string(v.psi[i]) << "\n";
    }
    text << "det (S)_{1/N^a}  " << to_fraction_string(meet) << "\n"
         << "product of Psi   " << to_fraction_string(product) << "\n"
         << "det [S]_{N^a}    " << to_fraction_string(join_det) << "\n";
    out.report.results["det_product"] = to_fraction_string(product);
    out.report.results["det_meet"] = to_fraction_string(meet);
    out.report.results["det_join"] = to_fraction_string(join_det);
  }
  text << "verdict   " << verdict_name(v.kind) << (v.exact ? "" : " (certified numeric)");
  if (!v.witnesses.empty()) {
    text << ", witnesses";
    for (auto w : v.witnesses) text << " x_" << w + 1;
  }
  text << "\n";

  if (a.dot || g.format == "dot") {
    std::vector<std::string> labels;
    for (const auto& x : s.elements()) labels.push_back(x.get_str());
    out.dot = emit_dot(divisibility_poset(s), labels);
    if (a.dot) text << "\n" << *out.dot;
  }
  out.text = text.str();
  return out;
}

// ---- realize ----------------------------------------------------------------

struct RealizeArgs {
  StructureSource structure;
  std::string primes;
  std::vector<std::string> inflations;
};

Output cmd_realize(const RealizeArgs& a) {
  const Poset l = a.structure.load();
  std::optional<std::vector<BigInt>> primes;
  if (!a.primes.empty()) primes = parse_integers(a.primes);
  Realization r = realize_squarefree(l, primes);

  Output out;
  out.report.command = "realize";
  out.report.inputs = {{"structure", to_json(l)}};
  Json steps = Json::array();
  for (const auto& item : a.inflations) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--inflate expects i:r, got '" + item + "'");
    long i = 0;
    long power = 0;
    try {
      i = std::stol(item.substr(0, colon));
      power = std::stol(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("--inflate expects i:r, got '" + item + "'");
    }
    if (i < 1 || static_cast<std::size_t>(i) > r.base.size()) {
      throw Error(ErrorCode::kBadIndex, "inflation index " + std::to_string(i) + " out of range");
    }
    if (power < 1) throw UsageError("inflation power must be >= 1");
    r = inflate_realization(r, static_cast<std::size_t>(i - 1), static_cast<unsigned>(power));
    steps.push_back({{"i", i}, {"r", power}});
  }
  out.report.inputs["inflate"] = steps;

  Json prime_of = Json::array();
  for (const auto& p : r.primes) prime_of.push_back(p.get_str());
  Json element_of = Json::array();
  for (auto e : r.element_of) element_of.push_back(e);
  out.report.results = {{"set", to_json(r.base.elements())},
                        {"element_primes", prime_of},
                        {"element_of", element_of}};

  std::ostringstream text;
  text << join(r.base.elements()) << "\n";
  out.text = text.str();
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < l.size(); ++e) labels.push_back(r.value_of(e).get_str());
  out.dot = emit_dot(l, labels);
  return out;
}

// ---- corpus -----------------------------------------------------------------

struct CorpusArgs {
  std::size_t count = 10;
  std::size_t max_size = 8;
  bool odd = false;
  bool factor_closed = false;
};

Output cmd_corpus(const CorpusArgs& a, const Globals& g) {
  CorpusOptions options;
  options.max_size = a.max_size;
  options.odd = a.odd;
  Corpus corpus(g.seed, options);
  Output out;
  out.report.command = "corpus";
  out.report.inputs = {{"count", a.count},
                       {"seed", g.seed},
                       {"odd", a.odd},
                       {"factor_closed", a.factor_closed},
                       {"max_size", a.max_size}};
  Json sets = Json::array();
  std::ostringstream text;
  for (std::size_t t = 0; t < a.count; ++t) {
    const GcdClosedSet s = a.factor_closed ? corpus.next_factor_closed() : corpus.next_gcd_closed();
    sets.push_back(to_json(s.elements()));
    text << join(s.elements(), ",") << "\n";
  }
  out.report.results = {{"sets", sets}};
  out.text = text.str();
  return out;
}

void add_set_options(CLI::App* cmd, SetSource& src) {
  cmd->add_option("--set", src.file, "File with one integer per line");
  cmd->add_option("--values", src.values, "Inline integers, e.g. 1,3,5,45");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meet semilattices, LCM matrices and singular exponents", "lcmlat"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--precision", g.precision, "Working precision in bits")
      ->capture_default_str()
      ->check(CLI::Range(32, 1 << 20));
  app.add_option("--tol", g.tol, "Width of the final alpha interval")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--r-max", g.r_max, "Largest inflation power tried")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--output", g.output, "Write to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::function<Output()> action;

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate meet semilattices and filter them");
  enumerate->add_option("-n", enum_args.n, "Number of elements")
      ->required()
      ->check(CLI::Range(1, static_cast<int>(kMaxEnumerationSize)));
  enumerate->add_option("--workers", enum_args.workers, "Worker threads (0: all cores)");
  enumerate->add_flag("--representatives", enum_args.representatives,
                      "Print every surviving structure");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(enum_args); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-counterexample",
                                    "Check the nine-element odd set with a vanishing Psi");
  verify->add_option("--alpha", verify_args.alpha, "Integer exponent")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--dual", verify_args.dual, "Also build the lcm-closed dual set");
  verify->add_option("--q", verify_args.q, "Multiply the two largest elements by q");
  verify->add_option("--range-hi", verify_args.range_hi, "Upper end of the alpha scan for --q");
  verify->add_option("--grid", verify_args.grid, "Grid points of the alpha scan for --q");
  verify->callback([&] { action = [&] { return cmd_verify(verify_args, g); }; });

  FindAlphaArgs find_args;
  auto* find = app.add_subcommand("find-alpha", "Locate a singular exponent alpha0");
  add_set_options(find, find_args.set);
  find->add_option("--structure", find_args.structure.file,
                   "Poset file; builds a singular instance from the structure");
  find->add_option("--class", find_args.structure.tag, "Built-in structure 8_A .. 8_J");
  find->add_flag("--relabel", find_args.structure.relabel,
                 "Renumber a poset file that is not indexed by a linear extension");
  find->add_option("--index", find_args.index, "1-based index i of x_i (default: last)");
  find->add_option("--range-lo", find_args.range_lo, "Lower end of the alpha scan")
      ->capture_default_str();
  find->add_option("--range-hi", find_args.range_hi, "Upper end of the alpha scan")
      ->capture_default_str();
  find->add_option("--grid", find_args.grid, "Grid points of the alpha scan")
      ->capture_default_str();
  find->callback([&] { action = [&] { return cmd_find_alpha(find_args, g); }; });

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Psi values, determinants and singularity");
  add_set_options(analyze, analyze_args.set);
  analyze->add_option("--alpha", analyze_args.alpha, "Exponent, e.g. 2, 1/3 or 0.25")
      ->capture_default_str();
  analyze->add_flag("--dot", analyze_args.dot, "Append the divisibility diagram as DOT");
  analyze->callback([&] { action = [&] { return cmd_analyze(analyze_args, g); }; });

  RealizeArgs realize_args;
  auto* realize = app.add_subcommand("realize", "Squarefree integer realization of a structure");
  realize->add_option("poset", realize_args.structure.file, "Poset file");
  realize->add_option("--class", realize_args.structure.tag, "Built-in structure 8_A .. 8_J");
  realize->add_flag("--relabel", realize_args.structure.relabel,
                    "Renumber a poset file that is not indexed by a linear extension");
  realize->add_option("--primes", realize_args.primes, "Primes for elements 2..n, e.g. 3,5,7");
  realize->add_option("--inflate", realize_args.inflations,
                      "i:r multiplies the multiples of x_i by p^r (repeatable)");
  realize->callback([&] { action = [&] { return cmd_realize(realize_args); }; });

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand("corpus", "Seeded random gcd-closed sets");
  corpus->add_option("--count", corpus_args.count, "Number of sets")->capture_default_str();
  corpus->add_option("--max-size", corpus_args.max_size, "Largest set size (<= 8)")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));
  corpus->add_flag("--odd", corpus_args.odd, "Odd sets only");
  corpus->add_flag("--factor-closed", corpus_args.factor_closed, "Factor-closed sets instead");
  corpus->callback([&] { action = [&] { return cmd_corpus(corpus_args, g); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    const Output result = action();
    std::string rendered;
    if (g.format == "json") {
      rendered = result.report.to_json().dump(2) + "\n";
    } else if (g.format == "dot") {
      if (!result.dot) throw UsageError("this command has no DOT output");
      rendered = *result.dot;
    } else {
      rendered = result.text;
    }
    if (g.output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(g.output);
      if (!file) throw UsageError("cannot write '" + g.output + "'");
      file << rendered;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace lcmlat::cli
