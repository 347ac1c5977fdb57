#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcmlat/integer_sets.hpp"
#include "lcmlat/interval.hpp"

namespace lcmlat {

struct SearchOptions {
  /// Working precision in bits; doubled on demand up to max_precision.
  Precision precision = kDefaultPrecision;
  Precision max_precision = 8192;
  double tol = 1e-9;
  unsigned r_max = 64;
  double range_lo = 1.0 / 1024.0;
  double range_hi = 64.0;
  std::size_t grid = 64;
};

/// h(α) = Ψ_{S,1/N^α}(x_i) = Σ_j μ(x_j, x_i) x_j^{-α}, prepared for repeated
/// evaluation at one index.
class PsiEvaluator {
 public:
  PsiEvaluator(const GcdClosedSet& s, std::size_t i);

  std::size_t index() const noexcept { return i_; }
  const std::vector<BigInt>& divisors() const noexcept { return values_; }
  const std::vector<std::int64_t>& weights() const noexcept { return mu_; }

  /// Enclosure of h on the interval alpha (α >= 0).
  CertifiedReal operator()(const CertifiedReal& alpha) const;
  CertifiedReal operator()(const BigFloat& alpha, Precision precision) const;

  /// Sign of h at alpha, doubling the precision until it is certified.
  /// Returns kIndeterminate once max_precision is exceeded.
  Sign sign_at(const BigFloat& alpha, Precision precision, Precision max_precision) const;

 private:
  std::size_t i_;
  std::vector<BigInt> values_;
  std::vector<std::int64_t> mu_;
};

CertifiedReal h_eval(const GcdClosedSet& s, std::size_t i, const BigFloat& alpha,
                     Precision precision = kDefaultPrecision);
CertifiedReal h_eval(const GcdClosedSet& s, std::size_t i, const Rational& alpha,
                     Precision precision = kDefaultPrecision);

/// d/dα (x_k^α h(α)) at α = 0, which is -Σ_j μ(x_j, x_i) log(x_j / x_k).
/// Throws kNoPositiveMobius unless μ(x_k, x_i) > 0.
CertifiedReal h_derivative_at_zero(const GcdClosedSet& s, std::size_t i, std::size_t k,
                                   Precision precision = kDefaultPrecision);

/// Same derivative for the inflated set S(r) obtained from a realization by
/// inflating base index i with power r (r = 0 leaves the set unchanged).
/// i and k are base indices of the realization.
CertifiedReal h_derivative_at_zero(const Realization& realization, std::size_t i,
                                   std::size_t k, unsigned r,
                                   Precision precision = kDefaultPrecision);

struct AlphaBracket {
  BigFloat lo;
  BigFloat hi;
  std::size_t i = 0;
  std::optional<std::size_t> k;
  Sign sign_lo = Sign::kIndeterminate;
  Sign sign_hi = Sign::kIndeterminate;
};

/// Scans a geometric grid over [range_lo, range_hi] and returns the first
/// adjacent pair with certified opposite signs. Throws kPrecisionExhausted
/// if a grid sign cannot be certified, kInvalidArgument for a bad range.
std::optional<AlphaBracket> find_sign_change(const GcdClosedSet& s, std::size_t i,
                                             const SearchOptions& options = {});

struct RootIsolation {
  /// [lo, hi] with width <= tol; h has certified opposite signs at the ends.
  CertifiedReal alpha0;
  Sign sign_lo = Sign::kIndeterminate;
  Sign sign_hi = Sign::kIndeterminate;
  std::size_t iterations = 0;
};

/// Bisection on the certified sign. A midpoint whose sign stays
/// indeterminate is nudged inside the bracket before giving up with
/// kPrecisionExhausted.
RootIsolation bisect_root(const GcdClosedSet& s, std::size_t i, const AlphaBracket& bracket,
                          const SearchOptions& options = {});

struct SearchReport {
  GcdClosedSet set;
  std::size_t i = 0;
  std::size_t k = 0;
  RootIsolation root;
  AlphaBracket bracket;
  unsigned r_used = 0;
  /// Source element whose Ψ vanishes, and the prime used to inflate it.
  std::size_t element = 0;
  BigInt prime;
  CertifiedReal derivative;
};

/// Builds a set with divisibility order isomorphic to l and a certified
/// enclosure of an exponent α₀ > 0 at which the power LCM matrix is singular.
/// Throws kNotSemilattice, kIsWedgeTree or kRMaxExceeded.
SearchReport construct_singular_instance(const Poset& l, const SearchOptions& options = {});

}  // namespace lcmlat
