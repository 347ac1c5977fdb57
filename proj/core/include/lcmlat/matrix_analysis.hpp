#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lcmlat/alpha_search.hpp"
#include "lcmlat/exact_matrix.hpp"
#include "lcmlat/integer_sets.hpp"

namespace lcmlat {

/// m ↦ m^α (power) or m ↦ m^{-α} (reciprocal_power) for a rational α.
/// Exact evaluation needs an integer α, or an argument that is a perfect
/// power of α's denominator; otherwise kNonIntegerAlphaInExactMode.
class ArithFn {
 public:
  enum class Kind { kPower, kReciprocalPower };

  static ArithFn power(const Rational& alpha) { return ArithFn(Kind::kPower, alpha); }
  static ArithFn reciprocal_power(const Rational& alpha) {
    return ArithFn(Kind::kReciprocalPower, alpha);
  }

  Kind kind() const noexcept { return kind_; }
  const Rational& alpha() const noexcept { return alpha_; }

  Rational operator()(const BigInt& m) const;

 private:
  ArithFn(Kind kind, Rational alpha) : kind_(kind), alpha_(std::move(alpha)) {}

  Kind kind_;
  Rational alpha_;
};

/// m^α exactly; see ArithFn.
Rational exact_power(const BigInt& m, const Rational& alpha);

/// (S)_f: entry (i, j) = f(gcd(x_i, x_j)).
ExactMatrix meet_matrix(const GcdClosedSet& s, const ArithFn& f);
/// [S]_f: entry (i, j) = f(lcm(x_i, x_j)).
ExactMatrix join_matrix(const GcdClosedSet& s, const ArithFn& f);

/// Ψ_{S,1/N^α}(x_i) = Σ_{x_k | x_i} μ(x_k, x_i) / x_k^α, exactly.
Rational psi(const GcdClosedSet& s, const Rational& alpha, std::size_t i);
std::vector<Rational> psi_vector(const GcdClosedSet& s, const Rational& alpha);

/// Ψ(x_i) over the common denominator x_i^α: numerators μ(x_k, x_i)·(x_i/x_k)^α
/// for every x_k with nonzero μ, from k = i downwards.
struct PsiExpansion {
  BigInt denominator;
  std::vector<std::size_t> indices;
  std::vector<BigInt> numerators;
  BigInt numerator_sum;
};
PsiExpansion psi_expansion(const GcdClosedSet& s, unsigned long alpha, std::size_t i);

inline constexpr std::size_t kDefaultDivisorBudget = 1U << 20;

/// Ψ(x_i) as Σ_z (N^{-α} * μ)(z) over divisors z of x_i that divide no
/// earlier x_j, with μ the number-theoretic Möbius function. Throws
/// kFactoringTooHard when x_i cannot be factored or has more than
/// divisor_budget divisors.
Rational psi_dirichlet(const GcdClosedSet& s, const Rational& alpha, std::size_t i,
                       std::size_t divisor_budget = kDefaultDivisorBudget);

/// Π_i Ψ(x_i), equal to det (S)_{1/N^α}.
Rational det_product(const GcdClosedSet& s, const Rational& alpha);

struct SingularityVerdict {
  enum class Kind { kNonsingular, kSingular, kIndeterminate };
  Kind kind = Kind::kNonsingular;
  /// Indices with Ψ = 0 (exact) or with an enclosure containing 0 (numeric).
  std::vector<std::size_t> witnesses;
  bool exact = true;
  /// Ψ values in exact mode.
  std::vector<Rational> psi;
};

const char* verdict_name(SingularityVerdict::Kind kind) noexcept;

/// Singular iff some Ψ(x_i) vanishes. Exact when α allows exact powers,
/// certified numeric otherwise; a numeric enclosure that still contains 0
/// at max_precision gives kIndeterminate.
SingularityVerdict is_singular_power_lcm(const GcdClosedSet& s, const Rational& alpha,
                                         const SearchOptions& options = {});

/// [S]_{N^α} == diag(x^α) (S)_{1/N^α} diag(x^α), entrywise.
bool scaling_identity_check(const GcdClosedSet& s, const Rational& alpha);

struct SingularCertificate {
  GcdClosedSet set;
  BigInt number;
  PsiExpansion expansion;
};

/// Certificate that max(S) is a singular number: Ψ_{S,1/N}(x_n) = 0.
std::optional<SingularCertificate> singular_number_certificate(const GcdClosedSet& s);

/// Compares det [S']_{N^α} for S' = {x_n / x_i} against x_n^n and x_n^{nα}
/// times det (S)_{1/N^α}.
struct DualDeterminantCheck {
  std::vector<BigInt> dual;
  Rational det_dual_join;
  Rational det_reciprocal_meet;
  bool holds_with_xn_pow_n = false;
  bool holds_with_xn_pow_n_alpha = false;
};
DualDeterminantCheck dual_determinant_check(const GcdClosedSet& s, unsigned long alpha);

}  // namespace lcmlat
