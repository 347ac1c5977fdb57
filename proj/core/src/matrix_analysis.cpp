#include "lcmlat/matrix_analysis.hpp"

#include <functional>
#include <span>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

unsigned long small_exponent(const BigInt& e) {
  if (!e.fits_ulong_p()) {
    throw Error(ErrorCode::kInvalidExponent, "exponent " + e.get_str() + " is too large");
  }
  return e.get_ui();
}

void require_index(const GcdClosedSet& s, std::size_t i) {
  if (i >= s.size()) throw Error(ErrorCode::kBadIndex, "index " + std::to_string(i) + " out of range");
}

template <typename Combine>
ExactMatrix pairwise_matrix(std::span<const BigInt> xs, const ArithFn& f, Combine combine) {
  ExactMatrix m(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      m.at(i, j) = f(combine(xs[i], xs[j]));
      m.at(j, i) = m(i, j);
    }
  }
  return m;
}

BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
BigInt lcm_of(const BigInt& a, const BigInt& b) { return lcm(a, b); }

}  // namespace

Rational exact_power(const BigInt& m, const Rational& alpha) {
  const BigInt& p = alpha.get_num();
  const BigInt& q = alpha.get_den();
  BigInt base = m;
  if (q != 1 && m != 1) {
    const unsigned long degree = small_exponent(q);
    if (mpz_root(base.get_mpz_t(), m.get_mpz_t(), degree) == 0) {
      throw Error(ErrorCode::kNonIntegerAlphaInExactMode,
                  m.get_str() + "^" + alpha.get_str() + " is irrational");
    }
  }
  const BigInt magnitude = pow(base, small_exponent(abs(p)));
  Rational out = p >= 0 ? Rational(magnitude) : Rational(BigInt(1), magnitude);
  out.canonicalize();
  return out;
}

Rational ArithFn::operator()(const BigInt& m) const {
  return exact_power(m, kind_ == Kind::kPower ? alpha_ : Rational(-alpha_));
}

ExactMatrix meet_matrix(const GcdClosedSet& s, const ArithFn& f) {
  return pairwise_matrix(s.elements(), f, gcd_of);
}

ExactMatrix join_matrix(const GcdClosedSet& s, const ArithFn& f) {
  return pairwise_matrix(s.elements(), f, lcm_of);
}

Rational psi(const GcdClosedSet& s, const Rational& alpha, std::size_t i) {
  require_index(s, i);
  const auto column = mobius_column(divisibility_poset(s), i);
  Rational sum = 0;
  for (std::size_t k = 0; k <= i; ++k) {
    if (column[k] != 0) sum += Rational(column[k]) * exact_power(s[k], -alpha);
  }
  return sum;
}

std::vector<Rational> psi_vector(const GcdClosedSet& s, const Rational& alpha) {
  const MobiusTable mu = mobius(divisibility_poset(s));
  std::vector<Rational> reciprocal(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) reciprocal[k] = exact_power(s[k], -alpha);
  std::vector<Rational> out(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if (mu(k, i) != 0) out[i] += Rational(mu(k, i)) * reciprocal[k];
    }
  }
  return out;
}

PsiExpansion psi_expansion(const GcdClosedSet& s, unsigned long alpha, std::size_t i) {
  require_index(s, i);
  const auto column = mobius_column(divisibility_poset(s), i);
  PsiExpansion out;
  out.denominator = pow(s[i], alpha);
  out.numerator_sum = 0;
  for (std::size_t k = i + 1; k-- > 0;) {
    if (column[k] == 0) continue;
    BigInt term = pow(BigInt(s[i] / s[k]), alpha) * column[k];
    out.numerator_sum += term;
    out.indices.push_back(k);
    out.numerators.push_back(std::move(term));
  }
  return out;
}

Rational psi_dirichlet(const GcdClosedSet& s, const Rational& alpha, std::size_t i,
                       std::size_t divisor_budget) {
  require_index(s, i);
  const Factorization f = factorize(s[i]);
  std::size_t count = 1;
  for (const auto& pe : f) {
    count *= pe.second + 1;
    if (count > divisor_budget) {
      throw Error(ErrorCode::kFactoringTooHard,
                  s[i].get_str() + " has more than " + std::to_string(divisor_budget) + " divisors");
    }
  }

  // (N^{-α} * μ)(z) = Σ over squarefree d | z of μ(d) (z/d)^{-α}.
  auto convolved = [&](const BigInt& z, const std::vector<unsigned>& exps) {
    Rational acc = 0;
    std::vector<std::size_t> support;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      if (exps[t] > 0) support.push_back(t);
    }
    for (std::size_t subset = 0; subset < (std::size_t{1} << support.size()); ++subset) {
      BigInt d = 1;
      int parity = 1;
      for (std::size_t b = 0; b < support.size(); ++b) {
        if ((subset >> b) & 1U) {
          d *= f[support[b]].first;
          parity = -parity;
        }
      }
      acc += Rational(parity) * exact_power(BigInt(z / d), -alpha);
    }
    return acc;
  };

  Rational sum = 0;
  std::vector<unsigned> exps(f.size(), 0);
  std::function<void(std::size_t, const BigInt&)> walk = [&](std::size_t t, const BigInt& z) {
    if (t == f.size()) {
      for (std::size_t j = 0; j < i; ++j) {
        if (mpz_divisible_p(s[j].get_mpz_t(), z.get_mpz_t()) != 0) return;
      }
      sum += convolved(z, exps);
      return;
    }
    BigInt power = z;
    for (unsigned e = 0; e <= f[t].second; ++e) {
      exps[t] = e;
      walk(t + 1, power);
      power *= f[t].first;
    }
    exps[t] = 0;
  };
  walk(0, BigInt(1));
  return sum;
}

Rational det_product(const GcdClosedSet& s, const Rational& alpha) {
  Rational out = 1;
  for (const auto& value : psi_vector(s, alpha)) out *= value;
  return out;
}

const char* verdict_name(SingularityVerdict::Kind kind) noexcept {
  switch (kind) {
    case SingularityVerdict::Kind::kNonsingular: return "nonsingular";
    case SingularityVerdict::Kind::kSingular: return "singular";
    case SingularityVerdict::Kind::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

SingularityVerdict is_singular_power_lcm(const GcdClosedSet& s, const Rational& alpha,
                                         const SearchOptions& options) {
  SingularityVerdict verdict;
  try {
    verdict.psi = psi_vector(s, alpha);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (verdict.psi[i] == 0) verdict.witnesses.push_back(i);
    }
    verdict.kind = verdict.witnesses.empty() ? SingularityVerdict::Kind::kNonsingular
                                             : SingularityVerdict::Kind::kSingular;
    return verdict;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonIntegerAlphaInExactMode) throw;
  }

  verdict.exact = false;
  verdict.psi.clear();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PsiEvaluator h(s, i);
    Sign sign = Sign::kIndeterminate;
    for (Precision prec = options.precision; prec <= options.max_precision; prec *= 2) {
      sign = h(CertifiedReal::from_rational(alpha, prec)).sign();
      if (sign != Sign::kIndeterminate) break;
    }
    if (sign == Sign::kIndeterminate || sign == Sign::kZero) verdict.witnesses.push_back(i);
  }
  verdict.kind = verdict.witnesses.empty() ? SingularityVerdict::Kind::kNonsingular
                                           : SingularityVerdict::Kind::kIndeterminate;
  return verdict;
}

bool scaling_identity_check(const GcdClosedSet& s, const Rational& alpha) {
  std::vector<Rational> d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d[i] = exact_power(s[i], alpha);
  return join_matrix(s, ArithFn::power(alpha)) ==
         scale_symmetric(meet_matrix(s, ArithFn::reciprocal_power(alpha)), d);
}

std::optional<SingularCertificate> singular_number_certificate(const GcdClosedSet& s) {
  if (s.size() == 0) return std::nullopt;
  PsiExpansion expansion = psi_expansion(s, 1, s.size() - 1);
  if (expansion.numerator_sum != 0) return std::nullopt;
  return SingularCertificate{s, s.max(), std::move(expansion)};
}

DualDeterminantCheck dual_determinant_check(const GcdClosedSet& s, unsigned long alpha) {
  DualDeterminantCheck out;
  out.dual = dual_lcm_closed(s);
  const Rational a(alpha);
  out.det_dual_join = det_direct(pairwise_matrix(out.dual, ArithFn::power(a), lcm_of));
  out.det_reciprocal_meet = det_direct(meet_matrix(s, ArithFn::reciprocal_power(a)));
  const unsigned long n = s.size();
  const Rational top_n(pow(s.max(), n));
  const Rational top_n_alpha(pow(s.max(), n * alpha));
  out.holds_with_xn_pow_n = out.det_dual_join == top_n * out.det_reciprocal_meet;
  out.holds_with_xn_pow_n_alpha = out.det_dual_join == top_n_alpha * out.det_reciprocal_meet;
  return out;
}

}  // namespace lcmlat
