#include "lcmlat/alpha_search.hpp"

#include <cmath>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

Precision alpha_precision(const SearchOptions& options) {
  return std::max<Precision>(options.precision, 128);
}

BigFloat scaled_between(const BigFloat& lo, const BigFloat& hi, double t, Precision prec) {
  BigFloat out(prec);
  mpfr_sub(out.get(), hi.get(), lo.get(), MPFR_RNDN);
  mpfr_mul_d(out.get(), out.get(), t, MPFR_RNDN);
  mpfr_add(out.get(), out.get(), lo.get(), MPFR_RNDN);
  return out;
}

bool definite(Sign s) { return s == Sign::kNegative || s == Sign::kPositive; }

}  // namespace

PsiEvaluator::PsiEvaluator(const GcdClosedSet& s, std::size_t i) : i_(i) {
  if (i >= s.size()) throw Error(ErrorCode::kBadIndex, "index " + std::to_string(i) + " out of range");
  const auto column = mobius_column(divisibility_poset(s), i);
  for (std::size_t j = 0; j <= i; ++j) {
    if (column[j] == 0) continue;
    values_.push_back(s[j]);
    mu_.push_back(column[j]);
  }
}

CertifiedReal PsiEvaluator::operator()(const CertifiedReal& alpha) const {
  const Precision prec = alpha.precision();
  CertifiedReal sum(prec);
  for (std::size_t t = 0; t < values_.size(); ++t) {
    const CertifiedReal term = exp(-(alpha * log(CertifiedReal::from_integer(values_[t], prec))));
    sum = sum + term.scaled(static_cast<long>(mu_[t]));
  }
  return sum;
}

CertifiedReal PsiEvaluator::operator()(const BigFloat& alpha, Precision precision) const {
  return (*this)(CertifiedReal::point(alpha, precision));
}

Sign PsiEvaluator::sign_at(const BigFloat& alpha, Precision precision,
                           Precision max_precision) const {
  for (Precision prec = precision; prec <= max_precision; prec *= 2) {
    const Sign s = (*this)(alpha, prec).sign();
    if (s != Sign::kIndeterminate) return s;
  }
  return Sign::kIndeterminate;
}

CertifiedReal h_eval(const GcdClosedSet& s, std::size_t i, const BigFloat& alpha,
                     Precision precision) {
  return PsiEvaluator(s, i)(alpha, precision);
}

CertifiedReal h_eval(const GcdClosedSet& s, std::size_t i, const Rational& alpha,
                     Precision precision) {
  return PsiEvaluator(s, i)(CertifiedReal::from_rational(alpha, precision));
}

CertifiedReal h_derivative_at_zero(const GcdClosedSet& s, std::size_t i, std::size_t k,
                                   Precision precision) {
  if (i >= s.size() || k >= s.size()) throw Error(ErrorCode::kBadIndex, "index out of range");
  const auto column = mobius_column(divisibility_poset(s), i);
  if (k == i || column[k] <= 0) {
    throw Error(ErrorCode::kNoPositiveMobius,
                "mu(x_k, x_i) is not positive for k = " + std::to_string(k));
  }
  const CertifiedReal log_k = log(CertifiedReal::from_integer(s[k], precision));
  CertifiedReal sum(precision);
  for (std::size_t j = 0; j <= i; ++j) {
    if (column[j] == 0) continue;
    const CertifiedReal ratio = log(CertifiedReal::from_integer(s[j], precision)) - log_k;
    sum = sum - ratio.scaled(static_cast<long>(column[j]));
  }
  return sum;
}

CertifiedReal h_derivative_at_zero(const Realization& realization, std::size_t i,
                                   std::size_t k, unsigned r, Precision precision) {
  if (r == 0) return h_derivative_at_zero(realization.base, i, k, precision);
  if (k >= realization.base.size()) throw Error(ErrorCode::kBadIndex, "index out of range");
  const Realization inflated = inflate_realization(realization, i, r);
  return h_derivative_at_zero(inflated.base, inflated.base_index[realization.element_of[i]],
                              inflated.base_index[realization.element_of[k]], precision);
}

std::optional<AlphaBracket> find_sign_change(const GcdClosedSet& s, std::size_t i,
                                             const SearchOptions& options) {
  if (!(options.range_lo > 0) || !(options.range_lo < options.range_hi) || options.grid < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < range_lo < range_hi and grid >= 2");
  }
  const PsiEvaluator h(s, i);
  const Precision prec = alpha_precision(options);
  const double ratio = std::log(options.range_hi / options.range_lo);

  std::optional<BigFloat> prev_alpha;
  Sign prev_sign = Sign::kIndeterminate;
  for (std::size_t g = 0; g < options.grid; ++g) {
    double a = options.range_lo * std::exp(ratio * static_cast<double>(g) /
                                           static_cast<double>(options.grid - 1));
    if (g == 0) a = options.range_lo;
    if (g + 1 == options.grid) a = options.range_hi;
    BigFloat alpha(a, prec);
    const Sign sign = h.sign_at(alpha, options.precision, options.max_precision);
    if (!definite(sign)) {
      throw Error(ErrorCode::kPrecisionExhausted,
                  "sign of h at alpha = " + alpha.to_string(12) + " not certified");
    }
    if (prev_alpha && sign != prev_sign) {
      AlphaBracket bracket{*prev_alpha, alpha, i, std::nullopt, prev_sign, sign};
      return bracket;
    }
    prev_alpha = std::move(alpha);
    prev_sign = sign;
  }
  return std::nullopt;
}

RootIsolation bisect_root(const GcdClosedSet& s, std::size_t i, const AlphaBracket& bracket,
                          const SearchOptions& options) {
  const PsiEvaluator h(s, i);
  const Precision prec = std::max({alpha_precision(options), bracket.lo.precision(),
                                   bracket.hi.precision()});
  RootIsolation out;
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_set(lo.get(), bracket.lo.get(), MPFR_RNDN);
  mpfr_set(hi.get(), bracket.hi.get(), MPFR_RNDN);
  out.sign_lo = h.sign_at(lo, options.precision, options.max_precision);
  out.sign_hi = h.sign_at(hi, options.precision, options.max_precision);
  if (!definite(out.sign_lo) || !definite(out.sign_hi) || out.sign_lo == out.sign_hi) {
    throw Error(ErrorCode::kInvalidArgument, "bracket endpoints lack certified opposite signs");
  }

  auto width = [&] {
    BigFloat w(prec);
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return w.to_double();
  };
  while (width() > options.tol) {
    std::optional<BigFloat> probe;
    Sign sign = Sign::kIndeterminate;
    for (double t : {0.5, 0.375, 0.625, 0.25, 0.75}) {
      BigFloat candidate = scaled_between(lo, hi, t, prec);
      sign = h.sign_at(candidate, options.precision, options.max_precision);
      if (definite(sign)) {
        probe = std::move(candidate);
        break;
      }
    }
    if (!probe) {
      throw Error(ErrorCode::kPrecisionExhausted,
                  "sign of h near alpha = " + lo.to_string(12) + " not certified");
    }
    if (sign == out.sign_lo) {
      lo = std::move(*probe);
    } else {
      hi = std::move(*probe);
    }
    ++out.iterations;
  }
  out.alpha0 = CertifiedReal::hull(lo, hi);
  return out;
}

SearchReport construct_singular_instance(const Poset& l, const SearchOptions& options) {
  if (!is_meet_semilattice(l)) {
    throw Error(ErrorCode::kNotSemilattice, "construction needs a meet semilattice");
  }
  if (is_wedge_tree(l)) {
    throw Error(ErrorCode::kIsWedgeTree,
                "every element covers at most one element; no singular exponent exists");
  }

  // Need μ(ξ(x), x) > 0: every other nonzero μ(·, x) then sits at a proper
  // multiple of x_ξ, so x_ξ^α h(α) tends to μ(ξ(x), x) as α grows.
  std::optional<std::size_t> chosen;
  std::size_t bottom_of = 0;
  for (std::size_t x = 0; x < l.size() && !chosen; ++x) {
    if (std::popcount(l.lower_covers(x)) < 2) continue;
    const std::size_t z = xi(l, x);
    if (mobius_column(l, x)[z] > 0) {
      chosen = x;
      bottom_of = z;
    }
  }
  if (!chosen) throw Error(ErrorCode::kNoPositiveMobius, "no element with mu(xi(x), x) > 0");
  const std::size_t x = *chosen;

  const Realization base = realize_squarefree(l);
  for (unsigned r = 1; r <= options.r_max; r *= 2) {
    const Realization inflated = inflate_realization(base, base.base_index[x], r);
    const std::size_t i = inflated.base_index[x];
    const std::size_t k = inflated.base_index[bottom_of];
    CertifiedReal derivative = h_derivative_at_zero(inflated.base, i, k, options.precision);
    if (derivative.sign() != Sign::kNegative) continue;
    auto bracket = find_sign_change(inflated.base, i, options);
    if (!bracket) continue;
    bracket->k = k;

    SearchReport report;
    report.set = inflated.base;
    report.i = i;
    report.k = k;
    report.root = bisect_root(inflated.base, i, *bracket, options);
    report.bracket = std::move(*bracket);
    report.r_used = r;
    report.element = x;
    report.prime = base.primes[x];
    report.derivative = std::move(derivative);
    return report;
  }
  throw Error(ErrorCode::kRMaxExceeded,
              "no certified sign change for r <= " + std::to_string(options.r_max));
}

}  // namespace lcmlat
