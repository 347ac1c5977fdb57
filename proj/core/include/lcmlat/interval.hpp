#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "lcmlat/number_theory.hpp"

namespace lcmlat {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(Precision precision = kDefaultPrecision);
  BigFloat(double value, Precision precision);
  /// Decimal or binary-exponent string, rounded in direction rnd.
  BigFloat(const std::string& text, Precision precision, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  Precision precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits,
  /// rounded in direction rnd.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

 private:
  mpfr_t value_;
};

enum class Sign { kNegative, kZero, kPositive, kIndeterminate };

const char* sign_name(Sign s) noexcept;

/// Closed interval [lo, hi] known to contain a real number. Every operation
/// rounds lo down and hi up.
class CertifiedReal {
 public:
  explicit CertifiedReal(Precision precision = kDefaultPrecision);

  static CertifiedReal point(const BigFloat& x, Precision precision);
  static CertifiedReal from_integer(const BigInt& x, Precision precision);
  static CertifiedReal from_rational(const Rational& x, Precision precision);
  /// Requires lo <= hi.
  static CertifiedReal hull(const BigFloat& lo, const BigFloat& hi);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  Precision precision() const noexcept { return std::max(lo_.precision(), hi_.precision()); }

  Sign sign() const;
  bool contains(const Rational& q) const;
  bool contains(const BigFloat& x) const;
  /// hi - lo, rounded up.
  BigFloat width() const;
  BigFloat midpoint() const;

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  CertifiedReal scaled(long factor) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Natural logarithm; requires lo > 0.
CertifiedReal log(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);

}  // namespace lcmlat
