#include "lcmlat/interval.hpp"

#include <algorithm>

#include "lcmlat/error.hpp"

namespace lcmlat {

BigFloat::BigFloat(Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& text, Precision precision, mpfr_rnd_t rnd) {
  mpfr_init2(value_, precision);
  if (mpfr_set_str(value_, text.c_str(), 10, rnd) != 0) {
    mpfr_clear(value_);
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other) {}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  const std::string format = "%." + std::to_string(std::max(digits - 1, 0)) + "R*e";
  const int len = mpfr_snprintf(nullptr, 0, format.c_str(), rnd, value_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), format.c_str(), rnd, value_);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

const char* sign_name(Sign s) noexcept {
  switch (s) {
    case Sign::kNegative: return "negative";
    case Sign::kZero: return "zero";
    case Sign::kPositive: return "positive";
    case Sign::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

CertifiedReal::CertifiedReal(Precision precision) : lo_(precision), hi_(precision) {}

CertifiedReal CertifiedReal::point(const BigFloat& x, Precision precision) {
  CertifiedReal r(precision);
  mpfr_set(r.lo_.get(), x.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), x.get(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_integer(const BigInt& x, Precision precision) {
  CertifiedReal r(precision);
  mpfr_set_z(r.lo_.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), x.get_mpz_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_rational(const Rational& x, Precision precision) {
  CertifiedReal r(precision);
  mpfr_set_q(r.lo_.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), x.get_mpq_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::hull(const BigFloat& lo, const BigFloat& hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "interval bounds out of order");
  CertifiedReal r(std::max(lo.precision(), hi.precision()));
  mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
  return r;
}

Sign CertifiedReal::sign() const {
  if (mpfr_sgn(lo_.get()) > 0) return Sign::kPositive;
  if (mpfr_sgn(hi_.get()) < 0) return Sign::kNegative;
  if (mpfr_zero_p(lo_.get()) != 0 && mpfr_zero_p(hi_.get()) != 0) return Sign::kZero;
  return Sign::kIndeterminate;
}

bool CertifiedReal::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool CertifiedReal::contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }

BigFloat CertifiedReal::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat CertifiedReal::midpoint() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  const Precision prec = std::max(a.precision(), b.precision());
  CertifiedReal r(prec);
  BigFloat down(prec);
  BigFloat up(prec);
  bool first = true;
  for (const BigFloat* x : {&a.lo_, &a.hi_}) {
    for (const BigFloat* y : {&b.lo_, &b.hi_}) {
      mpfr_mul(down.get(), x->get(), y->get(), MPFR_RNDD);
      mpfr_mul(up.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || down < r.lo_) r.lo_ = down;
      if (first || r.hi_ < up) r.hi_ = up;
      first = false;
    }
  }
  return r;
}

CertifiedReal CertifiedReal::scaled(long factor) const {
  CertifiedReal r(precision());
  if (factor >= 0) {
    mpfr_mul_si(r.lo_.get(), lo_.get(), factor, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), hi_.get(), factor, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_.get(), hi_.get(), factor, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), lo_.get(), factor, MPFR_RNDU);
  }
  return r;
}

CertifiedReal log(const CertifiedReal& x) {
  if (mpfr_sgn(x.lo().get()) <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "log of an interval reaching 0");
  }
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return CertifiedReal::hull(lo, hi);
}

CertifiedReal exp(const CertifiedReal& x) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
  return CertifiedReal::hull(lo, hi);
}

}  // namespace lcmlat
