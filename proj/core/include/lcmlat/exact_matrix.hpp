#pragma once

#include <cstddef>
#include <vector>

#include "lcmlat/number_theory.hpp"

namespace lcmlat {

/// Square matrix of exact rationals, row major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// diag(d) * m * diag(d).
ExactMatrix scale_symmetric(const ExactMatrix& m, const std::vector<Rational>& d);

/// Exact determinant: each row is cleared of denominators, then fraction-free
/// Bareiss elimination runs over the integers. The empty matrix has det 1.
Rational det_direct(const ExactMatrix& m);

}  // namespace lcmlat
