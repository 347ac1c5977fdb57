#include "lcmlat/exact_matrix.hpp"

#include <utility>

namespace lcmlat {

ExactMatrix scale_symmetric(const ExactMatrix& m, const std::vector<Rational>& d) {
  ExactMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = d[i] * m(i, j) * d[j];
  }
  return out;
}

Rational det_direct(const ExactMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_den = 1;
    for (std::size_t j = 0; j < n; ++j) row_den = lcm(row_den, m(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m(i, j).get_num() * (row_den / m(i, j).get_den());
    }
    scale *= row_den;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(n == 0 ? BigInt(1) : BigInt(a[n - 1][n - 1] * sign), scale);
  det.canonicalize();
  return det;
}

}  // namespace lcmlat
