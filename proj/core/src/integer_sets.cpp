#include "lcmlat/integer_sets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

std::vector<BigInt> sorted_unique(std::vector<BigInt> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void require_positive(std::span<const BigInt> xs) {
  for (const auto& x : xs) {
    if (x < 1) throw Error(ErrorCode::kNonPositive, x.get_str() + " is not positive");
  }
}

bool contains(std::span<const BigInt> sorted, const BigInt& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

Realization make_realization(const Poset& source, std::vector<BigInt> values,
                             std::vector<BigInt> primes) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  Realization r;
  r.source = source;
  r.primes = std::move(primes);
  r.base_index.resize(n);
  r.element_of = order;
  for (std::size_t b = 0; b < n; ++b) r.base_index[order[b]] = b;
  r.base = GcdClosedSet::from_elements(std::move(values));
  if (r.base.size() != n) {
    throw Error(ErrorCode::kBadPrimes, "realization produced repeated values");
  }
  return r;
}

}  // namespace

GcdClosedSet GcdClosedSet::from_elements(std::vector<BigInt> xs) {
  require_positive(xs);
  GcdClosedSet s;
  s.elems_ = sorted_unique(std::move(xs));
  if (!is_gcd_closed(s.elems_)) {
    throw Error(ErrorCode::kNotGcdClosed, "set is not closed under gcd");
  }
  return s;
}

std::optional<std::size_t> GcdClosedSet::index_of(const BigInt& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

GcdClosedSet gcd_closure(std::span<const BigInt> xs) {
  require_positive(xs);
  std::set<BigInt> closed(xs.begin(), xs.end());
  std::vector<BigInt> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<BigInt> added;
    const std::vector<BigInt> current(closed.begin(), closed.end());
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        BigInt g = gcd(a, b);
        if (closed.insert(g).second) added.push_back(std::move(g));
      }
    }
    frontier = std::move(added);
  }
  return GcdClosedSet::from_elements({closed.begin(), closed.end()});
}

bool is_gcd_closed(std::span<const BigInt> xs) {
  const auto sorted = sorted_unique({xs.begin(), xs.end()});
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!contains(sorted, gcd(sorted[i], sorted[j]))) return false;
    }
  }
  return true;
}

bool is_lcm_closed(std::span<const BigInt> xs) {
  const auto sorted = sorted_unique({xs.begin(), xs.end()});
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!contains(sorted, lcm(sorted[i], sorted[j]))) return false;
    }
  }
  return true;
}

bool is_factor_closed(std::span<const BigInt> xs) {
  const auto sorted = sorted_unique({xs.begin(), xs.end()});
  for (const auto& x : sorted) {
    for (const auto& d : divisors(x)) {
      if (!contains(sorted, d)) return false;
    }
  }
  return true;
}

Poset divisibility_poset(const GcdClosedSet& s) {
  if (s.size() > kMaxPosetSize) {
    throw Error(ErrorCode::kSizeTooLarge, "sets are limited to 64 elements");
  }
  std::vector<Mask> down(s.size(), 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (mpz_divisible_p(s[j].get_mpz_t(), s[i].get_mpz_t()) != 0) down[j] |= bit(i);
    }
  }
  return Poset::from_down_sets(std::move(down));
}

Realization realize_squarefree(const Poset& l, std::optional<std::vector<BigInt>> primes) {
  if (!is_meet_semilattice(l)) {
    throw Error(ErrorCode::kNotSemilattice, "realization needs a meet semilattice");
  }
  const std::size_t n = l.size();
  const std::size_t needed = n == 0 ? 0 : n - 1;
  std::vector<BigInt> chosen = primes ? *primes : first_odd_primes(needed);
  if (chosen.size() < needed) {
    throw Error(ErrorCode::kBadPrimes, "need " + std::to_string(needed) + " primes, got " +
                                           std::to_string(chosen.size()));
  }
  chosen.resize(needed);
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    if (!is_probable_prime(chosen[a])) {
      throw Error(ErrorCode::kBadPrimes, chosen[a].get_str() + " is not prime");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (chosen[a] == chosen[b]) {
        throw Error(ErrorCode::kBadPrimes, "prime " + chosen[a].get_str() + " repeated");
      }
    }
  }

  std::vector<BigInt> element_primes(n, 0);
  std::vector<BigInt> values(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    element_primes[i] = chosen[i - 1];
    BigInt below = 1;
    for_each_bit(l.down_set(i) & ~bit(i), [&](std::size_t j) { below = lcm(below, values[j]); });
    values[i] = element_primes[i] * below;
  }
  return make_realization(l, std::move(values), std::move(element_primes));
}

Realization inflate_realization(const Realization& r, std::size_t i, unsigned power) {
  if (i >= r.base.size()) {
    throw Error(ErrorCode::kBadIndex, "index " + std::to_string(i) + " out of range");
  }
  const std::size_t element = r.element_of[i];
  const BigInt& p = r.primes[element];
  if (p == 0) throw Error(ErrorCode::kBadIndex, "the bottom element has no prime");
  if (power == 0) throw Error(ErrorCode::kInvalidArgument, "inflation power must be >= 1");
  const BigInt factor = pow(p, power);
  const BigInt& anchor = r.base[i];
  std::vector<BigInt> values(r.base.size());
  for (std::size_t e = 0; e < values.size(); ++e) {
    values[e] = r.value_of(e);
    if (mpz_divisible_p(values[e].get_mpz_t(), anchor.get_mpz_t()) != 0) values[e] *= factor;
  }
  return make_realization(r.source, std::move(values), r.primes);
}

GcdClosedSet inflate(const Realization& r, std::size_t i, unsigned power) {
  return inflate_realization(r, i, power).base;
}

std::vector<BigInt> dual_lcm_closed(const GcdClosedSet& s) {
  std::vector<BigInt> out;
  if (s.size() == 0) return out;
  const BigInt& top = s.max();
  for (const auto& x : s.elements()) {
    if (mpz_divisible_p(top.get_mpz_t(), x.get_mpz_t()) == 0) {
      throw Error(ErrorCode::kNoTopDivisor, x.get_str() + " does not divide " + top.get_str());
    }
    out.push_back(top / x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcmlat
