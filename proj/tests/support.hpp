#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths it
// is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"
#include "plumbing/toric.hpp"

namespace plumbing::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Determinant by cofactor expansion along the first row.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return BigInt(1);
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

/// Sylvester's criterion with every leading minor computed by cofactor
/// expansion.
inline bool sylvester_oracle(const IntersectionMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<BigInt>> lead(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m(i, j);
    const BigInt d = cofactor_det(lead);
    const bool want_negative = (k % 2) == 1;
    if (want_negative ? d >= 0 : d <= 0) return false;
  }
  return true;
}

/// Symmetric Gaussian elimination over the rationals: negative definite iff
/// every pivot is negative. Used where cofactor expansion is too slow.
inline bool ldl_negative_definite(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

/// Continued fraction value by the nested-reciprocal definition, evaluated
/// front to back as a product of 2x2 matrices [[a, -1], [1, 0]].
inline Rational cf_matrix_value(const std::vector<Weight>& coeffs) {
  // (p0, q0) is the first column of the running product, (p1, q1) the
  // negated second column.
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = -1;
  for (const Weight a : coeffs) {
    const BigInt np = BigInt(a) * p0 - p1;
    const BigInt nq = BigInt(a) * q0 - q1;
    p1 = p0;
    q1 = q0;
    p0 = np;
    q0 = nq;
  }
  return Rational(p0, q0);
}

/// Next edge vector from the two determinant constraints
/// det(cur, next) = 1 and det(prev, next) = -s, solved by Cramer's rule.
inline TauVector tau_by_cramer(const TauVector& prev, const TauVector& cur, Weight s) {
  // [ -cur.v  cur.u ] [x]   [ 1 ]
  // [ -prev.v prev.u] [y] = [-s ]
  const BigInt a = -cur.v, b = cur.u, c = -prev.v, d = prev.u;
  const BigInt e = 1, f = -BigInt(s);
  const BigInt den = a * d - b * c;
  return {(e * d - b * f) / den, (a * f - e * c) / den};
}

inline Leg random_leg(Rng& rng, std::size_t max_len, Weight min_weight) {
  Leg leg(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_len))));
  for (auto& w : leg) w = uniform(rng, min_weight, -2);
  return leg;
}

inline StarPlumbing random_star(Rng& rng, std::size_t max_legs, std::size_t max_len,
                                Weight min_weight, Weight central_lo, Weight central_hi) {
  std::vector<Leg> legs(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_legs))));
  for (auto& leg : legs) leg = random_leg(rng, max_len, min_weight);
  return StarPlumbing(uniform(rng, central_lo, central_hi), std::move(legs));
}

/// Rejection-samples a negative definite star (checked with the LDL oracle,
/// not the library criteria).
inline StarPlumbing random_definite_star(Rng& rng, std::size_t max_legs, std::size_t max_len,
                                         Weight min_weight) {
  for (;;) {
    auto legs_count = static_cast<std::int64_t>(max_legs);
    auto g = random_star(rng, max_legs, max_len, min_weight, -(legs_count + 3), 0);
    if (ldl_negative_definite(intersection_matrix(g))) return g;
  }
}

/// Positive rational in (0, hi] with denominator up to max_den.
inline Rational random_positive(Rng& rng, std::int64_t hi, std::int64_t max_den) {
  const auto den = uniform(rng, 1, max_den);
  const auto num = uniform(rng, 1, hi * den);
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace plumbing::testing
