#include "plumbing/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace plumbing {

namespace {

void require_leg_weights(std::span<const Weight> weights, const char* what) {
  for (const Weight w : weights) {
    if (w > -2)
      throw DomainError(std::string(what) + ": weight " + std::to_string(w) +
                        " is not <= -2");
  }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<Weight> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("continued fraction needs at least one coefficient");
  for (const Weight a : coeffs_) {
    if (a > -2)
      throw InvalidInput("continued fraction coefficient " + std::to_string(a) +
                         " is not <= -2");
  }
}

Rational cf_evaluate(const ContinuedFraction& cf) {
  const auto& a = cf.coeffs();
  // Every tail value is < -1, so the reciprocal never hits zero.
  Rational value(a.back());
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) value = Rational(*it) - 1 / value;
  return value;
}

ContinuedFraction cf_expand(const Rational& x) {
  if (x >= -1) throw DomainError("cf_expand: value " + to_string(x) + " is not < -1");
  std::vector<Weight> coeffs;
  Rational rest = x;
  for (;;) {
    const BigInt a = floor(rest);
    if (a < std::numeric_limits<Weight>::min())
      throw DomainError("cf_expand: coefficient " + a.str() + " exceeds the 64-bit weight range");
    coeffs.push_back(a.convert_to<Weight>());
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = -1 / frac;
  }
  return ContinuedFraction(std::move(coeffs));
}

Rational leg_r(std::span<const Weight> leg) {
  if (leg.empty()) throw DomainError("leg_r: empty leg");
  require_leg_weights(leg, "leg_r");
  return -1 / cf_evaluate(ContinuedFraction(std::vector<Weight>(leg.begin(), leg.end())));
}

StarPlumbing::StarPlumbing(Weight central, std::vector<Leg> legs)
    : central_(central), legs_(std::move(legs)) {
  if (legs_.empty()) throw InvalidInput("star plumbing needs at least one leg");
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (legs_[i].empty()) throw InvalidInput("leg " + std::to_string(i) + " is empty");
    for (const Weight w : legs_[i]) {
      if (w > -2)
        throw InvalidInput("leg " + std::to_string(i) + " has weight " + std::to_string(w) +
                           " > -2");
    }
  }
}

std::size_t StarPlumbing::vertex_count() const noexcept {
  std::size_t n = 1;
  for (const auto& leg : legs_) n += leg.size();
  return n;
}

std::vector<Weight> StarPlumbing::vertex_weights() const {
  std::vector<Weight> weights{central_};
  for (const auto& leg : legs_) weights.insert(weights.end(), leg.begin(), leg.end());
  return weights;
}

StarPlumbing StarPlumbing::canonical() const {
  auto legs = legs_;
  std::sort(legs.begin(), legs.end());
  return StarPlumbing(central_, std::move(legs));
}

bool isomorphic(const StarPlumbing& a, const StarPlumbing& b) {
  return a.canonical() == b.canonical();
}

IntersectionMatrix::IntersectionMatrix(std::size_t n, std::vector<Weight> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InvalidInput("intersection matrix is not square");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Weight a = (*this)(i, j);
      if (a != (*this)(j, i)) throw InvalidInput("intersection matrix is not symmetric");
      if (a != 0 && a != 1)
        throw InvalidInput("off-diagonal intersection entry " + std::to_string(a) +
                           " is not 0 or 1");
    }
  }
}

IntersectionMatrix intersection_matrix(const StarPlumbing& g) {
  const auto weights = g.vertex_weights();
  const std::size_t n = weights.size();
  std::vector<Weight> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = weights[i];
  auto join = [&](std::size_t a, std::size_t b) {
    entries[a * n + b] = 1;
    entries[b * n + a] = 1;
  };
  std::size_t next = 1;
  for (const auto& leg : g.legs()) {
    join(0, next);
    for (std::size_t j = 1; j < leg.size(); ++j) join(next + j - 1, next + j);
    next += leg.size();
  }
  return IntersectionMatrix(n, std::move(entries));
}

namespace {

bool mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t& out) {
  std::int64_t ab, cd;
  return !__builtin_mul_overflow(a, b, &ab) && !__builtin_mul_overflow(c, d, &cd) &&
         !__builtin_sub_overflow(ab, cd, &out);
}

// Same elimination in machine integers; nullopt on overflow.
std::optional<std::vector<std::int64_t>> leading_minors_small(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::vector<std::int64_t> minors;
  minors.reserve(n);
  std::int64_t previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t pivot = a[k * n + k];
    minors.push_back(pivot);
    if (pivot == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        std::int64_t t;
        if (!mul_sub(a[i * n + j], pivot, a[i * n + k], a[k * n + j], t)) return std::nullopt;
        a[i * n + j] = t / previous;
      }
    }
    previous = pivot;
  }
  return minors;
}

template <typename Minors>
bool alternating_signs(const Minors& minors, std::size_t n) {
  if (minors.size() != n) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // minors[k] is det_{k+1}; the required sign is (-1)^{k+1}.
    const bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

// Sign of s0 + sum r_i in machine integers; nullopt on overflow.
std::optional<int> definiteness_sign_small(const StarPlumbing& g) {
  // Running sum num/den with den > 0.
  std::int64_t num = g.central(), den = 1;
  for (const auto& leg : g.legs()) {
    // [s_1, ..., s_n] = -p/q evaluated from the tail; r = q/p.
    std::int64_t p = -leg.back(), q = 1;
    for (std::size_t j = leg.size() - 1; j-- > 0;) {
      std::int64_t np;
      if (!mul_sub(-leg[j], p, q, 1, np)) return std::nullopt;
      q = p;
      p = np;
    }
    std::int64_t nn, nd;
    if (!mul_sub(num, p, -q, den, nn) || __builtin_mul_overflow(den, p, &nd)) return std::nullopt;
    const std::int64_t d = std::gcd(nn, nd);
    num = nn / d;
    den = nd / d;
  }
  return (num > 0) - (num < 0);
}

}  // namespace

std::vector<BigInt> leading_minors(const IntersectionMatrix& m) {
  if (const auto small = leading_minors_small(m))
    return std::vector<BigInt>(small->begin(), small->end());

  const std::size_t n = m.size();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  // After step k the pivot a[k][k] is the (k+1)-th leading minor; each
  // division by the previous pivot is exact.
  std::vector<BigInt> minors;
  minors.reserve(n);
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt pivot = a[k * n + k];
    minors.push_back(pivot);
    if (pivot == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / previous;
      }
    }
    previous = pivot;
  }
  return minors;
}

bool is_negative_definite_matrix(const IntersectionMatrix& m) {
  if (const auto small = leading_minors_small(m)) return alternating_signs(*small, m.size());
  return alternating_signs(leading_minors(m), m.size());
}

Rational star_definiteness_sum(const StarPlumbing& g) {
  Rational sum(g.central());
  for (const auto& leg : g.legs()) sum += leg_r(leg);
  return sum;
}

bool is_negative_definite_star(const StarPlumbing& g) {
  if (const auto sign = definiteness_sign_small(g)) return *sign < 0;
  return star_definiteness_sum(g) < 0;
}

}  // namespace plumbing
