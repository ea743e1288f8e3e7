#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

using Weight = std::int64_t;

/// Weights of one leg, listed from the vertex adjacent to the center outward.
using Leg = std::vector<Weight>;

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structurally invalid graph, continued fraction or matrix.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hirzebruch-Jung continued fraction a1 - 1/(a2 - ... - 1/ak), every ai <= -2.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<Weight> coeffs);

  const std::vector<Weight>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Weight> coeffs_;
};

/// Exact value; always < -1.
Rational cf_evaluate(const ContinuedFraction& cf);

/// Unique canonical expansion of x < -1. Throws DomainError otherwise.
ContinuedFraction cf_expand(const Rational& x);

/// r = -1 / [s1, ..., sn]; lies strictly in (0, 1).
Rational leg_r(std::span<const Weight> leg);

/// Star-shaped plumbing tree: one central vertex and m >= 1 nonempty legs
/// whose weights are all <= -2. The central weight is unconstrained.
class StarPlumbing {
 public:
  StarPlumbing(Weight central, std::vector<Leg> legs);

  Weight central() const noexcept { return central_; }
  const std::vector<Leg>& legs() const noexcept { return legs_; }
  std::size_t leg_count() const noexcept { return legs_.size(); }
  std::size_t vertex_count() const noexcept;

  /// Central weight first, then each leg center-outward.
  std::vector<Weight> vertex_weights() const;

  /// Same graph with legs sorted lexicographically.
  StarPlumbing canonical() const;

  /// Exact equality, leg order included. Use isomorphic() to ignore order.
  friend bool operator==(const StarPlumbing&, const StarPlumbing&) = default;

 private:
  Weight central_;
  std::vector<Leg> legs_;
};

bool isomorphic(const StarPlumbing& a, const StarPlumbing& b);

/// Symmetric integer matrix with off-diagonal entries in {0, 1}.
class IntersectionMatrix {
 public:
  /// Row-major entries. Throws InvalidInput if not square/symmetric/0-1 off
  /// the diagonal.
  IntersectionMatrix(std::size_t n, std::vector<Weight> entries);

  std::size_t size() const noexcept { return n_; }
  Weight operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Weight> entries_;
};

/// Vertex order matches StarPlumbing::vertex_weights().
IntersectionMatrix intersection_matrix(const StarPlumbing& g);

/// Leading principal minors det_1, det_2, ... computed by fraction-free
/// (Bareiss) elimination. Stops after the first zero minor, so the result can
/// be shorter than size().
std::vector<BigInt> leading_minors(const IntersectionMatrix& m);

/// Sylvester criterion: (-1)^k det_k > 0 for every k.
bool is_negative_definite_matrix(const IntersectionMatrix& m);

/// s0 + r1 + ... + rm.
Rational star_definiteness_sum(const StarPlumbing& g);

/// Neumann-Raymond criterion: negative definite iff s0 + sum r_i < 0.
bool is_negative_definite_star(const StarPlumbing& g);

}  // namespace plumbing
