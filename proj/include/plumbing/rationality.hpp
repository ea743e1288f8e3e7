#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Integer coefficients on vertices, in IntersectionMatrix order.
struct Cycle {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Z . E_i for every vertex i.
std::vector<std::int64_t> pairings(const IntersectionMatrix& m, const Cycle& z);

/// Z . Z.
std::int64_t self_pairing(const IntersectionMatrix& m, const Cycle& z);

/// Z . K, with K . E_i = -s_i - 2 by adjunction for spheres.
std::int64_t canonical_pairing(const IntersectionMatrix& m, const Cycle& z);

/// Laufer's algorithm started from the all-ones cycle: repeatedly bump the
/// lowest-index vertex with Z . E_i > 0. Throws DomainError unless g is
/// negative definite.
Cycle fundamental_cycle(const StarPlumbing& g);

/// Same, but the offending vertex bumped at each step is the first one in
/// `order` (a permutation of the vertex indices).
Cycle fundamental_cycle(const StarPlumbing& g, std::span<const std::size_t> order);

struct RationalityReport {
  Cycle cycle;
  std::int64_t z_squared = 0;
  std::int64_t z_dot_k = 0;
  Rational arithmetic_genus;  // 1 + (Z.Z + Z.K)/2
  bool rational = false;
  /// Links of rational singularities are L-spaces; false means "not
  /// certified", not "not an L-space".
  bool l_space = false;
};

RationalityReport is_rational(const StarPlumbing& g);

}  // namespace plumbing
