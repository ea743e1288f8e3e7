#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Integral edge direction (u, v). Sequences produced here are primitive.
struct TauVector {
  BigInt u;
  BigInt v;

  friend bool operator==(const TauVector&, const TauVector&) = default;
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline BigInt det(const TauVector& a, const TauVector& b) { return a.u * b.v - a.v * b.u; }
inline Rational det(const TauVector& a, const Point& p) {
  return Rational(a.u) * p.y - Rational(a.v) * p.x;
}
inline Rational det(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// tau_0 = (1,0), tau_1 = (u1,1), tau_{j+1} = -tau_{j-1} - s_j tau_j.
/// Returns leg.size() + 2 vectors.
std::vector<TauVector> tau_sequence(std::span<const Weight> leg, const BigInt& u1);

/// Reciprocal slope u/v of the last vector. Throws DomainError when it is
/// horizontal (v = 0).
Rational sigma_of(std::span<const TauVector> taus);

/// u - 1/sigma. Throws DomainError on sigma = 0.
Rational mobius_step(const Rational& sigma, const BigInt& u);

/// Applies [[u, -1], [1, 0]]; maps (0,-1) to (1,0) and (1,0) to (u,1).
TauVector basis_change(const TauVector& tau, const BigInt& u);

/// Balanced split of -s0 into m integers; the first (-s0 mod m) entries get
/// the extra unit.
std::vector<BigInt> choose_u_split(const BigInt& s0, std::size_t m);

/// Sphere areas in units of 2*pi: one entry per leg vertex, plus the center.
struct AreaSpec {
  std::vector<std::vector<Rational>> legs;
  Rational central;
};

/// Every area equal to 1.
AreaSpec unit_areas(const StarPlumbing& g);

struct LegTemplate {
  std::vector<TauVector> taus;  // tau_0 .. tau_{n+1}
  std::vector<Point> points;    // P_0 .. P_{n+2}
  std::vector<Rational> lambdas;  // lambda_0 .. lambda_{n+1}
  Rational sigma;
  Rational offset;  // K, with x_1 = sigma * y0 + K

  friend bool operator==(const LegTemplate&, const LegTemplate&) = default;
};

/// Moment-polygon certificate for a star-shaped graph.
struct Template {
  std::vector<LegTemplate> legs;
  std::vector<BigInt> u_split;
  Rational y0;
  Rational lambda0;

  friend bool operator==(const Template&, const Template&) = default;
};

class TemplateError : public std::runtime_error {
 public:
  enum class Kind {
    NotNegativeDefinite,
    InvalidAreas,
    InvalidSplit,
    Condition4Violated,
    InternalInvariant,
  };

  TemplateError(Kind kind, const std::string& what, std::optional<std::size_t> leg = {},
                std::optional<std::size_t> index = {})
      : std::runtime_error(what), kind_(kind), leg_(leg), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending leg and point index for Condition4Violated.
  std::optional<std::size_t> leg() const noexcept { return leg_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::optional<std::size_t> leg_;
  std::optional<std::size_t> index_;
};

struct BuildOptions {
  /// Overrides choose_u_split; must have one entry per leg summing to -s0.
  std::optional<std::vector<BigInt>> u_split;
};

/// Builds the template for a negative definite star graph. The initial edge
/// length is min(1, y0, lambda0/m)/2 and the terminal edge has parameter 1.
/// Throws TemplateError.
Template build_template(const StarPlumbing& g, const AreaSpec& areas,
                        const BuildOptions& options = {});

struct Check {
  std::string name;
  std::optional<std::size_t> leg;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct VerifyReport {
  bool passed = false;
  std::vector<Check> checks;

  const Check* first_failure() const;
  const Check* find(std::string_view name, std::optional<std::size_t> leg = {}) const;
};

/// Re-derives every edge direction and length from the points alone and
/// checks the hypotheses and outputs of the toric construction against g
/// and the requested areas. Never throws on bad data; failures are entries.
VerifyReport verify_template(const Template& t, const StarPlumbing& g, const AreaSpec& areas);

}  // namespace plumbing
