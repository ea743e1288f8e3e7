#include "plumbing/rationality.hpp"

#include <numeric>
#include <string>

namespace plumbing {

std::vector<std::int64_t> pairings(const IntersectionMatrix& m, const Cycle& z) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m(i, j) * z.coeffs[j];
  return out;
}

std::int64_t self_pairing(const IntersectionMatrix& m, const Cycle& z) {
  const auto p = pairings(m, z);
  return std::inner_product(p.begin(), p.end(), z.coeffs.begin(), std::int64_t{0});
}

std::int64_t canonical_pairing(const IntersectionMatrix& m, const Cycle& z) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += z.coeffs[i] * (-m(i, i) - 2);
  return total;
}

Cycle fundamental_cycle(const StarPlumbing& g, std::span<const std::size_t> order) {
  if (!is_negative_definite_star(g))
    throw DomainError("fundamental cycle requires a negative definite graph");
  const auto m = intersection_matrix(g);
  const std::size_t n = m.size();
  if (order.size() != n) throw InvalidInput("vertex order has the wrong length");

  Cycle z{std::vector<std::int64_t>(n, 1)};
  auto pair = pairings(m, z);
  for (;;) {
    std::size_t pick = n;
    for (const std::size_t i : order) {
      if (pair[i] > 0) {
        pick = i;
        break;
      }
    }
    if (pick == n) return z;
    z.coeffs[pick] += 1;
    for (std::size_t i = 0; i < n; ++i) pair[i] += m(i, pick);
  }
}

Cycle fundamental_cycle(const StarPlumbing& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return fundamental_cycle(g, order);
}

RationalityReport is_rational(const StarPlumbing& g) {
  RationalityReport report;
  report.cycle = fundamental_cycle(g);
  const auto m = intersection_matrix(g);
  report.z_squared = self_pairing(m, report.cycle);
  report.z_dot_k = canonical_pairing(m, report.cycle);
  report.arithmetic_genus =
      Rational(1) + Rational(report.z_squared + report.z_dot_k) / Rational(2);
  report.rational = report.arithmetic_genus == 0;
  report.l_space = report.rational;
  return report;
}

}  // namespace plumbing
