#pragma once

#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Normalized Seifert invariants (e0; r1, ..., rm) with every ri in (0, 1).
/// Unnormalized data is rejected rather than normalized.
class SeifertData {
 public:
  SeifertData(Weight e0, std::vector<Rational> ratios);

  Weight e0() const noexcept { return e0_; }
  const std::vector<Rational>& ratios() const noexcept { return ratios_; }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  Weight e0_;
  std::vector<Rational> ratios_;
};

/// Inverse slam dunk: leg i is the expansion of -1/ri.
StarPlumbing seifert_to_plumbing(const SeifertData& sd);

StarPlumbing seifert_to_plumbing_canonical(const SeifertData& sd);

SeifertData plumbing_to_seifert(const StarPlumbing& g);

}  // namespace plumbing
