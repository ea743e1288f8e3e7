#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "plumbing/graph.hpp"

namespace plumbing {

/// The three rational blow-down families: Gamma (W), Delta (N), Lambda (M).
enum class Family { Gamma, Delta, Lambda };

std::string_view family_name(Family f);

/// Accepts "Gamma"/"Delta"/"Lambda", case-insensitive, and the Greek letters.
std::optional<Family> parse_family(std::string_view text);

struct FamilyTag {
  Family family = Family::Gamma;
  int p = 0;
  int q = 0;
  int r = 0;

  friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

std::string to_string(const FamilyTag& tag);

/// Number of vertices of generate(tag), without building the graph.
std::size_t family_vertex_count(const FamilyTag& tag);

/// The plumbing graph of the tag, legs written center-outward. Throws
/// InvalidInput on a negative parameter.
StarPlumbing generate(const FamilyTag& tag);

/// Lexicographically least (family, p, q, r) whose graph is isomorphic to g.
std::optional<FamilyTag> recognize(const StarPlumbing& g);

}  // namespace plumbing
