#include "plumbing/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace plumbing {

namespace {

void append(Leg& leg, int count, Weight w) { leg.insert(leg.end(), std::max(count, 0), w); }

Weight central_weight(Family f) {
  switch (f) {
    case Family::Gamma: return -4;
    case Family::Delta: return -3;
    case Family::Lambda: return -2;
  }
  return 0;
}

StarPlumbing generate_gamma(int p, int q, int r) {
  Leg a, b, c;
  append(a, q, -2);
  a.push_back(-(p + 3));
  append(b, r, -2);
  b.push_back(-(q + 3));
  append(c, p, -2);
  c.push_back(-(r + 3));
  return StarPlumbing(-4, {a, b, c});
}

StarPlumbing generate_delta(int p, int q, int r) {
  Leg b;
  append(b, r, -2);
  b.push_back(-(q + 4));
  Leg c;
  append(c, q, -2);
  if (p == 0) {
    c.push_back(-(r + 4));
    return StarPlumbing(-3, {{-2}, b, c});
  }
  c.push_back(-3);
  append(c, p - 1, -2);
  c.push_back(-(r + 3));
  return StarPlumbing(-3, {{-(p + 2)}, b, c});
}

StarPlumbing generate_lambda(int p, int q, int r) {
  Leg c;
  append(c, q, -2);
  if (p >= 1 && r >= 1) {
    c.push_back(-3);
    append(c, r - 1, -2);
    c.push_back(-3);
    append(c, p - 1, -2);
    c.push_back(-(q + 4));
    return StarPlumbing(-2, {{-(p + 2)}, {-(r + 3)}, c});
  }
  if (p == 0 && r >= 1) {
    c.push_back(-3);
    append(c, r - 1, -2);
    c.push_back(-(q + 5));
    return StarPlumbing(-2, {{-2}, {-(r + 3)}, c});
  }
  if (p >= 1) {
    c.push_back(-4);
    append(c, p - 1, -2);
    c.push_back(-(q + 4));
    return StarPlumbing(-2, {{-(p + 2)}, {-3}, c});
  }
  c.push_back(-(q + 6));
  return StarPlumbing(-2, {{-2}, {-3}, c});
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Gamma: return "Gamma";
    case Family::Delta: return "Delta";
    case Family::Lambda: return "Lambda";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "Γ") return Family::Gamma;
  if (text == "Δ") return Family::Delta;
  if (text == "Λ") return Family::Lambda;
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gamma" || lower == "w") return Family::Gamma;
  if (lower == "delta" || lower == "n") return Family::Delta;
  if (lower == "lambda" || lower == "m") return Family::Lambda;
  return std::nullopt;
}

std::string to_string(const FamilyTag& tag) {
  return std::string(family_name(tag.family)) + "(" + std::to_string(tag.p) + "," +
         std::to_string(tag.q) + "," + std::to_string(tag.r) + ")";
}

std::size_t family_vertex_count(const FamilyTag& tag) {
  const auto [family, p, q, r] = tag;
  switch (family) {
    case Family::Gamma: return 4 + p + q + r;
    case Family::Delta: return 4 + (p >= 1 ? p : 0) + q + r;
    case Family::Lambda: return 4 + p + q + r;
  }
  return 0;
}

StarPlumbing generate(const FamilyTag& tag) {
  if (tag.p < 0 || tag.q < 0 || tag.r < 0)
    throw InvalidInput("family parameters must be nonnegative: " + to_string(tag));
  switch (tag.family) {
    case Family::Gamma: return generate_gamma(tag.p, tag.q, tag.r);
    case Family::Delta: return generate_delta(tag.p, tag.q, tag.r);
    case Family::Lambda: return generate_lambda(tag.p, tag.q, tag.r);
  }
  throw InvalidInput("unknown family");
}

std::optional<FamilyTag> recognize(const StarPlumbing& g) {
  if (g.leg_count() != 3) return std::nullopt;
  const std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;
  const int bound = static_cast<int>(n - 4);
  const StarPlumbing target = g.canonical();

  // Candidates are visited in lexicographic (family, p, q, r) order, so the
  // first hit is the least one.
  for (const Family family : {Family::Gamma, Family::Delta, Family::Lambda}) {
    if (central_weight(family) != g.central()) continue;
    for (int p = 0; p <= bound; ++p) {
      for (int q = 0; q <= bound; ++q) {
        for (int r = 0; r <= bound; ++r) {
          const FamilyTag tag{family, p, q, r};
          if (family_vertex_count(tag) != n) continue;
          if (generate(tag).canonical() == target) return tag;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace plumbing
