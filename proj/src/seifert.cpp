#include "plumbing/seifert.hpp"

#include <string>

namespace plumbing {

SeifertData::SeifertData(Weight e0, std::vector<Rational> ratios)
    : e0_(e0), ratios_(std::move(ratios)) {
  if (ratios_.empty()) throw InvalidInput("Seifert data needs at least one ratio");
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    if (ratios_[i] <= 0 || ratios_[i] >= 1)
      throw InvalidInput("Seifert ratio " + std::to_string(i) + " = " + to_string(ratios_[i]) +
                         " is not normalized to (0, 1)");
  }
}

StarPlumbing seifert_to_plumbing(const SeifertData& sd) {
  std::vector<Leg> legs;
  legs.reserve(sd.ratios().size());
  for (const auto& r : sd.ratios()) legs.push_back(cf_expand(-1 / r).coeffs());
  return StarPlumbing(sd.e0(), std::move(legs));
}

StarPlumbing seifert_to_plumbing_canonical(const SeifertData& sd) {
  return seifert_to_plumbing(sd).canonical();
}

SeifertData plumbing_to_seifert(const StarPlumbing& g) {
  std::vector<Rational> ratios;
  ratios.reserve(g.leg_count());
  for (const auto& leg : g.legs()) ratios.push_back(leg_r(leg));
  return SeifertData(g.central(), std::move(ratios));
}

}  // namespace plumbing
