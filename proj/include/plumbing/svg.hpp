#pragma once

#include <string>

#include "plumbing/rational.hpp"
#include "plumbing/toric.hpp"

namespace plumbing {

/// Decimal rendering with 6 significant digits. Display only.
std::string display_decimal(const Rational& value);

/// Moment-polygon picture: one polyline per leg through P_0 .. P_{n+2}, a
/// dashed ray from the origin along each terminal edge, and vertex labels.
/// Output is byte-for-byte deterministic.
std::string render_svg(const Template& t);

}  // namespace plumbing
