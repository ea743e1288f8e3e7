#include "plumbing/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace plumbing {

namespace {

constexpr double kCanvas = 560.0;
constexpr double kMargin = 40.0;
constexpr double kRayOvershoot = 1.15;

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double min_x, max_y, scale;

  double sx(double x) const { return kMargin + (x - min_x) * scale; }
  double sy(double y) const { return kMargin + (max_y - y) * scale; }
};

}  // namespace

std::string display_decimal(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(value));
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string render_svg(const Template& t) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& leg : t.legs) {
    for (const auto& p : leg.points) {
      const double x = to_double(p.x) * kRayOvershoot;
      const double y = to_double(p.y) * kRayOvershoot;
      min_x = std::min({min_x, x, to_double(p.x)});
      max_x = std::max({max_x, x, to_double(p.x)});
      min_y = std::min({min_y, y, to_double(p.y)});
      max_y = std::max({max_y, y, to_double(p.y)});
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const Frame f{min_x, max_y, kCanvas / span};
  const double width = 2 * kMargin + (max_x - min_x) * f.scale;
  const double height = 2 * kMargin + (max_y - min_y) * f.scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + fixed(f.sx(min_x)) + "\" y1=\"" + fixed(f.sy(0)) +
         "\" x2=\"" + fixed(f.sx(max_x)) + "\" y2=\"" + fixed(f.sy(0)) +
         "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  for (std::size_t i = 0; i < t.legs.size(); ++i) {
    const auto& leg = t.legs[i];
    const std::string leg_id = std::to_string(i + 1);
    out += "  <g class=\"leg\" id=\"leg-" + leg_id + "\">\n";

    const auto& end = leg.points.back();
    const auto& dir = leg.taus.back();
    const std::string slope = dir.u == 0 ? "inf" : display_decimal(Rational(dir.v, dir.u));
    out += "    <line class=\"origin-ray\" data-slope=\"" + slope + "\" x1=\"" + fixed(f.sx(0)) +
           "\" y1=\"" + fixed(f.sy(0)) + "\" x2=\"" + fixed(f.sx(to_double(end.x) * kRayOvershoot)) +
           "\" y2=\"" + fixed(f.sy(to_double(end.y) * kRayOvershoot)) +
           "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

    out += "    <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < leg.points.size(); ++j) {
      if (j) out += " ";
      out += fixed(f.sx(to_double(leg.points[j].x))) + "," + fixed(f.sy(to_double(leg.points[j].y)));
    }
    out += "\"/>\n";

    for (std::size_t j = 0; j < leg.points.size(); ++j) {
      const auto& p = leg.points[j];
      const std::string label = "P[" + leg_id + "," + std::to_string(j) + "]";
      const std::string cx = fixed(f.sx(to_double(p.x)));
      const std::string cy = fixed(f.sy(to_double(p.y)));
      out += "    <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"3\" fill=\"black\"><title>" + label +
             " = (" + display_decimal(p.x) + ", " + display_decimal(p.y) + ")</title></circle>\n";
      out += "    <text x=\"" + cx + "\" y=\"" + cy +
             "\" dx=\"5\" dy=\"-5\" font-size=\"10\" font-family=\"sans-serif\">" + label +
             "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "  <circle class=\"origin\" cx=\"" + fixed(f.sx(0)) + "\" cy=\"" + fixed(f.sy(0)) +
         "\" r=\"3\" fill=\"red\"><title>O = (0, 0)</title></circle>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace plumbing
