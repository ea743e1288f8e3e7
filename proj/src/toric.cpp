#include "plumbing/toric.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

namespace plumbing {

std::vector<TauVector> tau_sequence(std::span<const Weight> leg, const BigInt& u1) {
  std::vector<TauVector> taus;
  taus.reserve(leg.size() + 2);
  taus.push_back({BigInt(1), BigInt(0)});
  taus.push_back({u1, BigInt(1)});
  for (std::size_t j = 0; j < leg.size(); ++j) {
    const auto& prev = taus[j];
    const auto& cur = taus[j + 1];
    const BigInt s(leg[j]);
    taus.push_back({-prev.u - s * cur.u, -prev.v - s * cur.v});
  }
  return taus;
}

Rational sigma_of(std::span<const TauVector> taus) {
  if (taus.empty()) throw DomainError("sigma_of: empty vector sequence");
  const auto& last = taus.back();
  if (last.v == 0) throw DomainError("sigma_of: horizontal terminal edge");
  return Rational(last.u, last.v);
}

Rational mobius_step(const Rational& sigma, const BigInt& u) {
  if (sigma == 0) throw DomainError("mobius_step: sigma = 0");
  return Rational(u) - 1 / sigma;
}

TauVector basis_change(const TauVector& tau, const BigInt& u) {
  return {u * tau.u - tau.v, tau.u};
}

std::vector<BigInt> choose_u_split(const BigInt& s0, std::size_t m) {
  if (m == 0) throw DomainError("choose_u_split: no legs");
  const BigInt total = -s0;
  const BigInt legs(static_cast<unsigned long long>(m));
  const BigInt base = floor_div(total, legs);
  const BigInt extra = total - base * legs;  // in [0, m)
  std::vector<BigInt> split(m, base);
  for (std::size_t i = 0; BigInt(static_cast<unsigned long long>(i)) < extra; ++i) split[i] += 1;
  return split;
}

AreaSpec unit_areas(const StarPlumbing& g) {
  AreaSpec areas{{}, Rational(1)};
  for (const auto& leg : g.legs()) areas.legs.emplace_back(leg.size(), Rational(1));
  return areas;
}

namespace {

using Kind = TemplateError::Kind;

void validate_areas(const StarPlumbing& g, const AreaSpec& areas) {
  if (areas.legs.size() != g.leg_count())
    throw TemplateError(Kind::InvalidAreas, "expected areas for " +
                                                std::to_string(g.leg_count()) + " legs, got " +
                                                std::to_string(areas.legs.size()));
  for (std::size_t i = 0; i < g.leg_count(); ++i) {
    if (areas.legs[i].size() != g.legs()[i].size())
      throw TemplateError(Kind::InvalidAreas,
                          "leg " + std::to_string(i) + " has " +
                              std::to_string(g.legs()[i].size()) + " vertices but " +
                              std::to_string(areas.legs[i].size()) + " areas");
    for (const auto& a : areas.legs[i]) {
      if (a <= 0)
        throw TemplateError(Kind::InvalidAreas,
                            "leg " + std::to_string(i) + " area " + to_string(a) +
                                " is not positive");
    }
  }
  if (areas.central <= 0)
    throw TemplateError(Kind::InvalidAreas,
                        "central area " + to_string(areas.central) + " is not positive");
}

}  // namespace

Template build_template(const StarPlumbing& g, const AreaSpec& areas,
                        const BuildOptions& options) {
  const Rational nr = star_definiteness_sum(g);
  if (nr >= 0)
    throw TemplateError(Kind::NotNegativeDefinite,
                        "graph is not negative definite (Neumann-Raymond criterion: s0 + sum r_i = " +
                            to_string(nr) + " is not < 0, so the sigma sum would be <= 0)");
  validate_areas(g, areas);

  const std::size_t m = g.leg_count();
  std::vector<BigInt> split;
  if (options.u_split) {
    split = *options.u_split;
    if (split.size() != m)
      throw TemplateError(Kind::InvalidSplit, "u-split needs " + std::to_string(m) + " entries");
    BigInt sum = 0;
    for (const auto& u : split) sum += u;
    if (sum != -BigInt(g.central()))
      throw TemplateError(Kind::InvalidSplit,
                          "u-split sums to " + sum.str() + ", expected " +
                              BigInt(-BigInt(g.central())).str());
  } else {
    split = choose_u_split(BigInt(g.central()), m);
  }

  Template t;
  t.u_split = split;
  t.lambda0 = areas.central;
  t.legs.resize(m);

  Rational sigma_sum = 0;
  Rational offset_sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& leg = g.legs()[i];
    auto& lt = t.legs[i];
    lt.taus = tau_sequence(leg, split[i]);
    lt.sigma = sigma_of(lt.taus);

    // P_{n+1} - P_1 = sum lambda_j tau_j; requiring P_{n+1} on the line
    // through the origin along tau_{n+1} gives x_1 = sigma * y_1 + K.
    Rational dx = 0;
    Rational dy = 0;
    for (std::size_t j = 1; j <= leg.size(); ++j) {
      dx += areas.legs[i][j - 1] * Rational(lt.taus[j].u);
      dy += areas.legs[i][j - 1] * Rational(lt.taus[j].v);
    }
    lt.offset = lt.sigma * dy - dx;
    sigma_sum += lt.sigma;
    offset_sum += lt.offset;
  }

  if (sigma_sum <= 0)
    throw TemplateError(Kind::InternalInvariant,
                        "sigma sum " + to_string(sigma_sum) + " is not positive");
  t.y0 = (areas.central - offset_sum) / sigma_sum;
  if (t.y0 <= 0)
    throw TemplateError(Kind::InternalInvariant, "y0 = " + to_string(t.y0) + " is not positive");

  const Rational initial_step =
      std::min({Rational(1), t.y0, areas.central / Rational(static_cast<long long>(m))}) / 2;

  for (std::size_t i = 0; i < m; ++i) {
    const auto& leg = g.legs()[i];
    auto& lt = t.legs[i];
    const std::size_t n = leg.size();

    const Point p1{lt.sigma * t.y0 + lt.offset, t.y0};
    lt.points.push_back({p1.x - initial_step, t.y0});
    lt.points.push_back(p1);
    lt.lambdas.push_back(initial_step);
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational& step = areas.legs[i][j - 1];
      const Point& p = lt.points.back();
      lt.points.push_back({p.x + step * Rational(lt.taus[j].u), p.y + step * Rational(lt.taus[j].v)});
      lt.lambdas.push_back(step);
    }

    const auto& last = lt.taus[n + 1];
    const Point& p = lt.points.back();
    Rational terminal = 1;
    if (last.v < 0) terminal = std::min(Rational(1), p.y / Rational(-2 * last.v));
    lt.points.push_back({p.x + terminal * Rational(last.u), p.y + terminal * Rational(last.v)});
    lt.lambdas.push_back(terminal);

    for (std::size_t j = 0; j <= n; ++j) {
      if (det(lt.taus[j], lt.points[j]) <= 0)
        throw TemplateError(Kind::Condition4Violated,
                            "condition 4 violated: det(tau, P) <= 0 at leg " + std::to_string(i) +
                                ", index " + std::to_string(j),
                            i, j);
    }
  }

  const auto report = verify_template(t, g, areas);
  if (!report.passed) {
    const Check* bad = report.first_failure();
    throw TemplateError(Kind::InternalInvariant,
                        "built template fails verification: " + bad->name + " (expected " +
                            bad->expected + ", got " + bad->actual + ")");
  }
  return t;
}

const Check* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

const Check* VerifyReport::find(std::string_view name, std::optional<std::size_t> leg) const {
  for (const auto& c : checks)
    if (c.name == name && c.leg == leg) return &c;
  return nullptr;
}

namespace {

std::string format(const TauVector& t) { return "(" + t.u.str() + "," + t.v.str() + ")"; }

template <typename T, typename F>
std::string format_list(const std::vector<T>& items, F&& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += fmt(items[i]);
  }
  return out + "]";
}

/// Primitive integral direction and positive length of a nonzero rational
/// displacement.
std::pair<TauVector, Rational> primitive_direction(const Rational& dx, const Rational& dy) {
  const BigInt scale = boost::multiprecision::lcm(denominator(dx), denominator(dy));
  const BigInt a = numerator(dx) * (scale / denominator(dx));
  const BigInt b = numerator(dy) * (scale / denominator(dy));
  const BigInt g = boost::multiprecision::gcd(abs(a), abs(b));
  return {{a / g, b / g}, Rational(g, scale)};
}

class ReportBuilder {
 public:
  void add(std::string name, std::optional<std::size_t> leg, std::string expected,
           std::string actual, bool ok) {
    report_.checks.push_back({std::move(name), leg, std::move(expected), std::move(actual), ok});
  }

  VerifyReport finish() && {
    report_.passed = std::all_of(report_.checks.begin(), report_.checks.end(),
                                 [](const Check& c) { return c.ok; });
    return std::move(report_);
  }

 private:
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_template(const Template& t, const StarPlumbing& g, const AreaSpec& areas) {
  ReportBuilder out;
  const std::size_t m = g.leg_count();

  const bool legs_ok = t.legs.size() == m;
  out.add("leg_count", {}, std::to_string(m), std::to_string(t.legs.size()), legs_ok);
  const bool areas_ok = areas.legs.size() == m;
  out.add("area_count", {}, std::to_string(m), std::to_string(areas.legs.size()), areas_ok);
  if (!legs_ok || !areas_ok) return std::move(out).finish();

  Rational sum_x0 = 0;
  Rational sum_x1 = 0;
  BigInt sum_u = 0;
  std::vector<BigInt> derived_split;
  std::optional<Rational> row;
  bool all_legs_usable = true;

  for (std::size_t i = 0; i < m; ++i) {
    const auto& leg = g.legs()[i];
    const auto& lt = t.legs[i];
    const std::size_t n = leg.size();
    const auto& pts = lt.points;

    const bool count_ok = pts.size() == n + 3;
    out.add("point_count", i, std::to_string(n + 3), std::to_string(pts.size()), count_ok);
    if (!count_ok) {
      all_legs_usable = false;
      continue;
    }

    std::optional<std::size_t> repeated;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j)
      if (pts[j] == pts[j + 1] && !repeated) repeated = j;
    out.add("distinct_points", i, "P_j != P_{j+1}",
            repeated ? "P_" + std::to_string(*repeated) + " repeated" : "all distinct",
            !repeated);
    if (repeated) {
      all_legs_usable = false;
      continue;
    }

    std::vector<TauVector> taus;
    std::vector<Rational> lambdas;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      auto [tau, len] = primitive_direction(pts[j + 1].x - pts[j].x, pts[j + 1].y - pts[j].y);
      taus.push_back(std::move(tau));
      lambdas.push_back(std::move(len));
    }

    std::optional<std::size_t> low;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pts[j].y <= 0 && !low) low = j;
    out.add("upper_half_plane", i, "y > 0",
            low ? "y_" + std::to_string(*low) + " = " + to_string(pts[*low].y) : "all positive",
            !low);

    if (!row) row = pts[0].y;
    out.add("y_row", i, to_string(*row) + "," + to_string(*row),
            to_string(pts[0].y) + "," + to_string(pts[1].y),
            pts[0].y == *row && pts[1].y == *row);

    out.add("stored_taus", i, format_list(taus, [](const TauVector& v) { return format(v); }),
            format_list(lt.taus, [](const TauVector& v) { return format(v); }), taus == lt.taus);
    out.add("stored_lambdas", i,
            format_list(lambdas, [](const Rational& v) { return to_string(v); }),
            format_list(lt.lambdas, [](const Rational& v) { return to_string(v); }),
            lambdas == lt.lambdas);

    const TauVector e1{BigInt(1), BigInt(0)};
    out.add("condition1_initial_edge", i, format(e1), format(taus[0]), taus[0] == e1);

    const Point& a = pts[n + 1];
    const Point& b = pts[n + 2];
    const Rational cross = det(a, b);
    const Rational dot = a.x * b.x + a.y * b.y;
    out.add("collinear_with_origin", i, "det = 0, rho > 0",
            "det = " + to_string(cross) + ", dot = " + to_string(dot), cross == 0 && dot > 0);

    std::optional<std::size_t> bad3;
    for (std::size_t j = 0; j <= n; ++j)
      if (det(taus[j], taus[j + 1]) != 1 && !bad3) bad3 = j;
    out.add("condition3_unimodular", i, "det(tau_j, tau_{j+1}) = 1",
            bad3 ? "det = " + det(taus[*bad3], taus[*bad3 + 1]).str() + " at j = " +
                       std::to_string(*bad3)
                 : "all 1",
            !bad3);

    std::optional<std::size_t> bad4;
    for (std::size_t j = 0; j <= n; ++j)
      if (det(taus[j], pts[j]) <= 0 && !bad4) bad4 = j;
    out.add("condition4_origin_side", i, "det(tau_j, P_j) > 0",
            bad4 ? "det = " + to_string(det(taus[*bad4], pts[*bad4])) + " at j = " +
                       std::to_string(*bad4)
                 : "all positive",
            !bad4);

    std::vector<BigInt> weights;
    for (std::size_t j = 1; j <= n; ++j) weights.push_back(-det(taus[j - 1], taus[j + 1]));
    std::vector<BigInt> expected_weights(leg.begin(), leg.end());
    out.add("self_intersection", i,
            format_list(expected_weights, [](const BigInt& v) { return v.str(); }),
            format_list(weights, [](const BigInt& v) { return v.str(); }),
            weights == expected_weights);

    const std::vector<Rational> sphere_areas(lambdas.begin() + 1, lambdas.begin() + 1 + n);
    out.add("area_readback", i,
            format_list(areas.legs[i], [](const Rational& v) { return to_string(v); }),
            format_list(sphere_areas, [](const Rational& v) { return to_string(v); }),
            sphere_areas == areas.legs[i]);

    out.add("tau1_form", i, "(u,1)", format(taus[1]), taus[1].v == 1);

    sum_x0 += pts[0].x;
    sum_x1 += pts[1].x;
    sum_u += taus[1].u;
    derived_split.push_back(taus[1].u);
  }

  if (!all_legs_usable) return std::move(out).finish();

  out.add("y0_readback", {}, to_string(*row), to_string(t.y0), t.y0 == *row);
  out.add("sum_x0_positive", {}, "> 0", to_string(sum_x0), sum_x0 > 0);
  out.add("central_area", {}, to_string(areas.central), to_string(sum_x1),
          sum_x1 == areas.central);
  out.add("lambda0_readback", {}, to_string(areas.central), to_string(t.lambda0),
          t.lambda0 == areas.central);
  out.add("central_self_intersection", {}, std::to_string(g.central()), BigInt(-sum_u).str(),
          -sum_u == BigInt(g.central()));
  out.add("u_split_readback", {}, format_list(derived_split, [](const BigInt& v) { return v.str(); }),
          format_list(t.u_split, [](const BigInt& v) { return v.str(); }),
          derived_split == t.u_split);
  return std::move(out).finish();
}

}  // namespace plumbing
