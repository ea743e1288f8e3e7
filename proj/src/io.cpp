#include "plumbing/io.hpp"

#include <limits>

namespace plumbing {

namespace {

/// A JSON value together with its pointer, so schema errors can say where.
class Node {
 public:
  Node(const Json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const Json& value() const { return value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw JsonInputError(path_.empty() ? "/" : path_, message);
  }

  Node field(const char* key) const {
    if (!value_.is_object()) fail("expected an object");
    const auto it = value_.find(key);
    if (it == value_.end()) fail(std::string("missing field \"") + key + "\"");
    return Node(*it, path_ + "/" + key);
  }

  bool has(const char* key) const { return value_.is_object() && value_.contains(key); }

  std::vector<Node> items() const {
    if (!value_.is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_.size(); ++i)
      out.emplace_back(value_[i], path_ + "/" + std::to_string(i));
    return out;
  }

  std::int64_t integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    if (value_.is_number_unsigned() &&
        value_.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      fail("integer out of range");
    return value_.get<std::int64_t>();
  }

  BigInt big_integer() const {
    if (value_.is_number_integer()) return BigInt(integer());
    if (value_.is_string()) {
      const auto r = rational();
      if (denominator(r) != 1) fail("expected an integer");
      return numerator(r);
    }
    fail("expected an integer");
  }

  Rational rational() const {
    if (value_.is_number_integer()) return Rational(integer());
    if (!value_.is_string()) fail("expected a rational string \"p/q\"");
    try {
      return parse_rational(value_.get<std::string>());
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

 private:
  const Json& value_;
  std::string path_;
};

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

template <typename T, typename F>
T construct(const Node& where, F&& make) {
  try {
    return make();
  } catch (const JsonInputError&) {
    throw;
  } catch (const std::exception& e) {
    where.fail(e.what());
  }
}

StarPlumbing graph_from_node(const Node& root) {
  const auto central = root.field("central").integer();
  std::vector<Leg> legs;
  for (const auto& leg_node : root.field("legs").items()) {
    Leg leg;
    for (const auto& w : leg_node.items()) {
      const auto weight = w.integer();
      if (weight > -2) w.fail("leg weight " + std::to_string(weight) + " is not <= -2");
      leg.push_back(weight);
    }
    if (leg.empty()) leg_node.fail("leg is empty");
    legs.push_back(std::move(leg));
  }
  return construct<StarPlumbing>(root, [&] { return StarPlumbing(central, std::move(legs)); });
}

AreaSpec areas_from_node(const Node& root) {
  AreaSpec areas;
  areas.central = root.field("central").rational();
  for (const auto& leg_node : root.field("legs").items()) {
    std::vector<Rational> leg;
    for (const auto& a : leg_node.items()) leg.push_back(a.rational());
    areas.legs.push_back(std::move(leg));
  }
  return areas;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonInputError("line " + std::to_string(line) + ", column " + std::to_string(column),
                         "malformed JSON");
  }
}

Json to_json(const StarPlumbing& g) {
  Json legs = Json::array();
  for (const auto& leg : g.legs()) legs.push_back(leg);
  return Json{{"central", g.central()}, {"legs", legs}};
}

StarPlumbing graph_from_json(const Json& j) { return graph_from_node(Node(j, "")); }

Json to_json(const SeifertData& sd) {
  return Json{{"e0", sd.e0()}, {"ratios", rational_list(sd.ratios())}};
}

SeifertData seifert_from_json(const Json& j) {
  const Node root(j, "");
  const auto e0 = root.field("e0").integer();
  std::vector<Rational> ratios;
  for (const auto& r : root.field("ratios").items()) ratios.push_back(r.rational());
  return construct<SeifertData>(root, [&] { return SeifertData(e0, std::move(ratios)); });
}

Json to_json(const FamilyTag& tag) {
  return Json{{"family", std::string(family_name(tag.family))},
              {"p", tag.p},
              {"q", tag.q},
              {"r", tag.r}};
}

FamilyTag tag_from_json(const Json& j) {
  const Node root(j, "");
  const Node family_node = root.field("family");
  const auto family = parse_family(family_node.string());
  if (!family) family_node.fail("unknown family \"" + family_node.string() + "\"");
  FamilyTag tag{*family, 0, 0, 0};
  int* slots[] = {&tag.p, &tag.q, &tag.r};
  const char* names[] = {"p", "q", "r"};
  for (int k = 0; k < 3; ++k) {
    const Node n = root.field(names[k]);
    const auto v = n.integer();
    if (v < 0 || v > std::numeric_limits<int>::max()) n.fail("parameter out of range");
    *slots[k] = static_cast<int>(v);
  }
  return tag;
}

Json to_json(const AreaSpec& areas) {
  Json legs = Json::array();
  for (const auto& leg : areas.legs) legs.push_back(rational_list(leg));
  return Json{{"central", to_string(areas.central)}, {"legs", legs}};
}

AreaSpec areas_from_json(const Json& j) { return areas_from_node(Node(j, "")); }

Json to_json(const Template& t, const StarPlumbing& g, const AreaSpec& areas) {
  Json split = Json::array();
  for (const auto& u : t.u_split) split.push_back(big_to_json(u));
  Json legs = Json::array();
  for (const auto& lt : t.legs) {
    Json taus = Json::array();
    for (const auto& tau : lt.taus) taus.push_back(Json::array({big_to_json(tau.u), big_to_json(tau.v)}));
    Json points = Json::array();
    for (const auto& p : lt.points) points.push_back(Json::array({to_string(p.x), to_string(p.y)}));
    legs.push_back(Json{{"taus", taus},
                        {"points", points},
                        {"lambdas", rational_list(lt.lambdas)},
                        {"sigma", to_string(lt.sigma)},
                        {"K", to_string(lt.offset)}});
  }
  return Json{{"graph", to_json(g)},
              {"areas", to_json(areas)},
              {"u_split", split},
              {"y0", to_string(t.y0)},
              {"lambda0", to_string(t.lambda0)},
              {"legs", legs}};
}

TemplateDocument template_from_json(const Json& j) {
  const Node root(j, "");
  TemplateDocument doc;
  if (root.has("graph")) doc.graph = graph_from_node(root.field("graph"));
  if (root.has("areas")) doc.areas = areas_from_node(root.field("areas"));
  for (const auto& u : root.field("u_split").items()) doc.tmpl.u_split.push_back(u.big_integer());
  doc.tmpl.y0 = root.field("y0").rational();
  doc.tmpl.lambda0 = root.field("lambda0").rational();
  for (const auto& leg_node : root.field("legs").items()) {
    LegTemplate lt;
    for (const auto& tau : leg_node.field("taus").items()) {
      const auto pair = tau.items();
      if (pair.size() != 2) tau.fail("expected [u, v]");
      lt.taus.push_back({pair[0].big_integer(), pair[1].big_integer()});
    }
    for (const auto& p : leg_node.field("points").items()) {
      const auto pair = p.items();
      if (pair.size() != 2) p.fail("expected [\"x\", \"y\"]");
      lt.points.push_back({pair[0].rational(), pair[1].rational()});
    }
    for (const auto& l : leg_node.field("lambdas").items()) lt.lambdas.push_back(l.rational());
    lt.sigma = leg_node.field("sigma").rational();
    lt.offset = leg_node.field("K").rational();
    if (lt.points.empty()) leg_node.fail("leg has no points");
    doc.tmpl.legs.push_back(std::move(lt));
  }
  if (doc.tmpl.legs.empty()) root.field("legs").fail("template has no legs");
  return doc;
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}};
    entry["leg"] = c.leg ? Json(*c.leg) : Json(nullptr);
    entry["expected"] = c.expected;
    entry["actual"] = c.actual;
    entry["ok"] = c.ok;
    checks.push_back(std::move(entry));
  }
  return Json{{"passed", report.passed}, {"checks", checks}};
}

}  // namespace plumbing
