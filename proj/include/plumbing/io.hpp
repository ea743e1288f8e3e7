#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "plumbing/families.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/seifert.hpp"
#include "plumbing/toric.hpp"

namespace plumbing {

using Json = nlohmann::ordered_json;

/// Malformed JSON text or a document that does not match its schema.
/// `location()` is "line L, column C" for syntax errors and a JSON pointer
/// (e.g. "/legs/1/0") for schema errors.
class JsonInputError : public std::runtime_error {
 public:
  JsonInputError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

Json parse_json_text(std::string_view text);

/// {"central": int, "legs": [[int, ...], ...]}
Json to_json(const StarPlumbing& g);
StarPlumbing graph_from_json(const Json& j);

/// {"e0": int, "ratios": ["p/q", ...]}
Json to_json(const SeifertData& sd);
SeifertData seifert_from_json(const Json& j);

/// {"family": "Gamma", "p": int, "q": int, "r": int}
Json to_json(const FamilyTag& tag);
FamilyTag tag_from_json(const Json& j);

/// {"central": "p/q", "legs": [["p/q", ...], ...]}
Json to_json(const AreaSpec& areas);
AreaSpec areas_from_json(const Json& j);

/// Template document. The graph and requested areas are embedded so the file
/// can be verified on its own.
Json to_json(const Template& t, const StarPlumbing& g, const AreaSpec& areas);

struct TemplateDocument {
  Template tmpl;
  std::optional<StarPlumbing> graph;
  std::optional<AreaSpec> areas;
};
TemplateDocument template_from_json(const Json& j);

Json to_json(const VerifyReport& report);

}  // namespace plumbing
