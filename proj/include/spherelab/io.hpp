#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spherelab/explicit_map.hpp"
#include "spherelab/hermitian_form.hpp"
#include "spherelab/reduction.hpp"
#include "spherelab/sphere_map.hpp"

namespace spherelab::io {

using Json = nlohmann::ordered_json;

/// Malformed input; `where` is a JSON pointer or a "line:column" position.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Form files: {"n", "mode": "exact"|"float", "entries": [{"alpha", "beta", "re", "im"}]}.
/// Exact mode takes "p/q" strings; float mode also takes JSON numbers, which
/// are converted exactly from their binary value. One member of each
/// conjugate pair suffices; a pair given twice must agree.
HermitianForm parse_form(const Json& j);
Json form_to_json(const HermitianForm& r);

struct MapInput {
  int n = 0;
  GramMap gram;
  Denominator den;
  /// Present for explicit-mode numerators.
  std::optional<ExplicitMap> explicit_map;
};

MapInput parse_map(const Json& j);
/// Gram-mode map object.
Json map_to_json(const GramMap& g, const Denominator& q);
Json map_to_json(const SphereMapForm& f);

/// Array of {"map", "S"} objects; S is empty for the input.
Json chain_to_json(const Reduction& red);

Json parse_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json index_json(const MultiIndex& a);
std::string scalar_text(const ExactScalar& x);

}  // namespace spherelab::io
