#include "llv/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "llv/errors.hpp"

namespace llv {

namespace {

using json = nlohmann::ordered_json;

Vec parse_rational_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of rational strings");
  Vec v;
  v.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_string()) throw SchemaError(what + " entries must be strings like \"p/q\"");
    v.push_back(parse_rational(entry.get<std::string>()));
  }
  return v;
}

json rational_array(const Vec& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(rational_to_string(x));
  return out;
}

int require_int(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw SchemaError("missing or non-integer field '" + key + "'");
  return j[key].get<int>();
}

}  // namespace

GradedFrobeniusAlgebra load_algebra(const std::string& json_text, bool validate) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top-level document must be an object");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw SchemaError("missing or non-string field 'name'");
  const std::string name = doc["name"].get<std::string>();
  const int shift = require_int(doc, "shift");

  if (!doc.contains("components") || !doc["components"].is_array())
    throw SchemaError("missing or non-array field 'components'");
  std::vector<GradedVectorSpace::Component> components;
  for (const json& c : doc["components"]) {
    if (!c.is_object()) throw SchemaError("components entries must be objects");
    const int degree = require_int(c, "degree");
    const int dim = require_int(c, "dim");
    if (dim < 0) throw SchemaError("component dimension must be nonnegative");
    components.emplace_back(degree, static_cast<std::size_t>(dim));
  }
  GradedVectorSpace space;
  try {
    space = GradedVectorSpace(shift, std::move(components));
  } catch (const ValidationError& e) {
    throw SchemaError(e.what());
  }

  if (!doc.contains("unit")) throw SchemaError("missing field 'unit'");
  if (!doc.contains("integral")) throw SchemaError("missing field 'integral'");
  Vec unit = parse_rational_array(doc["unit"], "unit");
  Vec integral = parse_rational_array(doc["integral"], "integral");
  if (unit.size() != space.dim(0)) throw SchemaError("unit has the wrong length");
  if (integral.size() != space.dim(space.top_degree()))
    throw SchemaError("integral has the wrong length");

  GradedFrobeniusAlgebra A(name, space, std::move(unit), std::move(integral));

  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw SchemaError("'products' must be an array");
    for (const json& p : doc["products"]) {
      if (!p.is_object()) throw SchemaError("products entries must be objects");
      const int ka = require_int(p, "deg_a");
      const int ia = require_int(p, "idx_a");
      const int kb = require_int(p, "deg_b");
      const int ib = require_int(p, "idx_b");
      if (ia < 0 || ib < 0) throw SchemaError("basis indices must be nonnegative");
      if (!p.contains("value")) throw SchemaError("product entry missing 'value'");
      Vec value = parse_rational_array(p["value"], "product value");
      if (static_cast<std::size_t>(ia) >= space.dim(ka) ||
          static_cast<std::size_t>(ib) >= space.dim(kb))
        throw SchemaError("product entry indexes a missing basis vector");
      if (value.size() != space.dim(ka + kb))
        throw SchemaError("product value has the wrong dimension");
      A.set_basis_product(ka, static_cast<std::size_t>(ia), kb, static_cast<std::size_t>(ib),
                          std::move(value));
    }
  }

  if (validate) {
    ValidationReport report = validate_algebra(A);
    if (!report.ok) {
      std::ostringstream os;
      os << "algebra fails validation:";
      for (const std::string& v : report.violations) os << "\n  - " << v;
      throw ValidationError(os.str());
    }
  }
  return A;
}

GradedFrobeniusAlgebra load_algebra_stream(std::istream& in, bool validate) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_algebra(buffer.str(), validate);
}

GradedFrobeniusAlgebra load_algebra_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  return load_algebra_stream(in, validate);
}

std::string save_algebra(const GradedFrobeniusAlgebra& A) {
  json doc;
  doc["name"] = A.name();
  doc["shift"] = A.space().shift();
  doc["components"] = json::array();
  for (const auto& [degree, dim] : A.space().components())
    doc["components"].push_back({{"degree", degree}, {"dim", dim}});
  doc["unit"] = rational_array(A.unit());
  doc["integral"] = rational_array(A.integral());
  json products = json::array();
  for (const auto& [ka, dka] : A.space().components())
    for (const auto& [kb, dkb] : A.space().components()) {
      if (!A.has_product_table(ka, kb)) continue;
      for (std::size_t i = 0; i < dka; ++i)
        for (std::size_t j = 0; j < dkb; ++j) {
          Vec value = A.basis_product(ka, i, kb, j);
          if (is_zero(value)) continue;
          products.push_back({{"deg_a", ka},
                              {"idx_a", i},
                              {"deg_b", kb},
                              {"idx_b", j},
                              {"value", rational_array(value)}});
        }
    }
  doc["products"] = std::move(products);
  return doc.dump(2) + "\n";
}

}  // namespace llv
