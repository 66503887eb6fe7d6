#include "tcplan/algebra/presentation_json.hpp"

#include <fstream>

namespace tcplan::algebra {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw AlgebraError(AlgebraErrc::MalformedPresentation, what);
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) malformed(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) malformed(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Rational coefficient(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw AlgebraError(AlgebraErrc::BadCoefficient, where + ": coefficient must be a \"p/q\" string");
}

}  // namespace

Presentation presentation_from_json(const nlohmann::json& doc) {
  Presentation p;
  const auto& basis = field(doc, "basis", "presentation");
  if (!basis.is_array()) malformed("\"basis\" must be an array");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    const auto& deg = field(basis[i], "degree", where);
    if (!deg.is_number_integer()) malformed(where + ": \"degree\" must be an integer");
    p.basis.push_back({string_field(basis[i], "name", where), deg.get<int>()});
  }
  p.unit = string_field(doc, "unit", "presentation");
  if (doc.contains("products")) {
    const auto& products = doc.at("products");
    if (!products.is_array()) malformed("\"products\" must be an array");
    for (std::size_t i = 0; i < products.size(); ++i) {
      const std::string where = "products[" + std::to_string(i) + "]";
      Presentation::Product prod{string_field(products[i], "left", where),
                                 string_field(products[i], "right", where), {}};
      const auto& result = field(products[i], "result", where);
      if (!result.is_array()) malformed(where + ": \"result\" must be an array");
      for (std::size_t k = 0; k < result.size(); ++k) {
        const std::string w = where + ".result[" + std::to_string(k) + "]";
        prod.result.emplace_back(string_field(result[k], "name", w), coefficient(field(result[k], "coeff", w), w));
      }
      p.products.push_back(std::move(prod));
    }
  }
  if (doc.contains("generators")) {
    const auto& gens = doc.at("generators");
    if (!gens.is_array()) malformed("\"generators\" must be an array");
    for (const auto& g : gens) {
      if (!g.is_string()) malformed("\"generators\" entries must be strings");
      p.generators.push_back(g.get<std::string>());
    }
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
  return presentation_from_json(doc);
}

nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json doc;
  doc["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : p.basis) doc["basis"].push_back({{"name", b.label}, {"degree", b.degree}});
  doc["unit"] = p.unit;
  doc["products"] = nlohmann::ordered_json::array();
  for (const auto& prod : p.products) {
    nlohmann::ordered_json entry{{"left", prod.left}, {"right", prod.right}};
    entry["result"] = nlohmann::ordered_json::array();
    for (const auto& [name, c] : prod.result) {
      entry["result"].push_back({{"name", name}, {"coeff", format_rational(c)}});
    }
    doc["products"].push_back(std::move(entry));
  }
  if (!p.generators.empty()) doc["generators"] = p.generators;
  return doc;
}

nlohmann::ordered_json element_to_json(const AlgElement& x) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [i, c] : x.coefficients()) out[x.algebra()->label(i)] = format_rational(c);
  return out;
}

}  // namespace tcplan::algebra
