#ifndef GARSIDE_GERM_IO_HPP
#define GARSIDE_GERM_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/ids.hpp"

namespace garside {

// Germ file layout (JSON):
//   {"objects": ["x", ...],
//    "elements": [{"id": 0, "name": "e", "source": "x", "target": "x"}, ...],
//    "identities": {"x": 0, ...},
//    "products": [[left, right, result], ...]}
// Element ids are positions in "elements". Products are listed in
// lexicographic order; the serializer is byte-stable.

namespace detail {

inline std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

inline const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError("germ file: missing field '" + where + key + "'");
  return j.at(key);
}

inline std::uint32_t element_ref(const nlohmann::json& v, const std::string& where, std::size_t n) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw StructuralError("germ file: field '" + where + "' must be a non-negative element id");
  }
  const auto id = v.get<std::uint64_t>();
  if (id >= n) throw StructuralError("germ file: field '" + where + "' refers to unknown element " + std::to_string(id));
  return static_cast<std::uint32_t>(id);
}

}  // namespace detail

inline GermTable parse_germ(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("germ file: ") + e.what());
  }
  if (!j.is_object()) throw StructuralError("germ file: top level must be an object");

  const auto& objs = detail::field(j, "objects", "");
  if (!objs.is_array()) throw StructuralError("germ file: field 'objects' must be an array");
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (!objs[i].is_string()) throw StructuralError("germ file: field 'objects[" + std::to_string(i) + "]' must be a string");
    objects.push_back(objs[i].get<std::string>());
  }
  auto object_ref = [&](const nlohmann::json& v, const std::string& where) {
    if (!v.is_string()) throw StructuralError("germ file: field '" + where + "' must be an object name");
    const auto s = v.get<std::string>();
    for (std::size_t x = 0; x < objects.size(); ++x) {
      if (objects[x] == s) return ObjectId{x};
    }
    throw StructuralError("germ file: field '" + where + "' names unknown object '" + s + "'");
  };

  const auto& els = detail::field(j, "elements", "");
  if (!els.is_array()) throw StructuralError("germ file: field 'elements' must be an array");
  std::vector<ElementInfo> elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "].";
    const auto& e = els[i];
    if (e.contains("id") && detail::element_ref(e.at("id"), where + "id", els.size()) != i) {
      throw StructuralError("germ file: field '" + where + "id' must equal the element's position " + std::to_string(i));
    }
    const auto& nm = detail::field(e, "name", where);
    if (!nm.is_string()) throw StructuralError("germ file: field '" + where + "name' must be a string");
    elements.push_back({nm.get<std::string>(), object_ref(detail::field(e, "source", where), where + "source"),
                        object_ref(detail::field(e, "target", where), where + "target")});
  }

  const auto& ids = detail::field(j, "identities", "");
  if (!ids.is_object()) throw StructuralError("germ file: field 'identities' must map object names to element ids");
  std::vector<ElementId> identities(objects.size(), ElementId{0xffffffffu});
  std::vector<bool> seen(objects.size(), false);
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    const std::string where = "identities." + it.key();
    const auto x = object_ref(nlohmann::json(it.key()), where);
    identities[x.index()] = ElementId{detail::element_ref(it.value(), where, elements.size())};
    seen[x.index()] = true;
  }
  for (std::size_t x = 0; x < objects.size(); ++x) {
    if (!seen[x]) throw StructuralError("germ file: field 'identities' has no entry for object '" + objects[x] + "'");
  }

  const auto& prods = detail::field(j, "products", "");
  if (!prods.is_array()) throw StructuralError("germ file: field 'products' must be an array");
  std::vector<ProductEntry> products;
  for (std::size_t i = 0; i < prods.size(); ++i) {
    const std::string where = "products[" + std::to_string(i) + "]";
    const auto& p = prods[i];
    if (!p.is_array() || p.size() != 3) throw StructuralError("germ file: field '" + where + "' must be [left, right, result]");
    products.push_back({ElementId{detail::element_ref(p[0], where + "[0]", elements.size())},
                        ElementId{detail::element_ref(p[1], where + "[1]", elements.size())},
                        ElementId{detail::element_ref(p[2], where + "[2]", elements.size())}});
  }
  return GermTable(std::move(objects), std::move(elements), std::move(identities), products);
}

inline std::string serialize_germ(const GermTable& t) {
  std::ostringstream out;
  out << "{\n  \"objects\": [";
  for (std::size_t x = 0; x < t.num_objects(); ++x) out << (x ? ", " : "") << detail::quoted(t.object_names()[x]);
  out << "],\n  \"elements\": [\n";
  for (std::size_t i = 0; i < t.num_elements(); ++i) {
    const auto& e = t.elements()[i];
    out << "    {\"id\": " << i << ", \"name\": " << detail::quoted(e.name)
        << ", \"source\": " << detail::quoted(t.object_name(e.source))
        << ", \"target\": " << detail::quoted(t.object_name(e.target)) << "}"
        << (i + 1 < t.num_elements() ? ",\n" : "\n");
  }
  out << "  ],\n  \"identities\": {";
  for (std::size_t x = 0; x < t.num_objects(); ++x) {
    out << (x ? ", " : "") << detail::quoted(t.object_names()[x]) << ": " << t.identities()[x].value;
  }
  out << "},\n  \"products\": [\n";
  const auto prods = t.products();
  for (std::size_t i = 0; i < prods.size(); ++i) {
    out << "    [" << prods[i].left.value << ", " << prods[i].right.value << ", " << prods[i].result.value << "]"
        << (i + 1 < prods.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

inline GermTable load_germ(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open germ file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ(buf.str());
}

inline void save_germ(const GermTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write germ file '" + path + "'");
  out << serialize_germ(t);
}

}  // namespace garside

#endif  // GARSIDE_GERM_IO_HPP
