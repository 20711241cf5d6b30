#include "mcat/document.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "mcat/errors.hpp"

namespace mcat::doc {

using nlohmann::json;

namespace {

constexpr std::size_t kDimensionCap = 64;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& member(const json& node, const std::string& path, const char* name) {
  auto it = node.find(name);
  if (it == node.end()) fail(path, std::string("missing required field '") + name + "'");
  return *it;
}

std::string string_at(const json& node, const std::string& path, const char* name) {
  const json& value = member(node, path, name);
  if (!value.is_string()) fail(path + "." + name, "expected a string");
  return value.get<std::string>();
}

double finite_number(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a finite number");
  const double out = value.get<double>();
  if (!std::isfinite(out)) fail(path, "number must be finite");
  return out;
}

Instance parse_instance(const json& node) {
  if (!node.is_object()) fail("instance", "expected an object");
  const std::string category = string_at(node, "instance", "category");
  const std::string product = string_at(node, "instance", "product");

  CategoryId cat;
  if (category == "finset")
    cat = CategoryId::FinSet;
  else if (category == "vec")
    cat = CategoryId::Vec;
  else
    fail("instance.category", "expected 'finset' or 'vec', got '" + category + "'");

  ProductKind kind;
  if (product == "coproduct")
    kind = ProductKind::Coproduct;
  else if (product == "product")
    kind = ProductKind::Product;
  else if (product == "directsum")
    kind = ProductKind::DirectSum;
  else if (product == "tensor")
    kind = ProductKind::Tensor;
  else
    fail("instance.product", "unknown product '" + product + "'");

  if (!product_matches_category(cat, kind))
    fail("instance.product",
         std::string("product '") + product + "' does not fit category '" + category + "'");

  double tolerance = cat == CategoryId::FinSet ? 0.0 : Instance::kDefaultTolerance;
  if (auto it = node.find("tolerance"); it != node.end()) {
    tolerance = finite_number(*it, "instance.tolerance");
    if (tolerance < 0.0) fail("instance.tolerance", "must be nonnegative");
    if (cat == CategoryId::FinSet && tolerance != 0.0)
      fail("instance.tolerance", "finset instances require tolerance 0");
  }
  return Instance(cat, kind, tolerance);
}

Object parse_object(const Instance& instance, const std::string& name, const json& node) {
  const std::string path = "objects." + name;
  if (instance.category() == CategoryId::FinSet) {
    if (!node.is_array()) fail(path, "finset objects are arrays of element labels");
    if (node.size() > kDimensionCap)
      fail(path, "cardinality " + std::to_string(node.size()) + " exceeds the cap of " +
                     std::to_string(kDimensionCap));
    std::vector<Label> labels;
    labels.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(Label::atom(node[i].get<std::string>()));
    }
    try {
      return Object::finite_set(instance.key(), std::move(labels));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (!node.is_number_unsigned()) fail(path, "vec objects are nonnegative integer dimensions");
  const std::size_t dim = node.get<std::size_t>();
  if (dim > kDimensionCap)
    fail(path, "dimension " + std::to_string(dim) + " exceeds the cap of " +
                   std::to_string(kDimensionCap));
  return Object::space(instance.key(), dim);
}

const Object& object_ref(const Document& document, const std::string& path,
                         const std::string& name) {
  auto it = document.objects.find(name);
  if (it == document.objects.end()) fail(path, "references undeclared object '" + name + "'");
  return it->second;
}

Morphism parse_morphism(const Document& document, const std::string& name, const json& node) {
  const std::string path = "morphisms." + name;
  if (!node.is_object()) fail(path, "expected an object");
  const Object& dom = object_ref(document, path + ".dom", string_at(node, path, "dom"));
  const Object& cod = object_ref(document, path + ".cod", string_at(node, path, "cod"));

  if (document.instance.category() == CategoryId::FinSet) {
    const json& table = member(node, path, "table");
    if (!table.is_object()) fail(path + ".table", "expected a label-to-label map");
    std::vector<std::size_t> entries(dom.size(), 0);
    std::vector<bool> seen(dom.size(), false);
    for (const auto& [from, to] : table.items()) {
      auto from_index = dom.index_of(Label::atom(from));
      if (!from_index)
        fail(path + ".table", "'" + from + "' is not an element of the domain");
      if (!to.is_string()) fail(path + ".table." + from, "expected a string");
      auto to_index = cod.index_of(Label::atom(to.get<std::string>()));
      if (!to_index)
        fail(path + ".table." + from,
             "'" + to.get<std::string>() + "' is not an element of the codomain");
      entries[*from_index] = *to_index;
      seen[*from_index] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        fail(path + ".table",
             "missing entry for domain element '" + dom.elements()[i].str() + "'");
    return Morphism::function(dom, cod, std::move(entries));
  }

  const json& matrix = member(node, path, "matrix");
  if (!matrix.is_array()) fail(path + ".matrix", "expected an array of rows");
  if (matrix.size() != cod.dim())
    fail(path + ".matrix", "expected " + std::to_string(cod.dim()) + " rows, got " +
                               std::to_string(matrix.size()));
  ComplexMatrix m(cod.dim(), dom.dim());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string row_path = path + ".matrix[" + std::to_string(i) + "]";
    const json& row = matrix[i];
    if (!row.is_array()) fail(row_path, "expected an array of [re, im] pairs");
    if (row.size() != dom.dim())
      fail(row_path,
           "expected " + std::to_string(dom.dim()) + " entries, got " + std::to_string(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell_path = row_path + "[" + std::to_string(j) + "]";
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2)
        fail(cell_path, "complex entries are [re, im] pairs");
      m(i, j) = Complex(finite_number(cell[0], cell_path + "[0]"),
                        finite_number(cell[1], cell_path + "[1]"));
    }
  }
  return Morphism::linear(dom, cod, std::move(m));
}

Document::Split parse_split(const Document& document, const std::string& name, const json& node) {
  const std::string path = "splits." + name;
  if (!node.is_object()) fail(path, "expected an object");
  Document::Split split;
  auto parse_pair = [&](const char* field) -> std::optional<std::pair<std::string, std::string>> {
    auto it = node.find(field);
    if (it == node.end()) return std::nullopt;
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_string() || !(*it)[1].is_string())
      fail(path + "." + field, "expected a pair of object names");
    auto first = (*it)[0].get<std::string>();
    auto second = (*it)[1].get<std::string>();
    object_ref(document, path + "." + field, first);
    object_ref(document, path + "." + field, second);
    return std::make_pair(first, second);
  };
  split.dom = parse_pair("dom");
  split.cod = parse_pair("cod");
  auto parse_iso = [&](const char* field) -> std::optional<std::string> {
    auto it = node.find(field);
    if (it == node.end()) return std::nullopt;
    if (!it->is_string()) fail(path + "." + field, "expected a morphism name");
    const std::string iso = it->get<std::string>();
    if (!document.morphisms.count(iso))
      fail(path + "." + field, "references undeclared morphism '" + iso + "'");
    return iso;
  };
  split.dom_iso = parse_iso("dom_iso");
  split.cod_iso = parse_iso("cod_iso");
  return split;
}

}  // namespace

bool Document::operator==(const Document& other) const {
  return schema_version == other.schema_version && instance == other.instance &&
         objects == other.objects && morphisms == other.morphisms && splits == other.splits;
}

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: JSON syntax error: ") + e.what());
  }
  if (!root.is_object()) fail("document", "expected a JSON object");

  Document document;
  const json& version = member(root, "document", "schema_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    fail("schema_version", "this tool reads schema version \"1\"");
  document.schema_version = "1";
  document.instance = parse_instance(member(root, "document", "instance"));

  if (auto it = root.find("objects"); it != root.end()) {
    if (!it->is_object()) fail("objects", "expected an object keyed by name");
    for (const auto& [name, node] : it->items())
      document.objects.emplace(name, parse_object(document.instance, name, node));
  }
  if (auto it = root.find("morphisms"); it != root.end()) {
    if (!it->is_object()) fail("morphisms", "expected an object keyed by name");
    for (const auto& [name, node] : it->items())
      document.morphisms.emplace(name, parse_morphism(document, name, node));
  }
  if (auto it = root.find("splits"); it != root.end()) {
    if (!it->is_object()) fail("splits", "expected an object keyed by name");
    for (const auto& [name, node] : it->items())
      document.splits.emplace(name, parse_split(document, name, node));
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "schema_version" && key != "instance" && key != "objects" && key != "morphisms" &&
        key != "splits")
      fail(key, "unknown top-level field");
  }
  return document;
}

std::string serialize_document(const Document& document, int indent) {
  json root;
  root["schema_version"] = document.schema_version;
  json instance;
  instance["category"] = to_string(document.instance.category());
  instance["product"] = to_string(document.instance.product());
  instance["tolerance"] = document.instance.tolerance();
  root["instance"] = std::move(instance);

  json objects = json::object();
  for (const auto& [name, object] : document.objects) {
    if (object.is_finite_set()) {
      json labels = json::array();
      for (const auto& label : object.elements()) labels.push_back(label.str());
      objects[name] = std::move(labels);
    } else {
      objects[name] = object.dim();
    }
  }
  root["objects"] = std::move(objects);

  json morphisms = json::object();
  for (const auto& [name, morphism] : document.morphisms) {
    json node;
    // dom/cod names: documents declare morphisms only over named objects.
    for (const auto& [obj_name, object] : document.objects) {
      if (object == morphism.dom()) node["dom"] = obj_name;
      if (object == morphism.cod()) node["cod"] = obj_name;
    }
    if (morphism.is_function()) {
      json table = json::object();
      for (std::size_t i = 0; i < morphism.table().size(); ++i)
        table[morphism.dom().elements()[i].str()] =
            morphism.cod().elements()[morphism.table()[i]].str();
      node["table"] = std::move(table);
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < morphism.matrix().rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < morphism.matrix().cols(); ++j) {
          const Complex& z = morphism.matrix()(i, j);
          row.push_back(json::array({z.real(), z.imag()}));
        }
        rows.push_back(std::move(row));
      }
      node["matrix"] = std::move(rows);
    }
    morphisms[name] = std::move(node);
  }
  root["morphisms"] = std::move(morphisms);

  if (!document.splits.empty()) {
    json splits = json::object();
    for (const auto& [name, split] : document.splits) {
      json node = json::object();
      if (split.dom) node["dom"] = json::array({split.dom->first, split.dom->second});
      if (split.cod) node["cod"] = json::array({split.cod->first, split.cod->second});
      if (split.dom_iso) node["dom_iso"] = *split.dom_iso;
      if (split.cod_iso) node["cod_iso"] = *split.cod_iso;
      splits[name] = std::move(node);
    }
    root["splits"] = std::move(splits);
  }
  return root.dump(indent) + "\n";
}

}  // namespace mcat::doc
