#include "gdifs/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "gdifs/error.hpp"
#include "json.hpp"

namespace gdifs {

namespace {

void only_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) fail(ErrorCode::InvalidInput, "unknown key '" + key + "' in " + where);
  }
}

const YAML::Node require(const YAML::Node& node, const std::string& key, const std::string& where) {
  const YAML::Node child = node[key];
  if (!child) fail(ErrorCode::InvalidInput, "missing '" + key + "' in " + where);
  return child;
}

Rational rational_field(const YAML::Node& node, const std::string& key, const std::string& where) {
  const YAML::Node v = require(node, key, where);
  if (!v.IsScalar()) fail(ErrorCode::InvalidInput, "'" + key + "' in " + where + " must be a rational string");
  return Rational::parse(v.Scalar());
}

long integer_field(const YAML::Node& node, const std::string& key, const std::string& where) {
  const YAML::Node v = require(node, key, where);
  try {
    return v.as<long>();
  } catch (const YAML::Exception&) {
    fail(ErrorCode::InvalidInput, "'" + key + "' in " + where + " must be an integer");
  }
}

IfsDocument parse_family(const YAML::Node& node) {
  if (!node.IsMap()) fail(ErrorCode::InvalidInput, "'family' must be a mapping");
  only_keys(node, {"a", "g_u", "b", "c", "g_v", "d"}, "family");
  auto f = [&](const char* key) { return rational_field(node, key, "family"); };
  const Rational a = f("a"), g_u = f("g_u"), b = f("b"), c = f("c"), g_v = f("g_v"), d = f("d");
  IfsDocument doc{canonical_two_vertex(a, g_u, b, c, g_v, d), TwoVertexFamily{a, g_u, b, c, g_v, d}};
  return doc;
}

IfsDocument parse_graph(const YAML::Node& root) {
  const long n = integer_field(root, "vertices", "document");
  if (n <= 0) fail(ErrorCode::InvalidInput, "'vertices' must be positive");
  const YAML::Node edges = require(root, "edges", "document");
  if (!edges.IsSequence()) fail(ErrorCode::InvalidInput, "'edges' must be a list");
  std::vector<Edge> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const YAML::Node e = edges[i];
    const std::string where = "edge #" + std::to_string(i);
    if (!e.IsMap()) fail(ErrorCode::InvalidInput, where + " must be a mapping");
    only_keys(e, {"id", "from", "to", "ratio", "translation"}, where);
    const long from = integer_field(e, "from", where), to = integer_field(e, "to", where);
    if (from < 0 || to < 0) fail(ErrorCode::InvalidInput, where + " has a negative vertex");
    list.push_back({integer_field(e, "id", where), static_cast<VertexId>(from), static_cast<VertexId>(to),
                    {rational_field(e, "ratio", where), rational_field(e, "translation", where)}});
  }
  return {build_ifs(static_cast<std::size_t>(n), std::move(list)), std::nullopt};
}

}  // namespace

IfsDocument parse_ifs_document(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed document: ") + e.what());
  }
  if (!root.IsMap()) fail(ErrorCode::InvalidInput, "document must be a mapping");
  try {
    if (root["family"]) {
      only_keys(root, {"family"}, "document");
      return parse_family(root["family"]);
    }
    only_keys(root, {"vertices", "edges"}, "document");
    return parse_graph(root);
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed document: ") + e.what());
  }
}

IfsDocument load_ifs_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ifs_document(buf.str());
}

std::string emit_ifs_document(const DirectedGraphIfs& ifs) {
  std::string out = "{\"vertices\": " + std::to_string(ifs.vertex_count()) + ", \"edges\": [\n";
  const auto edges = ifs.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const nlohmann::ordered_json j = {{"id", e.id},
                                      {"from", e.from},
                                      {"to", e.to},
                                      {"ratio", e.map.ratio.str()},
                                      {"translation", e.map.translation.str()}};
    out += "  " + j.dump(-1, ' ', false) + (i + 1 < edges.size() ? ",\n" : "\n");
  }
  return out + "]}\n";
}

}  // namespace gdifs
