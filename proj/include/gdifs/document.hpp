#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gdifs/ifs_graph.hpp"

namespace gdifs {

/// Parsed input. `family` is set for the six-parameter shorthand.
struct IfsDocument {
  DirectedGraphIfs ifs;
  std::optional<TwoVertexFamily> family;
};

/// Accepts YAML (and therefore JSON):
///
///   vertices: 2
///   edges:
///     - {id: 1, from: 0, to: 0, ratio: "1/4", translation: "0"}
///
/// or
///
///   family: {a: "1/4", g_u: "5/12", b: "1/3", c: "1/7", g_v: "11/21", d: "1/3"}
///
/// Every number other than counts and ids must be an exact rational "p/q" or "p".
/// Throws InvalidInput for malformed documents plus any validation error of the IFS.
IfsDocument parse_ifs_document(std::string_view text);
IfsDocument load_ifs_document(const std::string& path);

/// Graph form as compact JSON, one edge per line; parse_ifs_document reads it back.
std::string emit_ifs_document(const DirectedGraphIfs& ifs);

}  // namespace gdifs
