#include "doctest.h"
#include "fixtures.hpp"
#include "gdifs/document.hpp"
#include "gdifs/render.hpp"
#include "test_support.hpp"

using namespace gdifs;

TEST_CASE("family shorthand") {
  const auto doc = parse_ifs_document(R"(family: {a: "1/4", g_u: "5/12", b: "1/3", c: "1/7", g_v: "11/21", d: "1/3"})");
  CHECK(doc.family);
  CHECK(doc.ifs == fixtures::canonical(fixtures::family_c()));
}

TEST_CASE("graph form in YAML and JSON") {
  const auto yaml = parse_ifs_document(R"(
vertices: 1
edges:
  - {id: 1, from: 0, to: 0, ratio: 1/3, translation: 0}
  - {id: 2, from: 0, to: 0, ratio: "1/3", translation: "2/3"}
)");
  CHECK(yaml.ifs == fixtures::cantor());
  CHECK_FALSE(yaml.family);
  const auto json = parse_ifs_document(
      R"({"vertices": 1, "edges": [{"id": 1, "from": 0, "to": 0, "ratio": "1/3", "translation": "0"},
          {"id": 2, "from": 0, "to": 0, "ratio": "1/3", "translation": "2/3"}]})");
  CHECK(json.ifs == yaml.ifs);
}

TEST_CASE("malformed documents") {
  auto code = [](const char* text) { return error_code([&] { parse_ifs_document(text); }); };
  CHECK(code("family: {a: 0.25, g_u: 5/12, b: 1/3, c: 1/7, g_v: 11/21, d: 1/3}") == ErrorCode::InvalidInput);
  CHECK(code("family: {a: 1/4, g_u: 5/12, b: 1/3, c: 1/7, g_v: 11/21}") == ErrorCode::InvalidInput);
  CHECK(code("family: {a: 1/2, g_u: 1/4, b: 1/3, c: 1/7, g_v: 11/21, d: 1/3}") == ErrorCode::SumNotOne);
  CHECK(code("vertices: 1\nedges: []") == ErrorCode::InvalidInput);
  CHECK(code("vertices: 1\nedges: [{id: 1, from: 0, to: 0, ratio: 1/2}]") == ErrorCode::InvalidInput);
  CHECK(code("vertices: x\nedges: []") == ErrorCode::InvalidInput);
  CHECK(code("vertices: 1\nedges: [{id: 1, from: 0, to: 0, ratio: 1/2, translation: 0, colour: red}]") ==
        ErrorCode::InvalidInput);
  CHECK(code("[1, 2]") == ErrorCode::InvalidInput);
  CHECK(code("vertices: [") == ErrorCode::InvalidInput);
  CHECK(code("vertices: 2\nedges: [{id: 1, from: 0, to: 1, ratio: 1/2, translation: 0}]") ==
        ErrorCode::NotStronglyConnected);
  CHECK(error_code([] { load_ifs_document("/nonexistent/file.ifs"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("emitted documents parse back to the same system") {
  for (const auto& ifs : {fixtures::canonical(fixtures::family_a()), fixtures::ring3(), fixtures::nested_overlap()}) {
    const std::string text = emit_ifs_document(ifs);
    CHECK(parse_ifs_document(text).ifs == ifs);
    CHECK(emit_ifs_document(parse_ifs_document(text).ifs) == text);
  }
}

TEST_CASE("render_svg") {
  const auto c = fixtures::canonical(fixtures::family_c());
  const std::string svg = render_svg(c);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg == render_svg(c));
  for (int v = 0; v < 2; ++v)
    for (int k = 0; k <= 4; ++k) {
      const std::string tag = "data-vertex=\"" + std::to_string(v) + "\" data-level=\"" + std::to_string(k) +
                              "\" data-count=\"" + std::to_string(1 << k) + "\"";
      CHECK_MESSAGE(svg.find(tag) != std::string::npos, tag);
    }
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  CHECK(rects == 1 + 2 * 31);  // background plus 1 + 2 + 4 + 8 + 16 per vertex

  RenderSpec zero;
  zero.levels = 0;
  const std::string flat = render_svg(c, zero);
  CHECK(flat.find("width=\"800.0000\" height=\"10.0000\"") != std::string::npos);

  RenderSpec deep;
  deep.levels = 13;
  CHECK(error_code([&] { render_svg(c, deep); }) == ErrorCode::LevelTooDeep);
  CHECK(error_code([] { render_svg(fixtures::nested_overlap()); }) == ErrorCode::CsscViolated);
}
