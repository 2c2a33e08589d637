#pragma once

#include <cstddef>
#include <string>

#include "gdifs/ifs_graph.hpp"

namespace gdifs {

inline constexpr std::size_t kMaxRenderLevel = 12;

struct RenderSpec {
  std::size_t levels = 4;  // rows 0..levels for each vertex
  double width = 800.0;    // drawing width of the widest hull
  double row_height = 10.0;
  double row_gap = 6.0;
  double group_gap = 20.0;
  double margin = 10.0;
  double label_width = 70.0;
  std::string fill = "#1f3b73";
  std::string stroke = "none";
};

/// SVG 1.1: one row of rectangles per (vertex, level), levels top-down inside each
/// vertex group, all vertices on a common horizontal scale. Output bytes depend
/// only on the input. Throws CsscViolated and LevelTooDeep.
std::string render_svg(const DirectedGraphIfs& ifs, const RenderSpec& spec = {});

}  // namespace gdifs
