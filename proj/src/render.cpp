#include "gdifs/render.hpp"

#include <cstdio>

#include "gdifs/error.hpp"
#include "gdifs/interval_engine.hpp"

namespace gdifs {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

std::string render_svg(const DirectedGraphIfs& ifs, const RenderSpec& spec) {
  if (spec.levels > kMaxRenderLevel)
    fail(ErrorCode::LevelTooDeep, "at most " + std::to_string(kMaxRenderLevel) + " levels can be rendered");
  if (!(spec.width > 0.0 && spec.row_height > 0.0)) fail(ErrorCode::InvalidArgument, "sizes must be positive");
  const Hull hull = compute_hulls(ifs);
  if (!check_cssc(ifs, hull).holds) fail(ErrorCode::CsscViolated, "level intervals overlap; nothing meaningful to draw");

  Rational left = hull[0].lo, right = hull[0].hi;
  for (const auto& iv : hull.intervals) {
    left = min(left, iv.lo);
    right = max(right, iv.hi);
  }
  const Rational span = right - left;
  auto x_of = [&](const Rational& x) {
    return spec.margin + spec.label_width + ((x - left) / span).to_double() * spec.width;
  };

  const std::size_t n = ifs.vertex_count();
  const std::size_t rows = spec.levels + 1;
  const double group_height = static_cast<double>(rows) * (spec.row_height + spec.row_gap) - spec.row_gap;
  const double total_w = 2 * spec.margin + spec.label_width + spec.width;
  const double total_h = 2 * spec.margin + static_cast<double>(n) * group_height +
                         static_cast<double>(n - 1) * spec.group_gap;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(total_w) + "\" height=\"" +
         num(total_h) + "\" viewBox=\"0 0 " + num(total_w) + " " + num(total_h) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(total_w) + "\" height=\"" + num(total_h) + "\" fill=\"white\"/>\n";
  for (VertexId v = 0; v < n; ++v) {
    const double top = spec.margin + static_cast<double>(v) * (group_height + spec.group_gap);
    out += "<g id=\"vertex-" + std::to_string(v) + "\">\n";
    for (std::size_t k = 0; k < rows; ++k) {
      const double y = top + static_cast<double>(k) * (spec.row_height + spec.row_gap);
      const IntervalSet set = level_intervals(ifs, hull, v, k);
      out += "<g class=\"level\" data-vertex=\"" + std::to_string(v) + "\" data-level=\"" + std::to_string(k) +
             "\" data-count=\"" + std::to_string(set.intervals.size()) + "\">\n";
      out += "<text x=\"" + num(spec.margin) + "\" y=\"" + num(y + spec.row_height) +
             "\" font-family=\"monospace\" font-size=\"" + num(spec.row_height) + "\">v" + std::to_string(v) +
             " k=" + std::to_string(k) + "</text>\n";
      for (const auto& t : set.intervals) {
        const double x0 = x_of(t.interval.lo);
        const double x1 = x_of(t.interval.hi);
        out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
               num(spec.row_height) + "\" fill=\"" + spec.fill + "\" stroke=\"" + spec.stroke + "\"/>\n";
      }
      out += "</g>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gdifs
