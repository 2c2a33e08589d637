#include "gdifs/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gdifs/certifier.hpp"
#include "gdifs/classifier.hpp"
#include "gdifs/dimension.hpp"
#include "gdifs/error.hpp"
#include "gdifs/gap_algebra.hpp"
#include "gdifs/interval_engine.hpp"
#include "gdifs/render.hpp"
#include "json.hpp"

namespace gdifs {

namespace {

using Json = nlohmann::ordered_json;

// Ten significant digits, the display precision of every report.
double dec(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

Json interval_json(const Interval& i) { return Json::array({i.lo.str(), i.hi.str()}); }

Json vector_json(const std::vector<double>& h) {
  Json out = Json::array();
  for (double x : h) out.push_back(dec(x));
  return out;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", j.get<double>());
    return buf;
  }
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out;
  for (const auto& x : j) out += (out.empty() ? "" : ", ") + scalar_text(x);
  return out.empty() ? "(empty)" : out;
}

void render_text(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out += indent + key + ": " + flat_text(value) + "\n";
      } else {
        out += indent + key + ":\n";
        render_text(value, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_flat(x)) {
        out += indent + "- " + flat_text(x) + "\n";
      } else {
        std::string item;
        render_text(x, indent + "  ", item);
        item.replace(indent.size(), 2, "- ");
        out += item;
      }
    }
  } else {
    out += indent + scalar_text(j) + "\n";
  }
}

std::string format_report(const Json& j, Format format) {
  if (format == Format::Machine) return j.dump(2) + "\n";
  std::string out;
  render_text(j, "", out);
  return out;
}

VertexId checked_vertex(const DirectedGraphIfs& ifs, VertexId v) {
  if (v >= ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " does not exist");
  return v;
}

Json family_json(const TwoVertexFamily& f) {
  return {{"a", f.a.str()}, {"g_u", f.g_u.str()}, {"b", f.b.str()},
          {"c", f.c.str()}, {"g_v", f.g_v.str()}, {"d", f.d.str()}};
}

Json dimension_json(const DimensionResult& d) {
  return {{"s", dec(d.s)},
          {"h", vector_json(d.h)},
          {"rho_residual", d.rho_residual},
          {"eigen_residual", d.eigen_residual},
          {"bracket", Json::array({d.bracket_lo, d.bracket_hi})},
          {"iterations", d.iterations}};
}

Json conditions_json(const ConditionReport& c) {
  return {{"cond1", c.cond1_holds ? "holds" : "fails"},
          {"cond2_value", dec(c.cond2_value)},
          {"cond2", to_string(c.cond2)},
          {"cond3_value", dec(c.cond3_value)},
          {"cond3", to_string(c.cond3)},
          {"tolerance", c.tolerance}};
}

Json certification_json(const CertificationReport& r) {
  Json j;
  j["family"] = family_json(r.family);
  j["s"] = dec(r.dimension.s);
  j["conditions"] = conditions_json(r.conditions);
  j["status"] = to_string(r.status);
  if (r.status == CertificationStatus::FailedCondition) j["failed_condition"] = r.failed_condition;
  if (r.measures) j["measures"] = {{"H_u", dec(r.measures->h_u)}, {"H_v", dec(r.measures->h_v)}};
  if (r.family.unit_interval()) j["y_max_ratio"] = dec(y_max_ratio(r.family, r.dimension.s));
  return j;
}

Json independence_json(const std::vector<LabelledValue>& values, const IndependenceResult& r) {
  Json list = Json::array();
  for (const auto& v : values) list.push_back(v.label + " = " + v.value.str());
  Json j{{"values", list}, {"independent", r.independent}};
  if (r.witness) {
    Json w = Json::array();
    std::string product;
    for (std::size_t i = 0; i < r.witness->size(); ++i) {
      const long m = (*r.witness)[i];
      w.push_back(m);
      if (m == 0) continue;
      product += (product.empty() ? "" : " * ") + values[i].label + (m == 1 ? "" : "^" + std::to_string(m));
    }
    j["witness"] = w;
    j["witness_product"] = product + " = 1";
  }
  return j;
}

Json validate(const IfsDocument& doc) {
  const auto& ifs = doc.ifs;
  const Hull hull = compute_hulls(ifs);
  const CsscReport cssc = check_cssc(ifs, hull);
  Json hulls = Json::array();
  for (const auto& iv : hull.intervals) hulls.push_back(interval_json(iv));
  Json j{{"valid", true},
         {"vertices", ifs.vertex_count()},
         {"edges", ifs.edges().size()},
         {"hulls", hulls},
         {"hulls_exact", hull.exact},
         {"cssc", cssc.holds}};
  if (cssc.witness)
    j["cssc_witness"] = {{"vertex", cssc.witness_vertex},
                         {"edges", Json::array({edge_label(cssc.witness->first), edge_label(cssc.witness->second)})}};
  if (auto f = match_two_vertex_family(ifs)) {
    j["two_vertex_family"] = family_json(*f);
    j["unit_interval"] = f->unit_interval();
  }
  return j;
}

Json measure(const IfsDocument& doc, const CommandOptions& opt, int& exit_code) {
  const CertificationReport r = certify(doc.ifs, opt.tol);
  if (r.status != CertificationStatus::Certified) exit_code = kExitNotCertified;
  return certification_json(r);
}

Json gaps(const IfsDocument& doc, const CommandOptions& opt, int& exit_code) {
  const auto& ifs = doc.ifs;
  const VertexId v = checked_vertex(ifs, opt.vertex);
  const std::size_t depth = opt.depth.value_or(6);
  const GapMultiset g = gap_lengths(ifs, v, depth);
  Json list = Json::array();
  for (auto it = g.counts.rbegin(); it != g.counts.rend(); ++it)
    list.push_back({{"length", it->first.str()}, {"decimal", dec(it->first.to_double())}, {"multiplicity", it->second}});
  Json j{{"vertex", v}, {"depth", depth}, {"count", g.size()}, {"distinct", g.counts.size()}, {"gaps", list}};

  Rational cutoff = g.counts.empty() ? Rational(1) : g.counts.begin()->first;
  if (opt.cutoff) {
    if (opt.cutoff->sign() <= 0) fail(ErrorCode::InvalidArgument, "cutoff must be positive");
    cutoff = *opt.cutoff;
  }
  const bool has_expression = ifs.vertex_count() == 1 || match_two_vertex_family(ifs).has_value();
  if (!has_expression) {
    j["cross_check"] = "no closed-form expression for this graph";
    return j;
  }
  const GapCrossCheck check = cross_check_gaps(ifs, v, depth, cutoff);
  Json cc{{"expression", check.expression.str()},
          {"cutoff", check.cutoff.str()},
          {"completeness_bound", check.completeness_bound.str()},
          {"from_intervals", check.from_intervals.size()},
          {"from_expression", check.from_expression.size()},
          {"equal", check.comparison.equal}};
  if (check.comparison.witness) {
    cc["witness"] = check.comparison.witness->str();
    exit_code = kExitInternal;
  }
  j["cross_check"] = cc;
  return j;
}

Json density_report(const IfsDocument& doc, const CommandOptions& opt) {
  const auto& ifs = doc.ifs;
  const VertexId v = checked_vertex(ifs, opt.vertex);
  if (!opt.interval) fail(ErrorCode::InvalidArgument, "density needs --interval lo hi");
  const std::size_t depth = opt.depth.value_or(10);
  if (depth == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const DimensionResult d = solve_dimension(ifs, opt.tol);
  const MeasureOracle oracle(ifs, d.s, d.h, v, depth);
  const auto [m_lo, m_hi] = oracle.measure(*opt.interval);
  const auto [d_lo, d_hi] = oracle.density(*opt.interval);
  return {{"vertex", v},
          {"interval", interval_json(*opt.interval)},
          {"depth", depth},
          {"s", dec(d.s)},
          {"measure", Json::array({dec(m_lo), dec(m_hi)})},
          {"density", Json::array({dec(d_lo), dec(d_hi)})}};
}

Json certificate_json(const Certificate& c) {
  Json j{{"verdict", to_string(c.verdict)}, {"rule", to_string(c.rule)}, {"vertex", c.vertex}, {"reason", c.reason}};
  if (c.verdict == Verdict::NotApplicable) return j;
  j["cssc"] = c.cssc_holds;
  if (c.dimension) {
    j["s"] = dec(c.dimension->s);
    j["h"] = vector_json(c.dimension->h);
  }
  if (c.certification) j["certification"] = certification_json(*c.certification);
  if (c.structure) {
    Json s{{"found", c.structure->found}};
    if (c.structure->found)
      s["cycles"] = Json::array({c.structure->c1->label(), c.structure->c2->label(), c.structure->c3->label()});
    j["structure"] = s;
  }
  if (c.independence) j["independence"] = independence_json(c.independence_values, *c.independence);
  return j;
}

Json classify(const IfsDocument& doc, const CommandOptions& opt, int& exit_code) {
  const Certificate c = classify_attractor(doc.ifs, checked_vertex(doc.ifs, opt.vertex));
  if (c.verdict == Verdict::Inconclusive || c.verdict == Verdict::NotApplicable) exit_code = kExitNotCertified;
  return certificate_json(c);
}

std::string render(const IfsDocument& doc, const CommandOptions& opt, Format format) {
  RenderSpec spec;
  spec.levels = opt.levels;
  const std::string svg = render_svg(doc.ifs, spec);
  if (opt.out_path.empty()) return svg;
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out || !(out << svg)) fail(ErrorCode::InvalidArgument, "cannot write " + opt.out_path);
  return format_report({{"written", opt.out_path}, {"levels", opt.levels}, {"bytes", svg.size()}}, format);
}

}  // namespace

std::string format_certificate(const Certificate& certificate, Format format) {
  return format_report(certificate_json(certificate), format);
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::Validate, Command::Dimension, Command::Measure, Command::Gaps, Command::Density,
                    Command::Classify, Command::Render})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Dimension: return "dimension";
    case Command::Measure: return "measure";
    case Command::Gaps: return "gaps";
    case Command::Density: return "density";
    case Command::Classify: return "classify";
    case Command::Render: return "render";
  }
  return "?";
}

CommandResult run_command(Command command, const IfsDocument& doc, const CommandOptions& options) {
  CommandResult result;
  try {
    switch (command) {
      case Command::Validate:
        result.output = format_report(validate(doc), options.format);
        break;
      case Command::Dimension:
        result.output = format_report(dimension_json(solve_dimension(doc.ifs, options.tol)), options.format);
        break;
      case Command::Measure:
        result.output = format_report(measure(doc, options, result.exit_code), options.format);
        break;
      case Command::Gaps:
        result.output = format_report(gaps(doc, options, result.exit_code), options.format);
        if (result.exit_code == kExitInternal) result.error = "gap expression disagrees with the level intervals";
        break;
      case Command::Density:
        result.output = format_report(density_report(doc, options), options.format);
        break;
      case Command::Classify:
        result.output = format_report(classify(doc, options, result.exit_code), options.format);
        break;
      case Command::Render:
        result.output = render(doc, options, options.format);
        break;
    }
  } catch (const Error& e) {
    result.output.clear();
    result.exit_code = e.code() == ErrorCode::Internal ? kExitInternal : kExitInvalid;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.output.clear();
    result.exit_code = kExitInternal;
    result.error = std::string("internal error: ") + e.what();
  }
  return result;
}

}  // namespace gdifs
