#include "gdifs/classifier.hpp"

#include <algorithm>
#include <functional>

#include "gdifs/error.hpp"
#include "gdifs/interval_engine.hpp"

namespace gdifs {

namespace {

bool by_length_then_edges(const std::vector<EdgeId>& x, const std::vector<EdgeId>& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::string concat_labels(const std::vector<EdgeId>& edges) {
  std::string out;
  for (EdgeId id : edges) out += edge_label(id);
  return out;
}

bool chain_has(const std::vector<std::size_t>& chain, std::size_t c) {
  return std::find(chain.begin(), chain.end(), c) != chain.end();
}

// Chains as index lists into `cycles`.
std::vector<std::vector<std::size_t>> chain_indices(const std::vector<SimpleCycle>& cycles, VertexId vertex,
                                                    std::size_t max_length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void()> grow = [&] {
    out.push_back(current);
    if (current.size() == max_length) return;
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (chain_has(current, j) || cycles[j].contains(vertex)) continue;
      if (!attached(cycles[current.back()], cycles[j])) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < current.size() && ok; ++i) ok = !attached(cycles[current[i]], cycles[j]);
      if (!ok) continue;
      current.push_back(j);
      grow();
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].contains(vertex)) continue;
    current.assign(1, i);
    grow();
  }
  return out;
}

IndependenceResult independence_of(const std::vector<LabelledValue>& values) {
  std::vector<Rational> xs;
  for (const auto& v : values) xs.push_back(v.value);
  return is_multiplicatively_independent(xs);
}

}  // namespace

bool SimpleCycle::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::string SimpleCycle::label() const { return concat_labels(edges); }

std::vector<SimpleCycle> simple_cycles(const DirectedGraphIfs& ifs) {
  const std::size_t n = ifs.vertex_count();
  std::vector<SimpleCycle> out;
  std::vector<bool> on_path(n, false);
  SimpleCycle current;
  for (VertexId start = 0; start < n; ++start) {
    // only vertices >= start, so each cycle is found once, already rotated
    std::function<void(VertexId)> walk = [&](VertexId v) {
      on_path[v] = true;
      for (const auto& e : ifs.out_edges(v)) {
        current.edges.push_back(e.id);
        current.vertices.push_back(v);
        const Rational saved = current.ratio;
        current.ratio *= e.map.ratio;
        if (e.to == start)
          out.push_back(current);
        else if (e.to > start && !on_path[e.to])
          walk(e.to);
        current.ratio = saved;
        current.edges.pop_back();
        current.vertices.pop_back();
      }
      on_path[v] = false;
    };
    walk(start);
  }
  std::sort(out.begin(), out.end(),
            [](const SimpleCycle& x, const SimpleCycle& y) { return by_length_then_edges(x.edges, y.edges); });
  return out;
}

std::vector<PathLabel> simple_paths(const DirectedGraphIfs& ifs, VertexId from, VertexId to) {
  const std::size_t n = ifs.vertex_count();
  if (from >= n || to >= n) fail(ErrorCode::InvalidArgument, "no such vertex");
  if (from == to) fail(ErrorCode::InvalidArgument, "simple paths need distinct endpoints");
  std::vector<PathLabel> out;
  std::vector<bool> seen(n, false);
  std::function<void(const PathLabel&)> walk = [&](const PathLabel& path) {
    const VertexId v = path.terminal;
    seen[v] = true;
    for (const auto& e : ifs.out_edges(v)) {
      if (seen[e.to]) continue;
      PathLabel next = extend(path, e);
      if (e.to == to)
        out.push_back(std::move(next));
      else
        walk(next);
    }
    seen[v] = false;
  };
  PathLabel start;
  start.initial = start.terminal = from;
  walk(start);
  std::sort(out.begin(), out.end(),
            [](const PathLabel& x, const PathLabel& y) { return by_length_then_edges(x.edges, y.edges); });
  return out;
}

bool attached(const SimpleCycle& x, const SimpleCycle& y) {
  return std::any_of(x.vertices.begin(), x.vertices.end(), [&](VertexId v) { return y.contains(v); });
}

std::string Chain::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < cycles.size(); ++i) out += (i ? ", " : "") + cycles[i].label();
  return out + ")";
}

bool is_chain(const Chain& chain) {
  const auto& cs = chain.cycles;
  if (cs.empty() || !cs.front().contains(chain.vertex)) return false;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0 && cs[i].contains(chain.vertex)) return false;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i] == cs[j]) return false;
      if (attached(cs[i], cs[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

std::vector<Chain> chains_attached(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t max_length) {
  if (max_length == 0) fail(ErrorCode::InvalidArgument, "chain length must be at least 1");
  if (vertex >= ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "no such vertex");
  const auto cycles = simple_cycles(ifs);
  std::vector<Chain> out;
  for (const auto& idx : chain_indices(cycles, vertex, max_length)) {
    Chain c{vertex, {}};
    for (std::size_t i : idx) c.cycles.push_back(cycles[i]);
    out.push_back(std::move(c));
  }
  return out;
}

StructureReport check_cycle_chain_structure(const DirectedGraphIfs& ifs, VertexId vertex) {
  if (vertex >= ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "no such vertex");
  StructureReport report;
  report.vertex = vertex;
  const auto cycles = simple_cycles(ifs);
  if (cycles.empty()) return report;
  // a chain cannot repeat a cycle, so the cycle count bounds every chain
  const auto chains = chain_indices(cycles, vertex, cycles.size());
  for (std::size_t c1 = 0; c1 < cycles.size(); ++c1) {
    if (!cycles[c1].contains(vertex)) continue;
    for (const auto& pair : chains) {
      if (pair.size() != 2 || pair[0] == c1 || pair[1] == c1) continue;
      const std::size_t c3 = pair[1];
      const bool joined = std::any_of(chains.begin(), chains.end(), [&](const auto& ch) {
        return chain_has(ch, c1) && chain_has(ch, c3);
      });
      if (joined) continue;
      report.found = true;
      report.c1 = cycles[c1];
      report.c2 = cycles[pair[0]];
      report.c3 = cycles[c3];
      return report;
    }
  }
  return report;
}

std::vector<LabelledValue> independence_set(const DirectedGraphIfs& ifs, VertexId vertex) {
  const std::size_t n = ifs.vertex_count();
  if (vertex >= n) fail(ErrorCode::InvalidArgument, "no such vertex");
  if (n == 1) fail(ErrorCode::NotApplicable, "a one-vertex system has no simple paths");
  const Hull hull = compute_hulls(ifs);
  std::vector<LabelledValue> out;
  for (VertexId v = 0; v < n; ++v) {
    const IntervalSet level = level_intervals(ifs, hull, v, 1);
    const auto& iv = level.intervals;
    for (std::size_t i = 1; i < iv.size(); ++i) {
      std::string label = "g" + std::to_string(v);
      if (iv.size() > 2) label += "." + std::to_string(i);
      out.push_back({label, iv[i].interval.lo - iv[i - 1].interval.hi});
    }
  }
  for (const auto& c : simple_cycles(ifs)) out.push_back({"r(" + c.label() + ")", c.ratio});
  for (VertexId w = 0; w < n; ++w) {
    if (w == vertex) continue;
    for (const auto& p : simple_paths(ifs, vertex, w)) out.push_back({"r(" + p.label() + ")", p.ratio});
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotOneVertexAttractor: return "NotOneVertexAttractor";
    case Verdict::NotOneVertexAttractorUnderCssc: return "NotOneVertexAttractorUnderCssc";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

const char* to_string(Rule r) noexcept {
  switch (r) {
    case Rule::None: return "none";
    case Rule::ExactMeasureIndependence: return "exact-measure-independence";
    case Rule::ExactMeasureIndependenceEqualBd: return "exact-measure-independence-equal-bd";
    case Rule::GapSetIndependence: return "gap-set-independence";
    case Rule::GapSetIndependenceEqualBd: return "gap-set-independence-equal-bd";
    case Rule::ChainStructureIndependence: return "chain-structure-independence";
  }
  return "?";
}

std::vector<LabelledValue> two_vertex_independence_values(const TwoVertexFamily& f) {
  std::vector<LabelledValue> out{{"a", f.ratio_e1()}, {"b", f.ratio_e2()}, {"c", f.ratio_e3()}};
  if (!f.equal_cross_ratios()) out.push_back({"d", f.ratio_e4()});
  out.push_back({"g_u", f.g_u});
  out.push_back({"g_v", f.g_v});
  return out;
}

Certificate classify_attractor(const DirectedGraphIfs& ifs, VertexId vertex) {
  const std::size_t n = ifs.vertex_count();
  if (vertex >= n) fail(ErrorCode::InvalidArgument, "no such vertex");
  Certificate cert;
  cert.vertex = vertex;
  if (n == 1) {
    cert.verdict = Verdict::NotApplicable;
    cert.reason = "input is already a one-vertex system";
    return cert;
  }
  cert.cssc_holds = check_cssc(ifs).holds;

  const auto family = match_two_vertex_family(ifs);
  if (family && family->unit_interval()) {
    const TwoVertexFamily f = vertex == 0 ? *family : family->swapped();
    const bool equal_bd = f.equal_cross_ratios();
    cert.certification = certify(f);
    cert.dimension = cert.certification->dimension;
    cert.independence_values = two_vertex_independence_values(f);
    cert.independence = independence_of(cert.independence_values);
    const bool certified = cert.certification->status == CertificationStatus::Certified &&
                           cert.certification->conditions.all_hold();
    const bool independent = cert.independence->independent;
    if (certified && independent) {
      cert.verdict = Verdict::NotOneVertexAttractor;
      cert.rule = equal_bd ? Rule::ExactMeasureIndependenceEqualBd : Rule::ExactMeasureIndependence;
      cert.reason = "measure conditions certified and parameters multiplicatively independent";
    } else if (independent && cert.cssc_holds) {
      cert.verdict = Verdict::NotOneVertexAttractorUnderCssc;
      cert.rule = equal_bd ? Rule::GapSetIndependenceEqualBd : Rule::GapSetIndependence;
      cert.reason = "measure conditions not certified; gap set excludes separated one-vertex systems";
    } else {
      cert.verdict = Verdict::Inconclusive;
      cert.reason = certified ? "measure conditions certified but parameters are multiplicatively dependent"
                              : "measure conditions not certified and parameters are multiplicatively dependent";
    }
    return cert;
  }

  cert.dimension = solve_dimension(ifs);
  if (!cert.cssc_holds) {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "convex strong separation fails";
    return cert;
  }
  cert.structure = check_cycle_chain_structure(ifs, vertex);
  cert.independence_values = independence_set(ifs, vertex);
  cert.independence = independence_of(cert.independence_values);
  if (cert.structure->found && cert.independence->independent) {
    cert.verdict = Verdict::NotOneVertexAttractorUnderCssc;
    cert.rule = Rule::ChainStructureIndependence;
    cert.reason = "cycle/chain structure present and the gap and ratio set is multiplicatively independent";
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = !cert.structure->found ? "no suitable cycle/chain structure at the vertex"
                                         : "gap and ratio set is multiplicatively dependent";
  }
  return cert;
}

}  // namespace gdifs
