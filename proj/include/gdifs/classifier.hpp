#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdifs/certifier.hpp"
#include "gdifs/gap_algebra.hpp"
#include "gdifs/ifs_graph.hpp"

namespace gdifs {

/// A cycle that repeats no vertex apart from its endpoints, rotated to start at
/// its smallest vertex.
struct SimpleCycle {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // vertices[i] is the source of edges[i]
  Rational ratio = 1;

  bool contains(VertexId v) const;
  std::string label() const;
  friend bool operator==(const SimpleCycle& a, const SimpleCycle& b) { return a.edges == b.edges; }
};

/// All simple cycles, sorted by (length, edge ids).
std::vector<SimpleCycle> simple_cycles(const DirectedGraphIfs& ifs);

/// Paths from -> to that repeat no vertex, sorted by (length, edge ids). Throws
/// InvalidArgument when from == to.
std::vector<PathLabel> simple_paths(const DirectedGraphIfs& ifs, VertexId from, VertexId to);

/// Two cycles are attached when their vertex lists share a vertex.
bool attached(const SimpleCycle& x, const SimpleCycle& y);

/// Distinct cycles c_1 ... c_n: c_1 passes through `vertex`, later cycles do not,
/// consecutive cycles are attached and no other pair is.
struct Chain {
  VertexId vertex = 0;
  std::vector<SimpleCycle> cycles;

  std::string label() const;
};

bool is_chain(const Chain& chain);

/// All chains of length 1..max_length attached to `vertex`, in depth-first order
/// over the sorted cycle list. Throws InvalidArgument for max_length == 0.
std::vector<Chain> chains_attached(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t max_length);

struct StructureReport {
  bool found = false;
  VertexId vertex = 0;
  /// c1 through the vertex, (c2, c3) a chain attached to the vertex, and no chain
  /// attached to the vertex containing both c1 and c3.
  std::optional<SimpleCycle> c1, c2, c3;
};

StructureReport check_cycle_chain_structure(const DirectedGraphIfs& ifs, VertexId vertex);

struct LabelledValue {
  std::string label;
  Rational value;
};

/// Level-1 gap lengths at every vertex, simple-cycle ratios and ratios of simple
/// paths from `vertex`, as a list. Throws CsscViolated, NotApplicable for one vertex.
std::vector<LabelledValue> independence_set(const DirectedGraphIfs& ifs, VertexId vertex);

enum class Verdict { NotOneVertexAttractor, NotOneVertexAttractorUnderCssc, Inconclusive, NotApplicable };

/// Which argument produced a positive verdict.
enum class Rule {
  None,
  ExactMeasureIndependence,         // conditions certified, {a, b, c, d, g_u, g_v} independent
  ExactMeasureIndependenceEqualBd,  // as above with b = d and {a, b, c, g_u, g_v}
  GapSetIndependence,               // CSSC and {a, b, c, d, g_u, g_v} independent
  GapSetIndependenceEqualBd,        // CSSC, b = d and {a, b, c, g_u, g_v} independent
  ChainStructureIndependence,       // CSSC, cycle/chain structure and X_u independent
};

const char* to_string(Verdict v) noexcept;
const char* to_string(Rule r) noexcept;

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Rule rule = Rule::None;
  VertexId vertex = 0;
  std::string reason;
  bool cssc_holds = false;
  std::optional<DimensionResult> dimension;
  std::optional<CertificationReport> certification;
  std::vector<LabelledValue> independence_values;
  std::optional<IndependenceResult> independence;
  std::optional<StructureReport> structure;
};

/// The list checked for the two-vertex rules: (a, b, c, d, g_u, g_v), d dropped when b = d.
std::vector<LabelledValue> two_vertex_independence_values(const TwoVertexFamily& family);

Certificate classify_attractor(const DirectedGraphIfs& ifs, VertexId vertex = 0);

}  // namespace gdifs
