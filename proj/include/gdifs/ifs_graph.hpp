#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdifs/rational.hpp"

namespace gdifs {

using VertexId = std::size_t;
using EdgeId = long;

/// Orientation-preserving similarity x -> ratio * x + translation, 0 < ratio < 1.
struct Similarity {
  Rational ratio;
  Rational translation;

  Rational operator()(const Rational& x) const { return ratio * x + translation; }

  /// (*this) o inner
  Similarity compose(const Similarity& inner) const {
    return {ratio * inner.ratio, ratio * inner.translation + translation};
  }

  friend bool operator==(const Similarity&, const Similarity&) = default;
};

/// Edge from -> to. Its map sends the space at `to` into the space at `from`.
struct Edge {
  EdgeId id = 0;
  VertexId from = 0;
  VertexId to = 0;
  Similarity map;

  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string edge_label(EdgeId id);

/// Closed interval [lo, hi] with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
  /// Overlap of positive length.
  bool overlaps(const Interval& other) const { return lo < other.hi && other.lo < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval image(const Similarity& map, const Interval& interval);

/// A validated directed-graph IFS on the real line. Immutable once built.
class DirectedGraphIfs {
 public:
  /// Validates the structural assumptions: ratios in (0,1), unique ids,
  /// out-degree >= 2 and strong connectivity. Edges are stored sorted by id.
  static DirectedGraphIfs build(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;
  /// Out-edges of `v`, sorted by id.
  std::span<const Edge> out_edges(VertexId v) const;

  friend bool operator==(const DirectedGraphIfs&, const DirectedGraphIfs&) = default;

 private:
  DirectedGraphIfs() = default;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;                 // grouped by source vertex, then id
  std::vector<std::size_t> out_offsets_;    // vertex_count_ + 1 entries into edges_
};

inline DirectedGraphIfs build_ifs(std::size_t vertex_count, std::vector<Edge> edges) {
  return DirectedGraphIfs::build(vertex_count, std::move(edges));
}

/// The two-vertex system on the unit interval: e1 = u->u (a x), e2 = u->v (b x + a + g_u),
/// e3 = v->v (c x), e4 = v->u (d x + c + g_v), with u = 0 and v = 1.
DirectedGraphIfs canonical_two_vertex(const Rational& a, const Rational& g_u, const Rational& b,
                                      const Rational& c, const Rational& g_v, const Rational& d);

/// Parameters of a two-vertex system with the layout of canonical_two_vertex but
/// arbitrary hulls: at u the loop image sits left of the cross-edge image, and
/// likewise at v. Lengths a, g_u, b live in I_u and c, g_v, d in I_v.
struct TwoVertexFamily {
  Rational a, g_u, b, c, g_v, d;
  Rational origin_u = 0;
  Rational origin_v = 0;

  Rational length_u() const { return a + g_u + b; }
  Rational length_v() const { return c + g_v + d; }
  Rational ratio_e1() const { return a / length_u(); }
  Rational ratio_e2() const { return b / length_v(); }
  Rational ratio_e3() const { return c / length_v(); }
  Rational ratio_e4() const { return d / length_u(); }
  bool unit_interval() const;
  bool equal_cross_ratios() const { return ratio_e2() == ratio_e4(); }

  /// Same system with the roles of u and v exchanged.
  TwoVertexFamily swapped() const { return {c, g_v, d, a, g_u, b, origin_v, origin_u}; }
  DirectedGraphIfs to_ifs() const;
};

/// Recognises the two-vertex layout. Edge ids are not significant.
std::optional<TwoVertexFamily> match_two_vertex_family(const DirectedGraphIfs& ifs);
/// As above but throws NotCanonicalFamily.
TwoVertexFamily two_vertex_family(const DirectedGraphIfs& ifs);

/// A path e1 e2 ... ek with t(e_i) = i(e_{i+1}); its map is S_e1 o ... o S_ek and
/// sends the space at `terminal` into the space at `initial`.
struct PathLabel {
  std::vector<EdgeId> edges;
  VertexId initial = 0;
  VertexId terminal = 0;
  Rational ratio = 1;
  Similarity map{1, 0};

  std::size_t length() const noexcept { return edges.size(); }
  std::string label() const;

  friend bool operator==(const PathLabel&, const PathLabel&) = default;
};

PathLabel make_path(const DirectedGraphIfs& ifs, std::span<const EdgeId> edges);
PathLabel extend(const PathLabel& path, const Edge& edge);
PathLabel concat(const PathLabel& first, const PathLabel& second);

/// All paths of length k from `from`, in lexicographic edge-id order.
std::vector<PathLabel> enumerate_paths(const DirectedGraphIfs& ifs, VertexId from, std::size_t k);

/// Per-vertex convex hulls of the attractors.
struct Hull {
  std::vector<Interval> intervals;
  /// False only when the exact solve did not settle and the endpoints were
  /// obtained by floating-point iteration to 1e-12.
  bool exact = true;
  std::size_t iterations = 0;

  const Interval& operator[](VertexId v) const { return intervals.at(v); }
};

Hull compute_hulls(const DirectedGraphIfs& ifs);

struct CsscReport {
  bool holds = true;
  /// First offending pair (by left endpoint) at `witness_vertex` when the condition fails.
  std::optional<std::pair<EdgeId, EdgeId>> witness;
  VertexId witness_vertex = 0;
};

CsscReport check_cssc(const DirectedGraphIfs& ifs, const Hull& hull);
CsscReport check_cssc(const DirectedGraphIfs& ifs);

}  // namespace gdifs
