#include "gdifs/ifs_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "gdifs/error.hpp"

namespace gdifs {

namespace {

constexpr std::size_t kMaxPolicyIterations = 10'000;
constexpr double kFallbackTolerance = 1e-12;

std::vector<bool> reachable(std::size_t n, std::span<const Edge> edges, bool reverse) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    if (reverse)
      adj[e.to].push_back(e.from);
    else
      adj[e.from].push_back(e.to);
  }
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Solves (I - R) x = T where row u has the single coefficient r at column c[u].
std::vector<Rational> solve_policy(std::size_t n, const std::vector<const Edge*>& policy) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t u = 0; u < n; ++u) {
    m[u][u] += Rational(1);
    m[u][policy[u]->to] -= policy[u]->map.ratio;
    m[u][n] = policy[u]->map.translation;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].sign() == 0) ++pivot;
    if (pivot == n) fail(ErrorCode::Internal, "singular hull system");
    std::swap(m[pivot], m[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].sign() == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t u = 0; u < n; ++u) x[u] = m[u][n] / m[u][u];
  return x;
}

// Policy iteration for x_u = min (or max) over out-edges e of S_e(x_{t(e)}).
// Returns nullopt when the iteration cap is hit.
std::optional<std::vector<Rational>> exact_endpoints(const DirectedGraphIfs& ifs,
                                                     const std::vector<double>& guess,
                                                     bool lower, std::size_t& iterations) {
  const std::size_t n = ifs.vertex_count();
  std::vector<const Edge*> policy(n);
  for (VertexId u = 0; u < n; ++u) {
    const Edge* best = nullptr;
    double best_value = 0.0;
    for (const auto& e : ifs.out_edges(u)) {
      const double val = e.map.ratio.to_double() * guess[e.to] + e.map.translation.to_double();
      if (!best || (lower ? val < best_value : val > best_value)) {
        best = &e;
        best_value = val;
      }
    }
    policy[u] = best;
  }
  for (std::size_t it = 0; it < kMaxPolicyIterations; ++it) {
    ++iterations;
    std::vector<Rational> x = solve_policy(n, policy);
    bool improved = false;
    for (VertexId u = 0; u < n; ++u) {
      for (const auto& e : ifs.out_edges(u)) {
        const Rational val = e.map(x[e.to]);
        const Rational current = policy[u]->map(x[policy[u]->to]);
        if (lower ? val < current : val > current) {
          policy[u] = &e;
          improved = true;
        }
      }
    }
    if (!improved) return x;
  }
  return std::nullopt;
}

std::pair<std::vector<double>, std::vector<double>> float_endpoints(const DirectedGraphIfs& ifs,
                                                                    double tolerance,
                                                                    std::size_t max_iter) {
  const std::size_t n = ifs.vertex_count();
  std::vector<double> lo(n, 0.0), hi(n, 0.0);
  for (const auto& e : ifs.edges()) {
    if (e.from != e.to) continue;
    const double fixed = e.map.translation.to_double() / (1.0 - e.map.ratio.to_double());
    lo[e.from] = std::min(lo[e.from], fixed);
    hi[e.from] = std::max(hi[e.from], fixed);
  }
  for (std::size_t it = 0; it < max_iter; ++it) {
    double change = 0.0;
    std::vector<double> nlo(n, std::numeric_limits<double>::infinity());
    std::vector<double> nhi(n, -std::numeric_limits<double>::infinity());
    for (const auto& e : ifs.edges()) {
      const double r = e.map.ratio.to_double();
      const double t = e.map.translation.to_double();
      nlo[e.from] = std::min(nlo[e.from], r * lo[e.to] + t);
      nhi[e.from] = std::max(nhi[e.from], r * hi[e.to] + t);
    }
    for (std::size_t u = 0; u < n; ++u)
      change = std::max({change, std::abs(nlo[u] - lo[u]), std::abs(nhi[u] - hi[u])});
    lo = std::move(nlo);
    hi = std::move(nhi);
    if (change < tolerance) break;
  }
  return {lo, hi};
}

}  // namespace

std::string edge_label(EdgeId id) { return "e" + std::to_string(id); }

Interval image(const Similarity& map, const Interval& interval) {
  return {map(interval.lo), map(interval.hi)};
}

DirectedGraphIfs DirectedGraphIfs::build(std::size_t vertex_count, std::vector<Edge> edges) {
  if (vertex_count == 0) fail(ErrorCode::InvalidInput, "graph has no vertices");
  if (edges.empty()) fail(ErrorCode::InvalidInput, "edge list is empty");
  std::set<EdgeId> ids;
  for (const auto& e : edges) {
    if (!ids.insert(e.id).second)
      fail(ErrorCode::DuplicateEdgeId, "edge id " + std::to_string(e.id) + " repeated");
    if (e.from >= vertex_count || e.to >= vertex_count)
      fail(ErrorCode::InvalidInput, edge_label(e.id) + " refers to a missing vertex");
    if (e.map.ratio.sign() < 0)
      fail(ErrorCode::ReflectionNotSupported,
           edge_label(e.id) + " has negative ratio " + e.map.ratio.str() +
               "; only orientation-preserving similarities are supported");
    if (e.map.ratio.sign() == 0 || e.map.ratio >= Rational(1))
      fail(ErrorCode::RatioOutOfRange,
           edge_label(e.id) + " ratio " + e.map.ratio.str() + " is not in (0,1)");
  }
  const auto fwd = reachable(vertex_count, edges, false);
  const auto bwd = reachable(vertex_count, edges, true);
  for (VertexId v = 0; v < vertex_count; ++v)
    if (!fwd[v] || !bwd[v])
      fail(ErrorCode::NotStronglyConnected,
           "vertex " + std::to_string(v) + " is not mutually reachable with vertex 0");
  std::vector<std::size_t> out_degree(vertex_count, 0);
  for (const auto& e : edges) ++out_degree[e.from];
  for (VertexId v = 0; v < vertex_count; ++v)
    if (out_degree[v] < 2)
      fail(ErrorCode::OutDegreeTooSmall,
           "vertex " + std::to_string(v) + " has " + std::to_string(out_degree[v]) +
               " outgoing edge(s); at least 2 are required");

  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.from != y.from ? x.from < y.from : x.id < y.id;
  });
  DirectedGraphIfs ifs;
  ifs.vertex_count_ = vertex_count;
  ifs.out_offsets_.assign(vertex_count + 1, 0);
  for (const auto& e : edges) ++ifs.out_offsets_[e.from + 1];
  for (VertexId v = 0; v < vertex_count; ++v) ifs.out_offsets_[v + 1] += ifs.out_offsets_[v];
  ifs.edges_ = std::move(edges);
  return ifs;
}

const Edge& DirectedGraphIfs::edge(EdgeId id) const {
  for (const auto& e : edges_)
    if (e.id == id) return e;
  fail(ErrorCode::InvalidArgument, "no edge with id " + std::to_string(id));
}

std::span<const Edge> DirectedGraphIfs::out_edges(VertexId v) const {
  if (v >= vertex_count_) fail(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
  return std::span<const Edge>(edges_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

bool TwoVertexFamily::unit_interval() const {
  return origin_u.sign() == 0 && origin_v.sign() == 0 && length_u() == Rational(1) &&
         length_v() == Rational(1);
}

DirectedGraphIfs TwoVertexFamily::to_ifs() const {
  const Rational r1 = ratio_e1(), r2 = ratio_e2(), r3 = ratio_e3(), r4 = ratio_e4();
  std::vector<Edge> edges{
      {1, 0, 0, {r1, origin_u * (Rational(1) - r1)}},
      {2, 0, 1, {r2, origin_u + a + g_u - r2 * origin_v}},
      {3, 1, 1, {r3, origin_v * (Rational(1) - r3)}},
      {4, 1, 0, {r4, origin_v + c + g_v - r4 * origin_u}},
  };
  return DirectedGraphIfs::build(2, std::move(edges));
}

DirectedGraphIfs canonical_two_vertex(const Rational& a, const Rational& g_u, const Rational& b,
                                      const Rational& c, const Rational& g_v, const Rational& d) {
  const std::pair<const char*, const Rational*> params[] = {
      {"a", &a}, {"g_u", &g_u}, {"b", &b}, {"c", &c}, {"g_v", &g_v}, {"d", &d}};
  for (const auto& [name, value] : params)
    if (value->sign() <= 0)
      fail(ErrorCode::NonPositiveParameter,
           std::string(name) + " = " + value->str() + " must be positive");
  if (a + g_u + b != Rational(1))
    fail(ErrorCode::SumNotOne, "a + g_u + b = " + (a + g_u + b).str() + ", expected 1");
  if (c + g_v + d != Rational(1))
    fail(ErrorCode::SumNotOne, "c + g_v + d = " + (c + g_v + d).str() + ", expected 1");
  return TwoVertexFamily{a, g_u, b, c, g_v, d}.to_ifs();
}

std::optional<TwoVertexFamily> match_two_vertex_family(const DirectedGraphIfs& ifs) {
  if (ifs.vertex_count() != 2) return std::nullopt;
  const Hull hull = compute_hulls(ifs);
  // pieces[v] = {left length, gap, right length}
  Rational pieces[2][3];
  for (VertexId v = 0; v < 2; ++v) {
    const auto out = ifs.out_edges(v);
    if (out.size() != 2) return std::nullopt;
    const Edge* loop = nullptr;
    const Edge* cross = nullptr;
    for (const auto& e : out) (e.to == v ? loop : cross) = &e;
    if (!loop || !cross) return std::nullopt;
    const Interval left = image(loop->map, hull[v]);
    const Interval right = image(cross->map, hull[1 - v]);
    if (left.lo != hull[v].lo || right.hi != hull[v].hi || !(left.hi < right.lo))
      return std::nullopt;
    pieces[v][0] = left.length();
    pieces[v][1] = right.lo - left.hi;
    pieces[v][2] = right.length();
  }
  return TwoVertexFamily{pieces[0][0], pieces[0][1], pieces[0][2], pieces[1][0],
                         pieces[1][1], pieces[1][2], hull[0].lo, hull[1].lo};
}

TwoVertexFamily two_vertex_family(const DirectedGraphIfs& ifs) {
  auto family = match_two_vertex_family(ifs);
  if (!family)
    fail(ErrorCode::NotCanonicalFamily,
         "expected a 2-vertex system with one loop and one cross edge per vertex, loop image "
         "on the left");
  return *family;
}

std::string PathLabel::label() const {
  std::string out;
  for (EdgeId id : edges) out += edge_label(id);
  return out;
}

PathLabel extend(const PathLabel& path, const Edge& edge) {
  if (!path.edges.empty() && path.terminal != edge.from)
    fail(ErrorCode::InvalidArgument,
         edge_label(edge.id) + " does not start where " + path.label() + " ends");
  PathLabel out = path;
  if (out.edges.empty()) out.initial = edge.from;
  out.edges.push_back(edge.id);
  out.terminal = edge.to;
  out.ratio *= edge.map.ratio;
  out.map = out.map.compose(edge.map);
  return out;
}

PathLabel make_path(const DirectedGraphIfs& ifs, std::span<const EdgeId> edges) {
  if (edges.empty()) fail(ErrorCode::InvalidArgument, "a path needs at least one edge");
  PathLabel path;
  for (EdgeId id : edges) path = extend(path, ifs.edge(id));
  return path;
}

PathLabel concat(const PathLabel& first, const PathLabel& second) {
  if (first.edges.empty()) return second;
  if (second.edges.empty()) return first;
  if (first.terminal != second.initial)
    fail(ErrorCode::InvalidArgument, first.label() + " and " + second.label() + " do not compose");
  PathLabel out = first;
  out.edges.insert(out.edges.end(), second.edges.begin(), second.edges.end());
  out.terminal = second.terminal;
  out.ratio *= second.ratio;
  out.map = out.map.compose(second.map);
  return out;
}

std::vector<PathLabel> enumerate_paths(const DirectedGraphIfs& ifs, VertexId from, std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "path length must be at least 1");
  std::vector<PathLabel> level;
  for (const auto& e : ifs.out_edges(from)) level.push_back(extend(PathLabel{}, e));
  for (std::size_t depth = 1; depth < k; ++depth) {
    std::vector<PathLabel> next;
    for (const auto& p : level)
      for (const auto& e : ifs.out_edges(p.terminal)) next.push_back(extend(p, e));
    level = std::move(next);
  }
  return level;
}

Hull compute_hulls(const DirectedGraphIfs& ifs) {
  const std::size_t n = ifs.vertex_count();
  const auto [lo_guess, hi_guess] = float_endpoints(ifs, 1e-15, 200);
  Hull hull;
  auto lo = exact_endpoints(ifs, lo_guess, true, hull.iterations);
  auto hi = exact_endpoints(ifs, hi_guess, false, hull.iterations);
  hull.intervals.resize(n);
  if (lo && hi) {
    for (VertexId u = 0; u < n; ++u) hull.intervals[u] = {(*lo)[u], (*hi)[u]};
    return hull;
  }
  hull.exact = false;
  const auto [flo, fhi] = float_endpoints(ifs, kFallbackTolerance, 1'000'000);
  for (VertexId u = 0; u < n; ++u)
    hull.intervals[u] = {Rational::from_double(flo[u]), Rational::from_double(fhi[u])};
  return hull;
}

CsscReport check_cssc(const DirectedGraphIfs& ifs, const Hull& hull) {
  CsscReport report;
  for (VertexId u = 0; u < ifs.vertex_count(); ++u) {
    std::vector<std::pair<Interval, EdgeId>> images;
    for (const auto& e : ifs.out_edges(u)) images.push_back({image(e.map, hull[e.to]), e.id});
    std::sort(images.begin(), images.end(), [](const auto& x, const auto& y) {
      return x.first.lo != y.first.lo ? x.first.lo < y.first.lo : x.second < y.second;
    });
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (!(images[i].first.hi < images[i + 1].first.lo)) {
        report.holds = false;
        report.witness = std::make_pair(images[i].second, images[i + 1].second);
        report.witness_vertex = u;
        return report;
      }
    }
  }
  return report;
}

CsscReport check_cssc(const DirectedGraphIfs& ifs) { return check_cssc(ifs, compute_hulls(ifs)); }

}  // namespace gdifs
