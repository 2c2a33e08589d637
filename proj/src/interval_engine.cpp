#include "gdifs/interval_engine.hpp"

#include <algorithm>
#include <cmath>

#include "gdifs/error.hpp"

namespace gdifs {

namespace {

double rpow(const Rational& q, double s) { return std::exp(s * q.log()); }

bool interval_less(const TaggedInterval& x, const TaggedInterval& y) {
  if (x.interval.lo != y.interval.lo) return x.interval.lo < y.interval.lo;
  if (x.interval.hi != y.interval.hi) return x.interval.hi < y.interval.hi;
  return x.path.edges < y.path.edges;
}

void require_cssc(const DirectedGraphIfs& ifs, const Hull& hull) {
  const auto report = check_cssc(ifs, hull);
  if (!report.holds) {
    const auto [x, y] = *report.witness;
    fail(ErrorCode::CsscViolated, "images of " + edge_label(x) + " and " + edge_label(y) + " at vertex " +
                                      std::to_string(report.witness_vertex) + " intersect");
  }
}

std::vector<PathLabel> cycles_at(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k) {
  std::vector<PathLabel> out;
  for (std::size_t len = 1; len <= k; ++len)
    for (auto& p : enumerate_paths(ifs, vertex, len))
      if (p.terminal == vertex) out.push_back(std::move(p));
  return out;
}

}  // namespace

IntervalSet raw_level_images(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex, std::size_t k) {
  if (vertex >= ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "no such vertex");
  IntervalSet set{vertex, k, {}};
  if (k == 0) {
    PathLabel empty;
    empty.initial = empty.terminal = vertex;
    set.intervals.push_back({hull[vertex], empty});
    return set;
  }
  for (auto& p : enumerate_paths(ifs, vertex, k)) {
    Interval img = image(p.map, hull[p.terminal]);
    set.intervals.push_back({std::move(img), std::move(p)});
  }
  std::sort(set.intervals.begin(), set.intervals.end(), interval_less);
  return set;
}

IntervalSet level_intervals(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k) {
  return level_intervals(ifs, compute_hulls(ifs), vertex, k);
}

IntervalSet level_intervals(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex, std::size_t k) {
  require_cssc(ifs, hull);
  return raw_level_images(ifs, hull, vertex, k);
}

std::size_t GapMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [len, m] : counts) n += m;
  return n;
}

void GapMultiset::insert(const Rational& length, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  if (length.sign() <= 0) fail(ErrorCode::InvalidArgument, "gap lengths are positive");
  counts[length] += multiplicity;
}

GapMultiset GapMultiset::scaled(const Rational& factor) const {
  GapMultiset out{vertex, depth, {}};
  for (const auto& [len, m] : counts) out.insert(len * factor, m);
  return out;
}

GapMultiset gap_lengths(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k) {
  return gap_lengths(ifs, compute_hulls(ifs), vertex, k);
}

GapMultiset gap_lengths(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex, std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const IntervalSet set = level_intervals(ifs, hull, vertex, k);
  GapMultiset gaps{vertex, k, {}};
  for (std::size_t i = 1; i < set.intervals.size(); ++i)
    gaps.insert(set.intervals[i].interval.lo - set.intervals[i - 1].interval.hi);
  return gaps;
}

GapMultiset gap_map(const DirectedGraphIfs& ifs, VertexId vertex, const std::vector<GapMultiset>& gaps,
                    const GapMultiset& level_one) {
  if (gaps.size() != ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "one gap multiset per vertex");
  GapMultiset out = level_one;
  out.vertex = vertex;
  out.depth = gaps.empty() ? 1 : gaps.front().depth + 1;
  for (const auto& e : ifs.out_edges(vertex))
    for (const auto& [len, m] : gaps[e.to].counts) out.insert(len * e.map.ratio, m);
  return out;
}

bool verify_gap_fixed_point(const DirectedGraphIfs& ifs, std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const Hull hull = compute_hulls(ifs);
  const std::size_t n = ifs.vertex_count();
  std::vector<GapMultiset> level_k;
  for (VertexId v = 0; v < n; ++v) level_k.push_back(gap_lengths(ifs, hull, v, k));
  for (VertexId v = 0; v < n; ++v) {
    const GapMultiset next = gap_lengths(ifs, hull, v, k + 1);
    if (!(next == gap_map(ifs, v, level_k, gap_lengths(ifs, hull, v, 1)))) return false;
  }
  return true;
}

double path_weight(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h, const PathLabel& path) {
  double w = 1.0;
  for (EdgeId id : path.edges) {
    const Edge& e = ifs.edge(id);
    w *= rpow(e.map.ratio, s) * h.at(e.to) / h.at(e.from);
  }
  return w;
}

MeasureOracle::MeasureOracle(const DirectedGraphIfs& ifs, double s, std::vector<double> h, VertexId vertex,
                             std::size_t k)
    : s_(s) {
  if (h.size() != ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "eigenvector size mismatch");
  const Hull hull = compute_hulls(ifs);
  hull_ = hull[vertex];
  set_ = level_intervals(ifs, hull, vertex, k);
  weights_.reserve(set_.intervals.size());
  prefix_.assign(1, 0.0);
  for (const auto& t : set_.intervals) {
    weights_.push_back(path_weight(ifs, s, h, t.path));
    prefix_.push_back(prefix_.back() + weights_.back());
  }
}

double MeasureOracle::total_mass() const { return prefix_.back(); }

std::pair<double, double> MeasureOracle::measure(const Interval& j) const {
  if (j.hi < j.lo || !hull_.contains(j)) fail(ErrorCode::IntervalOutsideHull, "interval is not inside the hull");
  const auto& iv = set_.intervals;
  // intervals are disjoint and sorted, so both families are contiguous ranges
  const auto first_in = std::partition_point(iv.begin(), iv.end(), [&](const TaggedInterval& t) {
    return t.interval.lo < j.lo;
  });
  const auto end_in = std::partition_point(iv.begin(), iv.end(), [&](const TaggedInterval& t) {
    return t.interval.hi <= j.hi;
  });
  const auto first_meet = std::partition_point(iv.begin(), iv.end(), [&](const TaggedInterval& t) {
    return t.interval.hi <= j.lo;
  });
  const auto end_meet = std::partition_point(iv.begin(), iv.end(), [&](const TaggedInterval& t) {
    return t.interval.lo < j.hi;
  });
  auto sum = [&](auto from, auto to) {
    if (from >= to) return 0.0;
    return prefix_[static_cast<std::size_t>(to - iv.begin())] - prefix_[static_cast<std::size_t>(from - iv.begin())];
  };
  return {sum(first_in, end_in), sum(first_meet, end_meet)};
}

std::pair<double, double> MeasureOracle::density(const Interval& j) const {
  if (j.length().sign() <= 0) fail(ErrorCode::ZeroLengthInterval, "interval has zero length");
  const auto [lo, hi] = measure(j);
  const double scale = rpow(j.length(), s_);
  return {lo / scale, hi / scale};
}

std::pair<double, double> measure_of_interval(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                              VertexId vertex, const Interval& j, std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  return MeasureOracle(ifs, s, h, vertex, k).measure(j);
}

std::pair<double, double> density(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                  VertexId vertex, const Interval& j, std::size_t k) {
  if (j.length().sign() <= 0) fail(ErrorCode::ZeroLengthInterval, "interval has zero length");
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  return MeasureOracle(ifs, s, h, vertex, k).density(j);
}

SupDensityEstimate sup_density_estimate(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                        VertexId vertex, std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const MeasureOracle oracle(ifs, s, h, vertex, k);
  const Hull hull = compute_hulls(ifs);
  SupDensityEstimate best{-1.0, oracle.hull(), 0};
  auto consider = [&](const Interval& j) {
    ++best.candidates;
    const double d = oracle.density(j).second;
    if (d > best.value) {
      best.value = d;
      best.argmax = j;
    }
  };
  for (std::size_t level = 0; level <= k; ++level) {
    const IntervalSet set = level == k ? oracle.intervals() : raw_level_images(ifs, hull, vertex, level);
    const auto& iv = set.intervals;
    for (std::size_t i = 0; i < iv.size(); ++i) {
      consider(iv[i].interval);
      if (i + 1 < iv.size()) consider({iv[i].interval.lo, iv[i + 1].interval.hi});
    }
  }
  return best;
}

const char* to_string(ImageRelation r) noexcept {
  switch (r) {
    case ImageRelation::Disjoint: return "disjoint";
    case ImageRelation::FirstInsideSecond: return "first-inside-second";
    case ImageRelation::SecondInsideFirst: return "second-inside-first";
    case ImageRelation::Overlapping: return "overlapping";
  }
  return "?";
}

ImageRelation compare_images(const Hull& hull, const PathLabel& p, const PathLabel& q) {
  if (p.edges == q.edges) fail(ErrorCode::InvalidArgument, "paths must be distinct");
  const Interval a = image(p.map, hull[p.terminal]);
  const Interval b = image(q.map, hull[q.terminal]);
  if (!a.intersects(b)) return ImageRelation::Disjoint;
  if (b.contains(a)) return ImageRelation::FirstInsideSecond;
  if (a.contains(b)) return ImageRelation::SecondInsideFirst;
  return ImageRelation::Overlapping;
}

TrichotomyReport verify_trichotomy(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k,
                                   std::size_t refinement) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const Hull hull = compute_hulls(ifs);
  const auto paths = cycles_at(ifs, vertex, k);
  TrichotomyReport report;
  report.paths = paths.size();

  std::map<std::size_t, IntervalSet> levels;
  auto level = [&](std::size_t r) -> const IntervalSet& {
    auto it = levels.find(r);
    if (it == levels.end()) it = levels.emplace(r, raw_level_images(ifs, hull, vertex, r)).first;
    return it->second;
  };
  // S_inner(F^r) must lie inside S_outer(F^{r + |inner| - |outer|}).
  auto refined_inside = [&](const PathLabel& inner, const PathLabel& outer) {
    const std::size_t r_outer =
        refinement + (inner.length() > outer.length() ? inner.length() - outer.length() : 0);
    std::vector<Interval> outer_images;
    for (const auto& t : level(r_outer).intervals) outer_images.push_back(image(outer.map, t.interval));
    for (const auto& t : level(refinement).intervals) {
      const Interval img = image(inner.map, t.interval);
      const bool covered = std::any_of(outer_images.begin(), outer_images.end(),
                                       [&](const Interval& o) { return o.contains(img); });
      if (!covered) return false;
    }
    return true;
  };
  auto violate = [&](const PathLabel& p, const PathLabel& q) {
    report.holds = false;
    if (!report.first_violation) report.first_violation = {p, q};
  };

  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& p = paths[i];
      const auto& q = paths[j];
      switch (compare_images(hull, p, q)) {
        case ImageRelation::Disjoint:
          ++report.disjoint;
          break;
        case ImageRelation::Overlapping:
          ++report.overlapping;
          violate(p, q);
          break;
        case ImageRelation::FirstInsideSecond:
        case ImageRelation::SecondInsideFirst: {
          ++report.nested;
          const bool p_inner = compare_images(hull, p, q) == ImageRelation::FirstInsideSecond;
          const auto& inner = p_inner ? p : q;
          const auto& outer = p_inner ? q : p;
          if (!report.first_nested) report.first_nested = {inner, outer};
          if (!refined_inside(inner, outer)) violate(inner, outer);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace gdifs
