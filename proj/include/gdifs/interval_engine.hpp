#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gdifs/ifs_graph.hpp"

namespace gdifs {

struct TaggedInterval {
  Interval interval;
  PathLabel path;
};

/// F_u^k: the images S_e(I_{t(e)}) over the length-k paths e from `vertex`, sorted.
struct IntervalSet {
  VertexId vertex = 0;
  std::size_t level = 0;
  std::vector<TaggedInterval> intervals;
};

/// Throws CsscViolated when the separation condition fails.
IntervalSet level_intervals(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k);
IntervalSet level_intervals(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex, std::size_t k);

/// Same images without the separation requirement; sorted by (lo, hi, path).
IntervalSet raw_level_images(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex,
                             std::size_t k);

/// Gap lengths with multiplicity.
struct GapMultiset {
  VertexId vertex = 0;
  std::size_t depth = 0;
  std::map<Rational, std::size_t> counts;

  std::size_t size() const;
  void insert(const Rational& length, std::size_t multiplicity = 1);
  GapMultiset scaled(const Rational& factor) const;
  friend bool operator==(const GapMultiset& a, const GapMultiset& b) { return a.counts == b.counts; }
};

/// Lengths of the open components of I_u minus F_u^k.
GapMultiset gap_lengths(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k);
GapMultiset gap_lengths(const DirectedGraphIfs& ifs, const Hull& hull, VertexId vertex, std::size_t k);

/// Right-hand side of the gap recursion at `vertex`: the level-1 gaps together with
/// r_e * (gaps at t(e)) over the out-edges e.
GapMultiset gap_map(const DirectedGraphIfs& ifs, VertexId vertex, const std::vector<GapMultiset>& gaps,
                    const GapMultiset& level_one);

/// Checks, for every vertex, gaps(k+1) == gap_map(gaps(k)) as multisets.
bool verify_gap_fixed_point(const DirectedGraphIfs& ifs, std::size_t k);

/// p_e = h_{i(e)}^{-1} r_e^s h_{t(e)}.
double path_weight(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h, const PathLabel& path);

/// mu_u evaluated through level-k path weights. Intervals and prefix sums are
/// built once so each query is two binary searches.
class MeasureOracle {
 public:
  MeasureOracle(const DirectedGraphIfs& ifs, double s, std::vector<double> h, VertexId vertex, std::size_t k);

  const IntervalSet& intervals() const noexcept { return set_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const Interval& hull() const noexcept { return hull_; }
  double s() const noexcept { return s_; }
  double total_mass() const;

  /// lower: weights of level intervals inside J; upper: weights of those meeting J
  /// in a set of positive length. Throws IntervalOutsideHull.
  std::pair<double, double> measure(const Interval& j) const;
  /// measure / |J|^s. Throws ZeroLengthInterval.
  std::pair<double, double> density(const Interval& j) const;

 private:
  double s_;
  Interval hull_;
  IntervalSet set_;
  std::vector<double> weights_;
  std::vector<double> prefix_;  // prefix_[i] = sum of weights_[0..i)
};

std::pair<double, double> measure_of_interval(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                              VertexId vertex, const Interval& j, std::size_t k);
std::pair<double, double> density(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                  VertexId vertex, const Interval& j, std::size_t k);

struct SupDensityEstimate {
  double value = 0.0;
  Interval argmax;
  std::size_t candidates = 0;
};

/// Maximum upper density over level-j intervals (j <= k) and the intervals spanning
/// two neighbouring level-j intervals.
SupDensityEstimate sup_density_estimate(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h,
                                        VertexId vertex, std::size_t k);

enum class ImageRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Overlapping };

const char* to_string(ImageRelation r) noexcept;

/// Relation between S_p(I_u) and S_q(I_u). Throws InvalidArgument when p == q.
ImageRelation compare_images(const Hull& hull, const PathLabel& p, const PathLabel& q);

struct TrichotomyReport {
  bool holds = true;
  std::size_t paths = 0;
  std::size_t disjoint = 0;
  std::size_t nested = 0;
  std::size_t overlapping = 0;
  /// First nested pair (inner, outer) in enumeration order.
  std::optional<std::pair<PathLabel, PathLabel>> first_nested;
  /// First pair that breaks the statement, if any.
  std::optional<std::pair<PathLabel, PathLabel>> first_violation;
};

/// Over all distinct pairs of u -> u paths of length <= k: hull images must be
/// disjoint or nested, and for nested pairs the level-r refinement of the inner
/// image must sit inside the matching refinement of the outer one.
TrichotomyReport verify_trichotomy(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t k,
                                   std::size_t refinement = 2);

}  // namespace gdifs
