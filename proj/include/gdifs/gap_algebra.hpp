#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdifs/ifs_graph.hpp"

namespace gdifs {

/// q = prod p^e over the stored primes; exponents are never zero.
struct ExponentVector {
  std::map<std::uint64_t, long> exponents;

  Rational reconstruct() const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Largest prime the trial-division sieve knows about.
inline constexpr std::uint64_t kFactorLimit = 1'000'000;

/// Throws NonPositive for q <= 0 and FactorTooLarge for a prime factor above kFactorLimit.
ExponentVector factor_rational(const Rational& q);

struct IndependenceResult {
  bool independent = true;
  /// When dependent: m != 0 with prod values[i]^m[i] = 1, divided by its gcd and
  /// with the first nonzero entry positive.
  std::optional<std::vector<long>> witness;
};

/// Values are a list: a repeated value makes the list dependent. Throws
/// ContainsOne if some value is 1 and NonPositive for values <= 0.
IndependenceResult is_multiplicatively_independent(std::span<const Rational> values);

/// prod values[i]^m[i], exact.
Rational evaluate_witness(std::span<const Rational> values, std::span<const long> m);

/// scale * <1, x_1, ..., x_j>: all products scale * x_1^k1 ... x_j^kj.
struct Coset {
  Rational scale;
  std::vector<Rational> generators;  // sorted, distinct

  /// Sorts and deduplicates the generators. Throws NonPositive.
  static Coset make(Rational scale, std::vector<Rational> generators);
  std::string str() const;
  friend bool operator==(const Coset&, const Coset&) = default;
};

struct CosetUnion {
  std::vector<Coset> cosets;
  std::string str() const;
};

/// G_u = g_u<1, r1> u g_u r2 r4 <1, r1, r2 r4, r3> u g_v r2 <1, r1, r2 r4, r3> for the
/// two-vertex layout (r_i are the edge ratios; for the unit interval they are a, b, c, d).
/// With equal_bd the product r2 r4 is written as r2^2. Throws BdMismatch.
CosetUnion two_vertex_gap_expression(const TwoVertexFamily& family, bool equal_bd);

/// One coset per level-1 gap (left to right), all sharing the edge ratios as generators.
/// Throws NotOneVertex and CsscViolated.
CosetUnion one_vertex_gap_expression(const DirectedGraphIfs& ifs);

using RationalMultiset = std::map<Rational, std::size_t>;

/// Elements >= cutoff, one per (coset, exponent tuple). Throws GeneratorNotContracting.
RationalMultiset enumerate_coset_union(const CosetUnion& cu, const Rational& cutoff);

enum class CompareMode { Set, Multiset };

struct GapComparison {
  bool equal = true;
  std::optional<Rational> witness;  // smallest element of the symmetric difference
};

GapComparison compare_gap_sets(const RationalMultiset& a, const RationalMultiset& b, CompareMode mode);

struct GapCrossCheck {
  CosetUnion expression;
  /// Both sides keep only x >= cutoff with x > completeness_bound.
  RationalMultiset from_intervals;
  RationalMultiset from_expression;
  Rational cutoff;
  /// g_max * r_max^k: every gap longer than this already appears at level k.
  Rational completeness_bound;
  GapComparison comparison;          // set semantics
};

/// Compares the interval-engine gaps at depth k with the closed-form expression for
/// one-vertex systems and the two-vertex layout. Throws NotApplicable otherwise.
GapCrossCheck cross_check_gaps(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t depth,
                               const Rational& cutoff);

}  // namespace gdifs
