#include "gdifs/gap_algebra.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "gdifs/error.hpp"
#include "gdifs/interval_engine.hpp"

namespace gdifs {

namespace {

const std::vector<std::uint32_t>& primes() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kFactorLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kFactorLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kFactorLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

void factor_into(mpz_class n, long sign, std::map<std::uint64_t, long>& out) {
  for (std::uint32_t p : primes()) {
    if (n == 1) return;
    if (mpz_class(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      out[p] += sign;
    }
  }
  if (n == 1) return;
  // no factor up to sqrt(n) remains, so n is prime
  if (n > kFactorLimit) fail(ErrorCode::FactorTooLarge, "prime factor " + n.get_str() + " exceeds 10^6");
  out[n.get_ui()] += sign;
}

using Row = std::vector<mpz_class>;

void make_primitive(Row& row) {
  mpz_class g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (const auto& x : xs) out += ", " + x.str();
  return out;
}

}  // namespace

Rational ExponentVector::reconstruct() const {
  mpz_class num = 1, den = 1;
  for (const auto& [p, e] : exponents) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    (e > 0 ? num : den) *= pe;
  }
  return Rational(mpq_class(num, den));
}

ExponentVector factor_rational(const Rational& q) {
  if (q.sign() <= 0) fail(ErrorCode::NonPositive, "cannot factor " + q.str());
  ExponentVector v;
  factor_into(q.numerator(), 1, v.exponents);
  factor_into(q.denominator(), -1, v.exponents);
  std::erase_if(v.exponents, [](const auto& kv) { return kv.second == 0; });
  return v;
}

IndependenceResult is_multiplicatively_independent(std::span<const Rational> values) {
  std::vector<ExponentVector> vectors;
  for (const auto& v : values) {
    if (v.sign() <= 0) fail(ErrorCode::NonPositive, "value " + v.str() + " is not positive");
    if (v == Rational(1)) fail(ErrorCode::ContainsOne, "1 is trivially dependent");
    vectors.push_back(factor_rational(v));
  }
  std::map<std::uint64_t, std::size_t> column;
  for (const auto& v : vectors)
    for (const auto& [p, e] : v.exponents) column.emplace(p, 0);
  std::size_t next = 0;
  for (auto& [p, c] : column) c = next++;
  const std::size_t width = column.size();
  const std::size_t n = values.size();

  // [exponents | identity]; the identity part records the combination of inputs
  std::map<std::size_t, Row> pivots;  // leading column -> row
  IndependenceResult result;
  for (std::size_t i = 0; i < n; ++i) {
    Row row(width + n, 0);
    for (const auto& [p, e] : vectors[i].exponents) row[column[p]] = e;
    row[width + i] = 1;
    for (;;) {
      std::size_t lead = 0;
      while (lead < width && row[lead] == 0) ++lead;
      if (lead == width) {
        Row m(row.begin() + static_cast<long>(width), row.end());
        make_primitive(m);
        const auto first = std::find_if(m.begin(), m.end(), [](const mpz_class& x) { return x != 0; });
        if (*first < 0)
          for (auto& x : m) x = -x;
        std::vector<long> witness;
        for (const auto& x : m) {
          if (!x.fits_slong_p()) fail(ErrorCode::Internal, "witness entry overflows");
          witness.push_back(x.get_si());
        }
        result.independent = false;
        result.witness = std::move(witness);
        return result;
      }
      const auto it = pivots.find(lead);
      if (it == pivots.end()) {
        make_primitive(row);
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Row& piv = it->second;
      const mpz_class pa = piv[lead], ra = row[lead];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] * pa - piv[j] * ra;
      make_primitive(row);
    }
  }
  return result;
}

Rational evaluate_witness(std::span<const Rational> values, std::span<const long> m) {
  if (values.size() != m.size()) fail(ErrorCode::InvalidArgument, "witness length mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const unsigned long k = static_cast<unsigned long>(m[i] < 0 ? -m[i] : m[i]);
    const Rational p = pow(values[i], static_cast<unsigned>(k));
    out = m[i] < 0 ? out / p : out * p;
  }
  return out;
}

Coset Coset::make(Rational scale, std::vector<Rational> generators) {
  if (scale.sign() <= 0) fail(ErrorCode::NonPositive, "coset scale must be positive");
  for (const auto& g : generators)
    if (g.sign() <= 0) fail(ErrorCode::NonPositive, "generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return {std::move(scale), std::move(generators)};
}

std::string Coset::str() const { return scale.str() + "<1" + join(generators) + ">"; }

std::string CosetUnion::str() const {
  std::string out;
  for (const auto& c : cosets) out += (out.empty() ? "" : " u ") + c.str();
  return out;
}

CosetUnion two_vertex_gap_expression(const TwoVertexFamily& family, bool equal_bd) {
  const Rational r1 = family.ratio_e1(), r2 = family.ratio_e2(), r3 = family.ratio_e3(), r4 = family.ratio_e4();
  if (equal_bd && r2 != r4) fail(ErrorCode::BdMismatch, "b and d differ");
  const Rational cross = equal_bd ? pow(r2, 2) : r2 * r4;
  const std::vector<Rational> gens{r1, cross, r3};
  return {{Coset::make(family.g_u, {r1}), Coset::make(family.g_u * cross, gens),
           Coset::make(family.g_v * r2, gens)}};
}

CosetUnion one_vertex_gap_expression(const DirectedGraphIfs& ifs) {
  if (ifs.vertex_count() != 1) fail(ErrorCode::NotOneVertex, "expected a one-vertex system");
  const IntervalSet level = level_intervals(ifs, 0, 1);
  std::vector<Rational> gens;
  for (const auto& e : ifs.edges()) gens.push_back(e.map.ratio);
  CosetUnion cu;
  for (std::size_t i = 1; i < level.intervals.size(); ++i)
    cu.cosets.push_back(Coset::make(level.intervals[i].interval.lo - level.intervals[i - 1].interval.hi, gens));
  return cu;
}

RationalMultiset enumerate_coset_union(const CosetUnion& cu, const Rational& cutoff) {
  if (cutoff.sign() <= 0) fail(ErrorCode::InvalidArgument, "cutoff must be positive");
  for (const auto& c : cu.cosets)
    for (const auto& g : c.generators)
      if (g >= Rational(1)) fail(ErrorCode::GeneratorNotContracting, "generator " + g.str() + " is not below 1");
  RationalMultiset out;
  for (const auto& c : cu.cosets) {
    // nondecreasing generator indices visit each exponent tuple once
    std::function<void(const Rational&, std::size_t)> walk = [&](const Rational& value, std::size_t from) {
      ++out[value];
      for (std::size_t i = from; i < c.generators.size(); ++i) {
        const Rational next = value * c.generators[i];
        if (next >= cutoff) walk(next, i);
      }
    };
    if (c.scale >= cutoff) walk(c.scale, 0);
  }
  return out;
}

GapComparison compare_gap_sets(const RationalMultiset& a, const RationalMultiset& b, CompareMode mode) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return {false, ia->first};
    if (ia == a.end() || ib->first < ia->first) return {false, ib->first};
    if (mode == CompareMode::Multiset && ia->second != ib->second) return {false, ia->first};
    ++ia;
    ++ib;
  }
  return {true, std::nullopt};
}

GapCrossCheck cross_check_gaps(const DirectedGraphIfs& ifs, VertexId vertex, std::size_t depth,
                               const Rational& cutoff) {
  if (depth == 0) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  if (vertex >= ifs.vertex_count()) fail(ErrorCode::InvalidArgument, "no such vertex");
  GapCrossCheck check;
  if (ifs.vertex_count() == 1) {
    check.expression = one_vertex_gap_expression(ifs);
  } else if (auto family = match_two_vertex_family(ifs)) {
    const TwoVertexFamily f = vertex == 0 ? *family : family->swapped();
    check.expression = two_vertex_gap_expression(f, f.equal_cross_ratios());
  } else {
    fail(ErrorCode::NotApplicable, "no closed-form gap expression for this graph");
  }
  const Hull hull = compute_hulls(ifs);
  Rational g_max = 0, r_max = 0;
  for (VertexId v = 0; v < ifs.vertex_count(); ++v)
    for (const auto& [len, m] : gap_lengths(ifs, hull, v, 1).counts) g_max = max(g_max, len);
  for (const auto& e : ifs.edges()) r_max = max(r_max, e.map.ratio);
  check.cutoff = cutoff;
  check.completeness_bound = g_max * pow(r_max, static_cast<unsigned>(depth));
  auto keep = [&](const Rational& x) { return x >= cutoff && x > check.completeness_bound; };
  for (const auto& [len, m] : gap_lengths(ifs, hull, vertex, depth).counts)
    if (keep(len)) check.from_intervals[len] = m;
  for (const auto& [len, m] : enumerate_coset_union(check.expression, cutoff))
    if (keep(len)) check.from_expression[len] = m;
  check.comparison = compare_gap_sets(check.from_intervals, check.from_expression, CompareMode::Set);
  return check;
}

}  // namespace gdifs
