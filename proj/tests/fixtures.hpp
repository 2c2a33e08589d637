#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gdifs/ifs_graph.hpp"

namespace fixtures {

using gdifs::Rational;

inline Rational q(const char* s) { return Rational::parse(s); }

inline gdifs::TwoVertexFamily family_a() {
  return {q("11/23"), q("5/23"), q("7/23"), q("13/73"), q("53/73"), q("7/73")};
}
inline gdifs::TwoVertexFamily family_b() {
  return {q("11/23"), q("5/23"), q("7/23"), q("43/73"), q("7/73"), q("23/73")};
}
inline gdifs::TwoVertexFamily family_c() {
  return {q("1/4"), q("5/12"), q("1/3"), q("1/7"), q("11/21"), q("1/3")};
}

inline gdifs::DirectedGraphIfs canonical(const gdifs::TwoVertexFamily& f) {
  return gdifs::canonical_two_vertex(f.a, f.g_u, f.b, f.c, f.g_v, f.d);
}

inline gdifs::DirectedGraphIfs one_vertex(const std::vector<std::pair<const char*, const char*>>& maps) {
  std::vector<gdifs::Edge> edges;
  long id = 1;
  for (const auto& [r, t] : maps) edges.push_back({id++, 0, 0, {q(r), q(t)}});
  return gdifs::build_ifs(1, edges);
}

inline gdifs::DirectedGraphIfs cantor() { return one_vertex({{"1/3", "0"}, {"1/3", "2/3"}}); }

inline gdifs::DirectedGraphIfs nested_overlap() {
  return one_vertex({{"1/3", "0"}, {"1/27", "4/27"}, {"1/3", "2/3"}});
}

/// Directed ring 0 -> 1 -> 2 -> 0 with one loop per vertex, all hulls [0, 1].
inline gdifs::DirectedGraphIfs ring3() {
  return gdifs::build_ifs(3, {{1, 0, 0, {q("1/5"), q("0")}},
                              {2, 0, 1, {q("1/7"), q("6/7")}},
                              {3, 1, 1, {q("1/11"), q("0")}},
                              {4, 1, 2, {q("1/13"), q("12/13")}},
                              {5, 2, 2, {q("2/17"), q("0")}},
                              {6, 2, 0, {q("1/19"), q("18/19")}}});
}

/// Random positive rationals summing to 1.
inline std::vector<Rational> random_partition(std::mt19937_64& rng, std::size_t parts, long max = 40) {
  std::uniform_int_distribution<long> dist(1, max);
  std::vector<long> w;
  long total = 0;
  for (std::size_t i = 0; i < parts; ++i) total += w.emplace_back(dist(rng));
  std::vector<Rational> out;
  for (long x : w) out.emplace_back(x, total);
  return out;
}

inline gdifs::TwoVertexFamily random_family(std::mt19937_64& rng) {
  const auto u = random_partition(rng, 3), v = random_partition(rng, 3);
  return {u[0], u[1], u[2], v[0], v[1], v[2]};
}

/// Random strongly connected system on 1..3 vertices with 2..3 out-edges per
/// vertex; the ring edge v -> v+1 guarantees strong connectivity.
inline gdifs::DirectedGraphIfs random_ifs(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 3), deg(2, 3);
  std::uniform_int_distribution<long> num(1, 30);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> target(0, n - 1);
  std::vector<gdifs::Edge> edges;
  long id = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t k = deg(rng);
    for (std::size_t j = 0; j < k; ++j) {
      const gdifs::VertexId to = j == 0 ? (v + 1) % n : target(rng);
      const long a = num(rng);
      edges.push_back({id++, v, to, {Rational(a, a + num(rng)), Rational(num(rng), 31)}});
    }
  }
  return gdifs::build_ifs(n, edges);
}

}  // namespace fixtures
