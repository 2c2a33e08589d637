#include "doctest.h"
#include "fixtures.hpp"
#include "gdifs/classifier.hpp"
#include "test_support.hpp"

using namespace gdifs;
using fixtures::q;

namespace {

std::vector<std::string> cycle_labels(const std::vector<SimpleCycle>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.label());
  return out;
}

std::vector<std::string> chain_labels(const std::vector<Chain>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.label());
  return out;
}

}  // namespace

TEST_CASE("simple cycles") {
  const auto fig1 = fixtures::canonical(fixtures::family_c());
  const auto cycles = simple_cycles(fig1);
  CHECK(cycle_labels(cycles) == std::vector<std::string>{"e1", "e3", "e2e4"});
  CHECK(cycles[2].ratio == q("1/9"));
  CHECK(cycles[2].vertices == std::vector<VertexId>{0, 1});
  CHECK(simple_cycles(fixtures::cantor()).size() == 2);
  CHECK(cycle_labels(simple_cycles(fixtures::ring3())) == std::vector<std::string>{"e1", "e3", "e5", "e2e4e6"});

  // parallel edges give distinct cycles
  const auto parallel = build_ifs(2, {{1, 0, 1, {q("1/3"), q("0")}},
                                      {2, 0, 1, {q("1/3"), q("2/3")}},
                                      {3, 1, 0, {q("1/4"), q("0")}},
                                      {4, 1, 0, {q("1/4"), q("3/4")}}});
  CHECK(cycle_labels(simple_cycles(parallel)) == std::vector<std::string>{"e1e3", "e1e4", "e2e3", "e2e4"});
}

TEST_CASE("simple paths") {
  const auto fig1 = fixtures::canonical(fixtures::family_c());
  const auto uv = simple_paths(fig1, 0, 1);
  REQUIRE(uv.size() == 1);
  CHECK(uv[0].label() == "e2");
  CHECK(simple_paths(fig1, 1, 0)[0].label() == "e4");

  // bidirectional ring: two arcs from 0 to 2
  const auto ring = build_ifs(3, {{1, 0, 1, {q("1/3"), q("0")}},
                                  {2, 0, 2, {q("1/3"), q("2/3")}},
                                  {3, 1, 2, {q("1/3"), q("0")}},
                                  {4, 1, 0, {q("1/3"), q("2/3")}},
                                  {5, 2, 0, {q("1/3"), q("0")}},
                                  {6, 2, 1, {q("1/3"), q("2/3")}}});
  std::vector<std::string> arcs;
  for (const auto& p : simple_paths(ring, 0, 2)) arcs.push_back(p.label());
  CHECK(arcs == std::vector<std::string>{"e2", "e1e3"});
  CHECK(error_code([&] { simple_paths(ring, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("chains attached to a vertex") {
  const auto fig1 = fixtures::canonical(fixtures::family_c());
  CHECK(chain_labels(chains_attached(fig1, 0, 1)) == std::vector<std::string>{"(e1)", "(e2e4)"});
  const auto two = chain_labels(chains_attached(fig1, 0, 2));
  CHECK(two == std::vector<std::string>{"(e1)", "(e2e4)", "(e2e4, e3)"});
  for (const auto& c : chains_attached(fig1, 0, 3)) CHECK(is_chain(c));
  CHECK(chains_attached(fixtures::cantor(), 0, 3).size() == 2);
  CHECK(error_code([&] { chains_attached(fig1, 0, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cycle/chain structure") {
  const auto fig1 = fixtures::canonical(fixtures::family_c());
  const auto u = check_cycle_chain_structure(fig1, 0);
  REQUIRE(u.found);
  CHECK(u.c1->label() == "e1");
  CHECK(u.c2->label() == "e2e4");
  CHECK(u.c3->label() == "e3");

  const auto v = check_cycle_chain_structure(fig1, 1);
  REQUIRE(v.found);
  CHECK(v.c1->label() == "e3");
  CHECK(v.c2->edges == std::vector<EdgeId>{2, 4});
  CHECK(v.c3->label() == "e1");

  CHECK_FALSE(check_cycle_chain_structure(fixtures::cantor(), 0).found);
  CHECK_FALSE(check_cycle_chain_structure(fixtures::nested_overlap(), 0).found);
  CHECK(check_cycle_chain_structure(fixtures::ring3(), 0).found);
}

TEST_CASE("independence set") {
  const auto fig1 = fixtures::canonical(fixtures::family_a());
  std::vector<Rational> values;
  for (const auto& v : independence_set(fig1, 0)) values.push_back(v.value);
  const auto f = fixtures::family_a();
  CHECK(values == std::vector<Rational>{f.g_u, f.g_v, f.a, f.c, f.b * f.d, f.b});

  std::vector<Rational> vc;
  for (const auto& v : independence_set(fixtures::canonical(fixtures::family_c()), 0)) vc.push_back(v.value);
  CHECK(vc == std::vector<Rational>{q("5/12"), q("11/21"), q("1/4"), q("1/7"), q("1/9"), q("1/3")});
  CHECK(error_code([] { independence_set(fixtures::cantor(), 0); }) == ErrorCode::NotApplicable);
}

TEST_CASE("classify_attractor") {
  const auto c = classify_attractor(fixtures::canonical(fixtures::family_c()));
  CHECK(c.verdict == Verdict::NotOneVertexAttractor);
  CHECK(c.rule == Rule::ExactMeasureIndependenceEqualBd);
  REQUIRE(c.independence);
  CHECK(c.independence->independent);
  CHECK(c.independence_values.size() == 5);

  const auto a = classify_attractor(fixtures::canonical(fixtures::family_a()));
  CHECK(a.verdict == Verdict::NotOneVertexAttractor);
  CHECK(a.rule == Rule::ExactMeasureIndependence);

  // Example B fails a condition; its gap set argument still needs independence,
  // and g_v = 7/73 = b d makes the list dependent
  const auto b = classify_attractor(fixtures::canonical(fixtures::family_b()));
  CHECK(b.verdict == Verdict::Inconclusive);
  REQUIRE(b.independence);
  CHECK_FALSE(b.independence->independent);

  // c = a: the first dependence found is a c^-1 = 1
  const auto mod = canonical_two_vertex(q("1/4"), q("5/12"), q("1/3"), q("1/4"), q("5/12"), q("1/3"));
  const auto m = classify_attractor(mod);
  CHECK(m.verdict == Verdict::Inconclusive);
  REQUIRE(m.independence->witness);
  CHECK(*m.independence->witness == std::vector<long>{1, 0, -1, 0, 0});

  CHECK(classify_attractor(fixtures::cantor()).verdict == Verdict::NotApplicable);

  const auto ring = classify_attractor(fixtures::ring3());
  CHECK(ring.verdict == Verdict::NotOneVertexAttractorUnderCssc);
  CHECK(ring.rule == Rule::ChainStructureIndependence);
}

TEST_CASE("verdict at the second vertex uses the swapped family") {
  const auto fig1 = fixtures::canonical(fixtures::family_c());
  const auto v = classify_attractor(fig1, 1);
  REQUIRE(v.certification);
  CHECK(v.certification->family.a == q("1/7"));
  // h_u / h_v > 1, so the measure route fails and the gap-set route applies
  CHECK(v.certification->status == CertificationStatus::FailedCondition);
  CHECK(v.verdict == Verdict::NotOneVertexAttractorUnderCssc);
  CHECK(v.rule == Rule::GapSetIndependenceEqualBd);
}

TEST_CASE("general graphs without separation are inconclusive") {
  const auto overlapping = build_ifs(2, {{1, 0, 0, {q("1/2"), q("0")}},
                                         {2, 0, 1, {q("1/2"), q("1/2")}},
                                         {3, 1, 1, {q("1/3"), q("0")}},
                                         {4, 1, 0, {q("1/3"), q("2/3")}},
                                         {5, 1, 0, {q("1/4"), q("1/3")}}});
  const auto cert = classify_attractor(overlapping);
  CHECK_FALSE(cert.cssc_holds);
  CHECK(cert.verdict == Verdict::Inconclusive);
}
