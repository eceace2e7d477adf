#include "oracles.hpp"

#include "moduli/graphs/stable_graph.hpp"
#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace moduli;
using namespace moduli::graphs;
using numeric::Integer;

namespace {

const std::vector<std::pair<int, int>> kSmallTypes = {
    {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {2, 1}, {2, 2}, {3, 0}};

StableGraph two_vertices(Vertex a, Vertex b, int edges) {
  return StableGraph({std::move(a), std::move(b)}, {0, edges, edges, 0});
}

}  // namespace

TEST_CASE("documented counts") {
  CHECK(enumerate_stable_graphs(0, 3).size() == 1);
  CHECK(enumerate_stable_graphs(1, 1).size() == 2);
  CHECK(enumerate_stable_graphs(2, 0).size() == 7);
  CHECK_THROWS_AS(enumerate_stable_graphs(1, 0), DomainError);
  CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), DomainError);
  // Larger counts, pinned after cross-checking with the direct oracle on the
  // small types below.
  CHECK(enumerate_stable_graphs(3, 0).size() == 42);
  CHECK(enumerate_stable_graphs(3, 2).size() == 1355);
  CHECK(enumerate_stable_graphs(4, 0).size() == 379);
}

TEST_CASE("automorphism orders") {
  for (int E = 0; E <= 4; ++E) {
    auto g = StableGraph::single_vertex(5 - E, E, {1, 2});
    CHECK(automorphism_order(g) == numeric::power(Integer(2), E) * numeric::factorial(E));
  }
  CHECK(automorphism_order(two_vertices({0, 0, {1, 2}}, {0, 0, {3, 4}}, 1)) == 1);
  CHECK(automorphism_order(two_vertices({0, 0, {}}, {0, 0, {}}, 3)) == 12);
  CHECK(edge_symmetry_factor(two_vertices({0, 0, {}}, {0, 0, {}}, 3)) == 6);
}

TEST_CASE("serialization") {
  auto g = two_vertices({0, 1, {2}}, {1, 0, {1}}, 1);
  CHECK(to_string(g) == "V=2;E=2;vertices=[(0,1,legs{2});(1,0,legs{1})];edges=[(0,1,1)]");
  CHECK(to_string(StableGraph::single_vertex(1, 0, {1})) == "V=1;E=0;vertices=[(1,0,legs{1})];edges=[]");
}

TEST_CASE("canonical keys") {
  auto g11 = enumerate_stable_graphs(1, 1);
  CHECK(canonical_form(g11[0].graph) != canonical_form(g11[1].graph));
  auto a = two_vertices({0, 0, {1, 2}}, {0, 1, {3}}, 1);
  auto b = two_vertices({0, 0, {1, 3}}, {0, 1, {2}}, 1);
  CHECK(canonical_form(a) != canonical_form(b));
  std::vector<std::size_t> swap{1, 0};
  CHECK(canonical_form(a.relabeled(swap)) == canonical_form(a));

  std::mt19937_64 rng(17);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {4, 0}})
    for (const auto& entry : enumerate_stable_graphs(g, n)) {
      std::vector<std::size_t> order(entry.graph.vertex_count());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      auto shuffled = entry.graph.relabeled(order);
      auto canon = canonicalize(shuffled);
      CHECK(canon.key == canonical_form(entry.graph));
      CHECK(canon.vertex_automorphisms == oracle::vertex_automorphisms(entry.graph));
      CHECK(oracle::isomorphic(canon.graph, entry.graph));
    }
}

TEST_CASE("emitted graphs are valid and distinct") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {4, 0}, {0, 7}}) {
    auto graphs = enumerate_stable_graphs(g, n);
    std::set<CanonicalKey> keys;
    for (const auto& entry : graphs) {
      CHECK_NOTHROW(entry.graph.validate(g, n));
      CHECK(entry.automorphisms == automorphism_order(entry.graph));
      keys.insert(canonical_form(entry.graph));
    }
    CHECK(keys.size() == graphs.size());
  }
}

TEST_CASE("enumeration matches the direct construction with pairwise isomorphism") {
  for (auto [g, n] : kSmallTypes) {
    CAPTURE(g);
    CAPTURE(n);
    auto direct = oracle::stable_graphs_direct(g, n);
    auto produced = enumerate_stable_graphs(g, n);
    REQUIRE(direct.size() == produced.size());

    std::map<CanonicalKey, Integer> expected;
    for (const auto& c : direct) expected[canonical_form(c.graph)] = c.automorphisms;
    CHECK(expected.size() == direct.size());
    for (const auto& entry : produced) {
      auto it = expected.find(canonical_form(entry.graph));
      REQUIRE(it != expected.end());
      CHECK(it->second == entry.automorphisms);
    }

    // Canonical-key grouping of every labeled graph equals pairwise
    // isomorphism grouping.
    auto labeled = oracle::stable_graphs_labeled(g, n);
    std::map<CanonicalKey, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < labeled.size(); ++i) by_key[canonical_form(labeled[i])].push_back(i);
    CHECK(by_key.size() == direct.size());
    for (const auto& [key, members] : by_key)
      for (std::size_t i : members) CHECK(oracle::isomorphic(labeled[i], labeled[members.front()]));
  }
}

TEST_CASE("orbit counting on genus two") {
  // Each class appears V!/|Aut_V| times among the labeled constructions.
  auto labeled = oracle::stable_graphs_labeled(2, 0);
  std::map<CanonicalKey, int> orbit;
  std::map<CanonicalKey, StableGraph> representative;
  for (const auto& g : labeled) {
    auto key = canonical_form(g);
    ++orbit[key];
    representative.emplace(key, g);
  }
  CHECK(orbit.size() == 7);
  for (const auto& [key, size] : orbit) {
    const auto& g = representative.at(key);
    Integer v_factorial = numeric::factorial(static_cast<long>(g.vertex_count()));
    CHECK(Integer(size) * canonicalize(g).vertex_automorphisms == v_factorial);
  }
  // Mass formula: sum of 1/|Aut| over G_{2,0}.
  numeric::Rational mass = 0;
  for (const auto& entry : enumerate_stable_graphs(2, 0)) mass += numeric::Rational(1) / entry.automorphisms;
  numeric::Rational oracle_mass = 0;
  for (const auto& c : oracle::stable_graphs_direct(2, 0)) oracle_mass += numeric::Rational(1) / c.automorphisms;
  CHECK(mass == oracle_mass);
}

TEST_CASE("strata") {
  auto g11 = enumerate_stable_graphs(1, 1);
  auto s11 = stratify(g11);
  REQUIRE(s11.size() == 2);
  CHECK((s11[0].key == StratumKey{1, 0, 0}));
  CHECK((s11[1].key == StratumKey{1, 1, 0}));
  CHECK(s11[0].graphs.size() == 1);
  CHECK(s11[1].graphs.size() == 1);

  auto g20 = enumerate_stable_graphs(2, 0);
  std::size_t total = 0;
  for (const auto& stratum : stratify(g20)) {
    total += stratum.graphs.size();
    if (stratum.key == StratumKey{2, 0, 3}) CHECK(stratum.graphs.size() == 1);
    for (const auto& entry : stratum.graphs) CHECK(stratum_of(entry.graph) == stratum.key);
  }
  CHECK(total == g20.size());
}
