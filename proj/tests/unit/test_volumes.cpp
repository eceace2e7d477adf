#include "oracles.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"
#include "moduli/volumes/volumes.hpp"

#include <doctest.h>

#include <cmath>

using namespace moduli;
using namespace moduli::volumes;
using numeric::Integer;
using numeric::PiValue;
using numeric::Rational;

namespace {

PiValue pi_term(Rational c, int k) { return PiValue(c, k); }

StableGraph two_vertices(graphs::Vertex a, graphs::Vertex b, int edges) {
  return StableGraph({std::move(a), std::move(b)}, {0, edges, edges, 0});
}

// 2^{6g+2n-4} (4g+n-4)! / (6g+2n-7)!
Rational prefactor(int g, int n) {
  return Rational(numeric::power(Integer(2), 6 * g + 2 * n - 4) * numeric::factorial(4 * g + n - 4)) /
         Rational(numeric::factorial(6 * g + 2 * n - 7));
}

}  // namespace

TEST_CASE("vertex polynomials") {
  CorrelatorEngine engine;
  std::vector<int> bb0{0, 0, kZeroSlot};
  CHECK(n_polynomial_value(engine, 0, bb0, 1) == EdgePolynomial::constant(1, 1));
  std::vector<int> zero{kZeroSlot};
  CHECK(n_polynomial_value(engine, 1, zero, 1).is_zero());
  // (6g+2n-5)!!/(2^{5g+n-3} 3^g g!) <1> b^2/2! ... = 3/(8*3) * b^2/3!... = b^2/48
  std::vector<int> b{0};
  auto n11 = n_polynomial_value(engine, 1, b, 1);
  CHECK(n11.terms().size() == 1);
  CHECK(n11.coefficient({2}) == Rational(1, 48));
  std::vector<int> unstable{0, 0};
  CHECK_THROWS_AS(n_polynomial_value(engine, 0, unstable, 1), DomainError);

  // N_{0,4}(b1,b2,b3,b4) = (b1^2+b2^2+b3^2+b4^2)/4
  std::vector<int> four{0, 1, 2, 3};
  auto n04 = n_polynomial_value(engine, 0, four, 4);
  CHECK(n04.terms().size() == 4);
  CHECK(n04.coefficient({2, 0, 0, 0}) == Rational(1, 4));
  CHECK(n04.coefficient({0, 0, 0, 2}) == Rational(1, 4));
}

TEST_CASE("polynomial arithmetic") {
  auto x = EdgePolynomial::variable(2, 0);
  auto y = EdgePolynomial::variable(2, 1);
  auto p = x * y;
  p *= Rational(3);
  CHECK(p.coefficient({1, 1}) == 3);
  EdgePolynomial sum(2);
  sum.add_term({1, 0}, 2);
  sum.add_term({1, 0}, -2);
  CHECK(sum.is_zero());
}

TEST_CASE("graph polynomials") {
  CorrelatorEngine engine;
  auto loop = StableGraph::single_vertex(0, 1, {1});
  auto p = graph_polynomial(engine, loop, automorphism_order(loop));
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient({1}) == 4);

  auto bare = StableGraph::single_vertex(1, 0, {1});
  CHECK(graph_polynomial(engine, bare, 1).is_zero());

  auto split = two_vertices({0, 0, {1, 2}}, {0, 0, {3, 4}}, 1);
  CHECK(graph_polynomial(engine, split, 1).coefficient({1}) == 4);
  CHECK(edge_variable_count(split) == 1);
}

TEST_CASE("zeta map") {
  auto four_b = EdgePolynomial::variable(1, 0);
  four_b *= Rational(4);
  CHECK(zeta_map(four_b) == pi_term(Rational(2, 3), 2));
  CHECK(zeta_map(EdgePolynomial::constant(2, Rational(5, 7))) == pi_term(Rational(5, 7), 0));
  EdgePolynomial mixed(2);
  mixed.add_term({1, 3}, 1);
  // 1! zeta(2) 3! zeta(4) = (1/6)(6/90) pi^6
  CHECK(zeta_map(mixed) == pi_term(Rational(1, 90), 6));
  EdgePolynomial even(1);
  even.add_term({2}, 1);
  CHECK_THROWS_AS(zeta_map(even), PipelineError);
}

TEST_CASE("hand-expanded volumes") {
  CorrelatorEngine engine;
  // Q_{1,1}: genus-1 vertex gives 0; loop graph gives Z(4b) = 4 zeta(2).
  Rational c11 = prefactor(1, 1) / Rational(2 * 2) * 1;  // 2^V |Aut| = 2 * 2
  CHECK(c11 == 4);
  CHECK(volume(engine, 1, 1) == pi_term(c11 * Rational(1, 6), 2));
  // Q_{0,4}: three leg splits, each 2^4 / 2^2 * b * 1 * 1.
  Rational c04 = 3 * prefactor(0, 4) / 4;
  CHECK(volume(engine, 0, 4) == pi_term(c04 * Rational(1, 6), 2));
  CHECK(volume(engine, 0, 4) == pi_term(2, 2));

  auto b11 = volume_breakdown(engine, 1, 1);
  CHECK(b11.by_vertices.at(1) == pi_term(Rational(2, 3), 2));
  CHECK(b11.graph_count == 2);
  auto b04 = volume_breakdown(engine, 0, 4);
  CHECK(b04.by_vertices.at(1).is_zero());
  CHECK(b04.by_vertices.at(2) == pi_term(2, 2));

  CHECK_THROWS_AS(volume(engine, 0, 3), DomainError);
  CHECK_THROWS_AS(volume(engine, 1, 0), DomainError);
}

TEST_CASE("known volumes") {
  CorrelatorEngine engine;
  CHECK(volume(engine, 1, 2) == pi_term(Rational(1, 3), 4));
  CHECK(volume(engine, 1, 3) == pi_term(Rational(11, 60), 6));
  CHECK(volume(engine, 2, 0) == pi_term(Rational(1, 15), 6));
  CHECK(volume(engine, 2, 1) == pi_term(Rational(29, 840), 8));
  CHECK(volume(engine, 3, 0) == pi_term(Rational(115, 33264), 12));
  // Genus zero: 2 pi^2 (pi^2/2)^{n-4}.
  for (int n = 4; n <= 8; ++n)
    CHECK(volume(engine, 0, n) ==
          pi_term(2 * numeric::power(Rational(1, 2), n - 4), 2 * n - 6));
}

TEST_CASE("degree and partition") {
  CorrelatorEngine engine;
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 3; ++n) {
      if (2 * g + n < 3 || (g == 0 && n == 3)) continue;
      CAPTURE(g);
      CAPTURE(n);
      auto b = volume_breakdown(engine, g, n);
      auto mono = b.total.monomial();
      REQUIRE(mono);
      CHECK(mono->first == 6 * g + 2 * n - 6);
      CHECK(mono->second > 0);
      PiValue strata, vertices;
      for (const auto& [key, part] : b.strata) strata += part;
      for (const auto& [V, part] : b.by_vertices) vertices += part;
      CHECK(strata == b.total);
      CHECK(vertices == b.total);
      CHECK(b.graph_count == graphs::enumerate_stable_graphs(g, n).size());
    }
}

TEST_CASE("thread count does not change results") {
  CorrelatorEngine one, many;
  auto a = volume_breakdown(one, 3, 1, {1});
  auto b = volume_breakdown(many, 3, 1, {4});
  CHECK(a.total == b.total);
  CHECK(a.strata == b.strata);
}

TEST_CASE("one-vertex closed form") {
  CorrelatorEngine engine;
  CHECK(one_vertex_closed_form(engine, 2, 0, 0).is_zero());
  CHECK(one_vertex_pipeline(engine, 2, 0, 0).is_zero());
  CHECK(one_vertex_closed_form(engine, 2, 0, 2) == one_vertex_pipeline(engine, 2, 0, 2));
  for (int E = 0; E <= 3; ++E)
    CHECK(one_vertex_closed_form(engine, 3, 1, E) == one_vertex_pipeline(engine, 3, 1, E));
  CHECK_THROWS_AS(one_vertex_closed_form(engine, 2, 0, 3), DomainError);
  auto g = one_vertex_graph(3, 2, 2);
  CHECK(g.vertex(0).genus == 1);
  CHECK(g.vertex(0).loops == 2);
  CHECK(g.vertex(0).legs == std::vector<int>{1, 2});
}

TEST_CASE("normalized ratio") {
  CorrelatorEngine engine;
  // (pi/4) (1/2) (3/8) (2/3) pi^2 = pi^3/32
  CHECK(normalized_ratio_exact(volume(engine, 1, 1), 1, 1) == pi_term(Rational(1, 32), 3));
  auto r = normalized_ratio(volume(engine, 1, 1), 1, 1, 40);
  CHECK(std::abs(static_cast<double>(r) - std::pow(M_PI, 3) / 32) < 1e-14);
  CHECK(normalized_ratio(volume(engine, 0, 4), 0, 4, 40) > 0);

  // Regression values.
  CHECK(std::abs(static_cast<double>(normalized_ratio(volume(engine, 2, 0), 2, 0, 40)) -
                 0.995457973022136) < 1e-14);
  CHECK(std::abs(static_cast<double>(normalized_ratio(volume(engine, 3, 0), 3, 0, 40)) -
                 0.9814357279483977) < 1e-14);
}

TEST_CASE("calculator memoizes") {
  CorrelatorEngine engine;
  VolumeCalculator calc(engine);
  const auto& first = calc.breakdown(2, 1);
  const auto& second = calc.breakdown(2, 1);
  CHECK(&first == &second);
  CHECK(calc.volume(2, 1) == pi_term(Rational(29, 840), 8));
}
