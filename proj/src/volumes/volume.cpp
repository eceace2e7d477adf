#include "moduli/volumes/volumes.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace moduli::volumes {

using numeric::factorial;

std::size_t edge_variable_count(const StableGraph& graph) {
  return static_cast<std::size_t>(graph.edge_count());
}

namespace {

void check_volume_domain(int g, int n) {
  if (g < 0 || n < 0 || 2 * g + n < 3) throw DomainError("volume needs 2g + n >= 3");
  if (4 * g + n - 4 < 0 || 6 * g + 2 * n - 7 < 0)
    throw DomainError("volume prefactor undefined at (g, n) = (0, 3)");
}

}  // namespace

EdgePolynomial graph_polynomial(const CorrelatorEngine& engine, const StableGraph& graph,
                                const Integer& automorphisms) {
  const int g = graph.genus();
  const int n = graph.leg_count();
  check_volume_domain(g, n);
  const std::size_t V = graph.vertex_count();
  const std::size_t variables = edge_variable_count(graph);

  // slots[v]: edge variables incident to v (self-loops twice), then legs.
  std::vector<std::vector<int>> slots(V);
  int next = 0;
  for (std::size_t v = 0; v < V; ++v) {
    for (int i = 0; i < graph.vertex(v).loops; ++i) {
      slots[v].push_back(next);
      slots[v].push_back(next);
      ++next;
    }
  }
  for (std::size_t u = 0; u < V; ++u) {
    for (std::size_t v = u + 1; v < V; ++v) {
      for (int i = 0; i < graph.multiplicity(u, v); ++i) {
        slots[u].push_back(next);
        slots[v].push_back(next);
        ++next;
      }
    }
  }

  Rational prefactor = numeric::make_rational(
      numeric::power(Integer(2), static_cast<unsigned long>(6 * g + 2 * n - 4)) *
          factorial(4 * g + n - 4),
      factorial(6 * g + 2 * n - 7) * numeric::power(Integer(2), V) * automorphisms);

  EdgePolynomial product = EdgePolynomial::constant(variables, prefactor);
  for (std::size_t v = 0; v < V && !product.is_zero(); ++v) {
    std::vector<int> s = slots[v];
    s.insert(s.end(), graph.vertex(v).legs.size(), kZeroSlot);
    product *= n_polynomial_value(engine, graph.vertex(v).genus, s, variables);
  }
  EdgePolynomial edges = EdgePolynomial::constant(variables, 1);
  for (std::size_t e = 0; e < variables; ++e) edges *= EdgePolynomial::variable(variables, e);
  return product * edges;
}

VolumeBreakdown volume_breakdown(const CorrelatorEngine& engine, int g, int n,
                                 const VolumeOptions& options) {
  check_volume_domain(g, n);
  const auto graphs = graphs::enumerate_stable_graphs(g, n);
  std::vector<PiValue> values(graphs.size());

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        values[i] = zeta_map(graph_polynomial(engine, graphs[i].graph, graphs[i].automorphisms));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  VolumeBreakdown out;
  out.g = g;
  out.n = n;
  out.graph_count = graphs.size();
  const int degree = 6 * g + 2 * n - 6;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const PiValue& value = values[i];
    if (!value.is_zero()) {
      auto mono = value.monomial();
      if (!mono || mono->first != degree)
        throw PipelineError("graph contribution is not a multiple of pi^" + std::to_string(degree));
    }
    auto key = graphs::stratum_of(graphs[i].graph);
    out.strata[key] += value;
    out.by_vertices[key.V] += value;
    out.total += value;
  }
  return out;
}

PiValue volume(const CorrelatorEngine& engine, int g, int n, const VolumeOptions& options) {
  return volume_breakdown(engine, g, n, options).total;
}

StableGraph one_vertex_graph(int g, int n, int E) {
  if (E < 0 || E > g) throw DomainError("one-vertex graph needs 0 <= E <= g");
  std::vector<int> legs(static_cast<std::size_t>(n));
  std::iota(legs.begin(), legs.end(), 1);
  return StableGraph::single_vertex(g - E, E, legs);
}

PiValue one_vertex_pipeline(const CorrelatorEngine& engine, int g, int n, int E) {
  StableGraph graph = one_vertex_graph(g, n, E);
  graph.validate(g, n);
  return zeta_map(graph_polynomial(engine, graph, graphs::automorphism_order(graph)));
}

PiValue one_vertex_closed_form(const CorrelatorEngine& engine, int g, int n, int E) {
  if (E < 0 || E > g) throw DomainError("one-vertex closed form needs 0 <= E <= g");
  if (g < 2) return one_vertex_pipeline(engine, g, n, E);

  const int D = 3 * g + n - E - 3;
  Rational prefactor =
      numeric::make_rational(numeric::power(Integer(12), static_cast<unsigned long>(E)),
                             numeric::power(Integer(2), static_cast<unsigned long>(2 * g - 1)) *
                                 numeric::power(Integer(3), static_cast<unsigned long>(g))) *
      numeric::make_rational(factorial(6 * g + 2 * n - 2 * E - 5), factorial(6 * g + 2 * n - 7)) *
      numeric::make_rational(factorial(4 * g + n - 4), factorial(D) * factorial(g - E)) /
      Rational(factorial(E));

  PiValue sum;
  auto add = [&](const std::vector<int>& d) {
    std::vector<int> key = d;
    key.insert(key.end(), static_cast<std::size_t>(n), 0);
    Rational value = engine.value_or_zero(g - E, key);
    if (value == 0) return;
    PiValue term(value);
    for (int j = 0; j < E; ++j) {
      const int x = d[2 * j];
      const int y = d[2 * j + 1];
      Rational factor = Rational(numeric::binomial(2L * x + 2L * y + 2, 2L * y + 1)) /
                        Rational(x + y + 1);
      term *= numeric::zeta_even(2 * x + 2 * y + 2) * factor;
    }
    sum += term;
  };
  if (E == 0) {
    if (D == 0) add({});
  } else {
    numeric::for_each_composition({2 * E, D, false}, add);
  }
  return sum * prefactor;
}

PiValue normalized_ratio_exact(const PiValue& volume, int g, int n) {
  Rational scale = numeric::make_rational(1, 4) * numeric::power(Rational(2), -n) *
                   numeric::power(numeric::make_rational(8, 3), 4L - 4L * g - n);
  return PiValue(scale, 1) * volume;
}

numeric::BigFloat normalized_ratio(const PiValue& volume, int g, int n, unsigned digits) {
  return normalized_ratio_exact(volume, g, n).to_float(digits);
}

const VolumeBreakdown& VolumeCalculator::breakdown(int g, int n) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find({g, n});
    if (it != memo_.end()) return it->second;
  }
  VolumeBreakdown result = volume_breakdown(engine_, g, n, options_);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace({g, n}, std::move(result)).first->second;
}

}  // namespace moduli::volumes
