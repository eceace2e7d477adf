#include "moduli/graphs/stable_graph.hpp"

#include "moduli/numeric/errors.hpp"

#include <map>
#include <numeric>

namespace moduli::graphs {

namespace {

bool stable(int genus, int valence) { return 2 * genus + valence >= 3; }

// Every graph obtained by one more degeneration: a vertex of positive genus
// grows a self-loop, or a vertex splits into two joined by a new edge.
template <class Emit>
void degenerations(const StableGraph& graph, Emit&& emit) {
  const std::size_t V = graph.vertex_count();
  for (std::size_t v = 0; v < V; ++v) {
    const Vertex& vertex = graph.vertex(v);
    if (vertex.genus >= 1) {
      std::vector<Vertex> vertices = graph.vertices();
      --vertices[v].genus;
      ++vertices[v].loops;
      std::vector<int> mult(V * V);
      for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b) mult[a * V + b] = graph.multiplicity(a, b);
      emit(StableGraph(std::move(vertices), std::move(mult)));
    }

    std::vector<std::size_t> neighbours;
    for (std::size_t u = 0; u < V; ++u)
      if (graph.multiplicity(v, u) > 0) neighbours.push_back(u);
    const int s = vertex.loops;
    const std::size_t legs = vertex.legs.size();

    for (int g1 = 0; g1 <= vertex.genus; ++g1) {
      const int g2 = vertex.genus - g1;
      for (int a = 0; a <= s; ++a) {
        for (int b = 0; a + b <= s; ++b) {
          const int c = s - a - b;
          for (std::size_t mask = 0; mask < (std::size_t{1} << legs); ++mask) {
            std::vector<int> legs1, legs2;
            for (std::size_t i = 0; i < legs; ++i)
              ((mask >> i) & 1 ? legs1 : legs2).push_back(vertex.legs[i]);
            // Odometer over the share of each neighbour's edges kept by v1.
            std::vector<int> share(neighbours.size(), 0);
            while (true) {
              int t1 = 0, t2 = 0;
              for (std::size_t i = 0; i < neighbours.size(); ++i) {
                t1 += share[i];
                t2 += graph.multiplicity(v, neighbours[i]) - share[i];
              }
              const int m1 = 2 * a + static_cast<int>(legs1.size()) + t1 + 1 + c;
              const int m2 = 2 * b + static_cast<int>(legs2.size()) + t2 + 1 + c;
              if (stable(g1, m1) && stable(g2, m2)) {
                const std::size_t W = V + 1;
                std::vector<Vertex> vertices = graph.vertices();
                vertices[v] = Vertex{g1, a, legs1};
                vertices.push_back(Vertex{g2, b, legs2});
                std::vector<int> mult(W * W, 0);
                for (std::size_t x = 0; x < V; ++x)
                  for (std::size_t y = 0; y < V; ++y)
                    if (x != v && y != v) mult[x * W + y] = graph.multiplicity(x, y);
                for (std::size_t i = 0; i < neighbours.size(); ++i) {
                  std::size_t u = neighbours[i];
                  int keep = share[i];
                  int move = graph.multiplicity(v, u) - keep;
                  mult[v * W + u] = mult[u * W + v] = keep;
                  mult[V * W + u] = mult[u * W + V] = move;
                }
                mult[v * W + V] = mult[V * W + v] = 1 + c;
                emit(StableGraph(std::move(vertices), std::move(mult)));
              }
              std::size_t i = 0;
              while (i < neighbours.size() && share[i] == graph.multiplicity(v, neighbours[i])) {
                share[i] = 0;
                ++i;
              }
              if (i == neighbours.size()) break;
              ++share[i];
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<GraphEntry> enumerate_stable_graphs(int g, int n) {
  if (g < 0 || n < 0 || 2 * g + n < 3) throw DomainError("stable graphs need 2g + n >= 3");
  std::vector<int> legs(static_cast<std::size_t>(n));
  std::iota(legs.begin(), legs.end(), 1);

  std::map<CanonicalKey, GraphEntry> found;
  std::vector<StableGraph> level;
  auto admit = [&](const StableGraph& graph, std::vector<StableGraph>& next) {
    Canonical canonical = canonicalize(graph);
    if (found.count(canonical.key)) return;
    Integer aut = canonical.vertex_automorphisms * edge_symmetry_factor(canonical.graph);
    next.push_back(canonical.graph);
    found.emplace(std::move(canonical.key), GraphEntry{std::move(canonical.graph), aut});
  };
  admit(StableGraph::single_vertex(g, 0, legs), level);
  while (!level.empty()) {
    std::vector<StableGraph> next;
    for (const auto& graph : level)
      degenerations(graph, [&](const StableGraph& child) { admit(child, next); });
    level = std::move(next);
  }

  std::vector<GraphEntry> out;
  out.reserve(found.size());
  for (auto& [key, entry] : found) {
    entry.graph.validate(g, n);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace moduli::graphs
