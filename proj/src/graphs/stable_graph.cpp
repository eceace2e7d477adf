#include "moduli/graphs/stable_graph.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace moduli::graphs {

StableGraph::StableGraph(std::vector<Vertex> vertices, std::vector<int> multiplicity)
    : vertices_(std::move(vertices)), multiplicity_(std::move(multiplicity)) {
  const std::size_t V = vertices_.size();
  if (multiplicity_.size() != V * V) throw DomainError("multiplicity matrix has the wrong size");
  for (std::size_t u = 0; u < V; ++u) {
    if (multiplicity_[u * V + u] != 0) throw DomainError("diagonal multiplicity must be zero");
    for (std::size_t v = 0; v < V; ++v) {
      if (multiplicity_[u * V + v] != multiplicity_[v * V + u] || multiplicity_[u * V + v] < 0)
        throw DomainError("multiplicity matrix must be symmetric and nonnegative");
    }
  }
  for (auto& vertex : vertices_) std::sort(vertex.legs.begin(), vertex.legs.end());
}

StableGraph StableGraph::single_vertex(int genus, int loops, std::vector<int> legs) {
  return StableGraph({Vertex{genus, loops, std::move(legs)}}, {0});
}

int StableGraph::self_loop_total() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.loops;
  return total;
}

int StableGraph::simple_edge_total() const {
  int total = 0;
  const std::size_t V = vertex_count();
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = u + 1; v < V; ++v) total += multiplicity(u, v);
  return total;
}

int StableGraph::leg_count() const {
  int total = 0;
  for (const auto& v : vertices_) total += static_cast<int>(v.legs.size());
  return total;
}

int StableGraph::simple_degree(std::size_t v) const {
  int total = 0;
  for (std::size_t u = 0; u < vertex_count(); ++u) total += multiplicity(v, u);
  return total;
}

int StableGraph::valence(std::size_t v) const {
  return 2 * vertices_[v].loops + static_cast<int>(vertices_[v].legs.size()) + simple_degree(v);
}

int StableGraph::genus() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.genus;
  return total + edge_count() - static_cast<int>(vertex_count()) + 1;
}

bool StableGraph::is_connected() const {
  const std::size_t V = vertex_count();
  if (V == 0) return false;
  std::vector<bool> seen(V, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < V; ++v) {
      if (!seen[v] && multiplicity(u, v) > 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == V;
}

void StableGraph::validate(int g, int n) const {
  if (vertex_count() == 0) throw DomainError("graph has no vertices");
  if (!is_connected()) throw DomainError("graph is not connected");
  if (genus() != g) throw DomainError("genus condition fails");
  std::vector<int> legs;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const auto& vertex = vertices_[v];
    if (vertex.genus < 0 || vertex.loops < 0) throw DomainError("negative vertex decoration");
    if (2 * vertex.genus + valence(v) < 3) throw DomainError("unstable vertex");
    legs.insert(legs.end(), vertex.legs.begin(), vertex.legs.end());
  }
  std::sort(legs.begin(), legs.end());
  std::vector<int> expected(static_cast<std::size_t>(n));
  std::iota(expected.begin(), expected.end(), 1);
  if (legs != expected) throw DomainError("legs do not partition {1..n}");
  if (static_cast<int>(vertex_count()) > 2 * g + n - 2) throw DomainError("too many vertices");
  if (edge_count() > 3 * g + n - 3) throw DomainError("too many edges");
}

StableGraph StableGraph::relabeled(std::span<const std::size_t> order) const {
  const std::size_t V = vertex_count();
  if (order.size() != V) throw DomainError("relabeling has the wrong size");
  std::vector<Vertex> vertices;
  std::vector<int> mult(V * V);
  for (std::size_t i = 0; i < V; ++i) {
    vertices.push_back(vertices_[order[i]]);
    for (std::size_t j = 0; j < V; ++j) mult[i * V + j] = multiplicity(order[i], order[j]);
  }
  return StableGraph(std::move(vertices), std::move(mult));
}

std::string to_string(const StableGraph& graph) {
  std::string out = "V=" + std::to_string(graph.vertex_count()) +
                    ";E=" + std::to_string(graph.edge_count()) + ";vertices=[";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const auto& vertex = graph.vertex(v);
    if (v) out += ";";
    out += "(" + std::to_string(vertex.genus) + "," + std::to_string(vertex.loops) + ",legs{";
    for (std::size_t i = 0; i < vertex.legs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(vertex.legs[i]);
    }
    out += "})";
  }
  out += "];edges=[";
  bool first = true;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < graph.vertex_count(); ++v) {
      if (graph.multiplicity(u, v) == 0) continue;
      if (!first) out += ";";
      first = false;
      out += "(" + std::to_string(u) + "," + std::to_string(v) + "," +
             std::to_string(graph.multiplicity(u, v)) + ")";
    }
  }
  return out + "]";
}

Integer edge_symmetry_factor(const StableGraph& graph) {
  Integer factor = 1;
  for (const auto& vertex : graph.vertices())
    factor *= numeric::power(Integer(2), static_cast<unsigned long>(vertex.loops)) *
              numeric::factorial(vertex.loops);
  for (std::size_t u = 0; u < graph.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < graph.vertex_count(); ++v)
      factor *= numeric::factorial(graph.multiplicity(u, v));
  return factor;
}

Integer automorphism_order(const StableGraph& graph) {
  return canonicalize(graph).vertex_automorphisms * edge_symmetry_factor(graph);
}

StratumKey stratum_of(const StableGraph& graph) {
  return {static_cast<int>(graph.vertex_count()), graph.self_loop_total(), graph.simple_edge_total()};
}

std::vector<GraphStratum> stratify(std::span<const GraphEntry> graphs) {
  std::map<StratumKey, std::vector<GraphEntry>> cells;
  for (const auto& entry : graphs) cells[stratum_of(entry.graph)].push_back(entry);
  std::vector<GraphStratum> out;
  for (auto& [key, members] : cells) out.push_back({key, std::move(members)});
  return out;
}

}  // namespace moduli::graphs
