#include "moduli/graphs/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace moduli::graphs {

namespace {

using Colouring = std::vector<int>;

int class_count(const Colouring& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Replaces colours by ranks of (colour, sorted neighbour colour/multiplicity
// pairs) until the partition stops splitting.
void refine(const StableGraph& graph, Colouring& colour) {
  const std::size_t V = graph.vertex_count();
  int classes = class_count(colour);
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> signature(V);
    for (std::size_t v = 0; v < V; ++v) {
      signature[v].first = colour[v];
      for (std::size_t u = 0; u < V; ++u)
        if (u != v && graph.multiplicity(u, v) > 0)
          signature[v].second.emplace_back(colour[u], graph.multiplicity(u, v));
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::vector<Signature> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < V; ++v)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                   distinct.begin());
    int next = static_cast<int>(distinct.size());
    if (next == classes) return;
    classes = next;
  }
}

std::vector<int> serialize(const StableGraph& graph, const std::vector<std::size_t>& order) {
  const std::size_t V = graph.vertex_count();
  std::vector<int> code{static_cast<int>(V)};
  for (std::size_t i = 0; i < V; ++i) {
    const auto& vertex = graph.vertex(order[i]);
    code.push_back(vertex.genus);
    code.push_back(vertex.loops);
    code.push_back(static_cast<int>(vertex.legs.size()));
    code.insert(code.end(), vertex.legs.begin(), vertex.legs.end());
  }
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = i + 1; j < V; ++j) code.push_back(graph.multiplicity(order[i], order[j]));
  return code;
}

struct Search {
  const StableGraph& graph;
  std::vector<int> best;
  std::vector<std::size_t> best_order;
  Integer matches = 0;

  void run(Colouring colour) {
    refine(graph, colour);
    const std::size_t V = graph.vertex_count();
    if (class_count(colour) == static_cast<int>(V)) {
      std::vector<std::size_t> order(V);
      for (std::size_t v = 0; v < V; ++v) order[static_cast<std::size_t>(colour[v])] = v;
      std::vector<int> code = serialize(graph, order);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_order = std::move(order);
        matches = 1;
      } else if (code == best) {
        ++matches;
      }
      return;
    }
    // First non-singleton class.
    std::vector<int> size(V, 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t v = 0; v < V; ++v) {
      if (colour[v] != target) continue;
      Colouring next = colour;
      for (std::size_t u = 0; u < V; ++u) {
        if (colour[u] > target || (colour[u] == target && u != v)) ++next[u];
      }
      run(std::move(next));
    }
  }
};

}  // namespace

Canonical canonicalize(const StableGraph& graph) {
  const std::size_t V = graph.vertex_count();
  std::vector<Vertex> labels = graph.vertices();
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  Colouring colour(V);
  for (std::size_t v = 0; v < V; ++v)
    colour[v] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), graph.vertex(v)) -
                                 labels.begin());
  Search search{graph, {}, {}, 0};
  search.run(std::move(colour));
  return Canonical{graph.relabeled(search.best_order), CanonicalKey{std::move(search.best)},
                   search.matches};
}

CanonicalKey canonical_form(const StableGraph& graph) { return canonicalize(graph).key; }

}  // namespace moduli::graphs
