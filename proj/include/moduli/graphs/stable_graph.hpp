#pragma once

#include "moduli/numeric/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace moduli::graphs {

using numeric::Integer;

struct Vertex {
  int genus = 0;
  int loops = 0;
  std::vector<int> legs;  // sorted labels in 1..n

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Connected multigraph with genus-decorated vertices, self-loops counted per
// vertex and simple-edge multiplicities stored as a symmetric matrix.
class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<Vertex> vertices, std::vector<int> multiplicity);

  static StableGraph single_vertex(int genus, int loops, std::vector<int> legs);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  int multiplicity(std::size_t u, std::size_t v) const { return multiplicity_[u * vertex_count() + v]; }

  int self_loop_total() const;
  int simple_edge_total() const;
  int edge_count() const { return self_loop_total() + simple_edge_total(); }
  int leg_count() const;
  // T_v: simple edges at v, with multiplicity.
  int simple_degree(std::size_t v) const;
  // m_v = 2 s_v + n_v + T_v
  int valence(std::size_t v) const;
  // sum g_v + E - V + 1
  int genus() const;
  bool is_connected() const;

  // Throws DomainError naming the first broken condition.
  void validate(int g, int n) const;

  // Vertex i of the result is vertex order[i] of this graph.
  StableGraph relabeled(std::span<const std::size_t> order) const;

  friend bool operator==(const StableGraph&, const StableGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<int> multiplicity_;
};

// V=..;E=..;vertices=[(g,s,legs{..});..];edges=[(u,v,mult);..]
std::string to_string(const StableGraph& graph);

struct CanonicalKey {
  std::vector<int> code;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct Canonical {
  StableGraph graph;  // relabeled into canonical vertex order
  CanonicalKey key;
  Integer vertex_automorphisms;
};

// Individualization-refinement search over vertex orderings; the key is the
// least serialization over all leaves.
Canonical canonicalize(const StableGraph& graph);
CanonicalKey canonical_form(const StableGraph& graph);

// |Aut| = |vertex automorphisms| * prod 2^{s_v} s_v! * prod t_uv!
Integer automorphism_order(const StableGraph& graph);
Integer edge_symmetry_factor(const StableGraph& graph);

struct GraphEntry {
  StableGraph graph;
  Integer automorphisms;
};

// One representative per isomorphism class, in canonical key order.
std::vector<GraphEntry> enumerate_stable_graphs(int g, int n);

struct StratumKey {
  int V = 0;
  int S = 0;
  int T = 0;
  friend auto operator<=>(const StratumKey&, const StratumKey&) = default;
  friend bool operator==(const StratumKey&, const StratumKey&) = default;
};

StratumKey stratum_of(const StableGraph& graph);

struct GraphStratum {
  StratumKey key;
  std::vector<GraphEntry> graphs;
};

std::vector<GraphStratum> stratify(std::span<const GraphEntry> graphs);

}  // namespace moduli::graphs
