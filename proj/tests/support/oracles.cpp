#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

using moduli::graphs::StableGraph;
using moduli::graphs::Vertex;

namespace {

Integer odd_factorial(int n) {  // (2n+1)!! with (-1)!! = 1
  Integer out = 1;
  for (int k = 2 * n + 1; k > 1; k -= 2) out *= k;
  return out;
}

Rational raw_sorted(int g, std::vector<int> d, std::map<std::pair<int, std::vector<int>>, Rational>& memo) {
  std::sort(d.begin(), d.end());
  const int n = static_cast<int>(d.size());
  if (g < 0 || n == 0 || 2 * g - 2 + n <= 0) return 0;
  if (d.front() < 0) return 0;
  int sum = std::accumulate(d.begin(), d.end(), 0);
  if (sum != 3 * g - 3 + n) return 0;
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);
  auto key = std::pair{g, d};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Recurse on the largest exponent, written k+1 with k >= -1.
  const int k = d.back() - 1;
  std::vector<int> rest(d.begin(), d.end() - 1);
  Rational total = 0;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> next = rest;
    next[j] += k;
    if (next[j] < 0) continue;
    total += Rational(odd_factorial(k + rest[j])) / Rational(odd_factorial(rest[j] - 1)) *
             raw_sorted(g, next, memo);
  }
  Rational split = 0;
  for (int a = 0; a <= k - 1; ++a) {
    const int b = k - 1 - a;
    Integer weight = odd_factorial(a) * odd_factorial(b);
    std::vector<int> both = rest;
    both.push_back(a);
    both.push_back(b);
    split += Rational(weight) * raw_sorted(g - 1, both, memo);
    const std::size_t m = rest.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> I{a}, J{b};
      for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? I : J).push_back(rest[i]);
      for (int g1 = 0; g1 <= g; ++g1) {
        Rational left = raw_sorted(g1, I, memo);
        if (left == 0) continue;
        split += Rational(weight) * left * raw_sorted(g - g1, J, memo);
      }
    }
  }
  total += split / 2;
  total /= Rational(odd_factorial(k + 1));
  memo.emplace(key, total);
  return total;
}

}  // namespace

Rational raw_correlator(int g, std::vector<int> d) {
  static std::map<std::pair<int, std::vector<int>>, Rational> memo;
  return raw_sorted(g, std::move(d), memo);
}

Integer pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

Rational bernoulli(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  // The transform yields B_1 = +1/2.
  return n == 1 ? Rational(-1, 2) : a[0];
}

std::vector<std::vector<int>> compositions(int length, int total, bool positive) {
  std::vector<std::vector<int>> out;
  if (length == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    int s = std::accumulate(digits.begin(), digits.end(), 0);
    bool ok = s == total && (!positive || std::all_of(digits.begin(), digits.end(), [](int x) { return x > 0; }));
    if (ok) out.push_back(digits);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == total) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const StableGraph& a, const StableGraph& b) {
  const std::size_t V = a.vertex_count();
  if (V != b.vertex_count()) return false;
  std::vector<std::size_t> p(V);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < V && ok; ++u) {
      ok = a.vertex(u) == b.vertex(p[u]);
      for (std::size_t v = 0; v < V && ok; ++v) ok = a.multiplicity(u, v) == b.multiplicity(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Integer vertex_automorphisms(const StableGraph& graph) {
  const std::size_t V = graph.vertex_count();
  std::vector<std::size_t> p(V);
  std::iota(p.begin(), p.end(), 0);
  Integer count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < V && ok; ++u) {
      ok = graph.vertex(u) == graph.vertex(p[u]);
      for (std::size_t v = 0; v < V && ok; ++v)
        ok = graph.multiplicity(u, v) == graph.multiplicity(p[u], p[v]);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

namespace {

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Loops: each can be flipped and loops at a vertex permuted. Parallel
// edges between two vertices can be permuted.
Integer edge_symmetries(const StableGraph& graph) {
  Integer out = 1;
  const std::size_t V = graph.vertex_count();
  for (std::size_t u = 0; u < V; ++u) {
    int loops = graph.vertex(u).loops;
    out *= factorial(loops);
    for (int i = 0; i < loops; ++i) out *= 2;
    for (std::size_t v = u + 1; v < V; ++v) out *= factorial(graph.multiplicity(u, v));
  }
  return out;
}

bool connected(int V, const std::vector<int>& mult) {
  std::vector<bool> seen(static_cast<std::size_t>(V), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < V; ++v)
      if (!seen[v] && mult[u * V + v] > 0) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace

std::vector<StableGraph> stable_graphs_labeled(int g, int n) {
  std::vector<StableGraph> out;
  const int max_edges = 3 * g - 3 + n;
  for (int V = 1; V <= std::max(1, 2 * g - 2 + n); ++V) {
    // Cells: V diagonal loop counts, then the upper triangle.
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < V; ++u) cells.emplace_back(u, u);
    for (int u = 0; u < V; ++u)
      for (int v = u + 1; v < V; ++v) cells.emplace_back(u, v);

    for (int E = V - 1; E <= max_edges; ++E) {
      // h^1 = E - V + 1, so the vertex genera sum to g - E + V - 1.
      const int genus_total = g - E + V - 1;
      if (genus_total < 0) continue;
      for (const auto& edges : compositions(static_cast<int>(cells.size()), E, false)) {
        std::vector<int> mult(static_cast<std::size_t>(V * V), 0);
        std::vector<int> loops(static_cast<std::size_t>(V), 0);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          auto [u, v] = cells[c];
          if (u == v) loops[u] = edges[c];
          else mult[u * V + v] = mult[v * V + u] = edges[c];
        }
        if (!connected(V, mult)) continue;
        for (const auto& genera : compositions(V, genus_total, false)) {
          // Leg i goes to vertex owner[i].
          std::vector<int> owner(static_cast<std::size_t>(n), 0);
          while (true) {
            std::vector<Vertex> vertices(static_cast<std::size_t>(V));
            for (int u = 0; u < V; ++u) vertices[u] = Vertex{genera[u], loops[u], {}};
            for (int i = 0; i < n; ++i) vertices[owner[i]].legs.push_back(i + 1);
            bool stable = true;
            for (int u = 0; u < V && stable; ++u) {
              int valence = 2 * loops[u] + static_cast<int>(vertices[u].legs.size());
              for (int v = 0; v < V; ++v) valence += mult[u * V + v];
              stable = 2 * genera[u] - 2 + valence > 0;
            }
            if (stable) out.emplace_back(vertices, mult);
            int i = 0;
            while (i < n && owner[i] == V - 1) owner[i++] = 0;
            if (i == n) break;
            ++owner[i];
          }
        }
      }
    }
  }
  return out;
}

std::vector<LabeledGraph> stable_graphs_direct(int g, int n) {
  std::vector<LabeledGraph> classes;
  for (auto& graph : stable_graphs_labeled(g, n)) {
    bool seen = std::any_of(classes.begin(), classes.end(),
                            [&](const LabeledGraph& c) { return isomorphic(c.graph, graph); });
    if (seen) continue;
    Integer aut = vertex_automorphisms(graph) * edge_symmetries(graph);
    classes.push_back({std::move(graph), aut});
  }
  return classes;
}

}  // namespace oracle
