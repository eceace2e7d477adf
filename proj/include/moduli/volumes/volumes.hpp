#pragma once

#include "moduli/correlators/engine.hpp"
#include "moduli/graphs/stable_graph.hpp"
#include "moduli/numeric/pi_value.hpp"

#include <map>
#include <mutex>
#include <span>
#include <vector>

namespace moduli::volumes {

using correlators::CorrelatorEngine;
using graphs::StableGraph;
using graphs::StratumKey;
using numeric::Integer;
using numeric::PiValue;
using numeric::Rational;

// Sparse polynomial in one variable per edge.
class EdgePolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit EdgePolynomial(std::size_t variables = 0) : variables_(variables) {}
  static EdgePolynomial constant(std::size_t variables, const Rational& c);
  static EdgePolynomial variable(std::size_t variables, std::size_t index);

  std::size_t variable_count() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& exponents) const;

  void add_term(const Exponents& exponents, const Rational& c);

  EdgePolynomial& operator*=(const EdgePolynomial& other);
  EdgePolynomial& operator*=(const Rational& scalar);
  friend EdgePolynomial operator*(EdgePolynomial a, const EdgePolynomial& b) { return a *= b; }
  friend bool operator==(const EdgePolynomial&, const EdgePolynomial&) = default;

 private:
  std::size_t variables_;
  std::map<Exponents, Rational> terms_;
};

inline constexpr int kZeroSlot = -1;

// N_{g,m}(b) with slot i bound to edge variable slots[i], or to 0 when
// slots[i] == kZeroSlot.
EdgePolynomial n_polynomial_value(const CorrelatorEngine& engine, int genus,
                                  std::span<const int> slots, std::size_t variable_count);

// Edge variables: the self-loops of vertex 0, 1, ... first, then the simple
// edges of each pair u < v in order.
std::size_t edge_variable_count(const StableGraph& graph);

// P(Gamma) for a graph of G_{g,n} with |Aut| = automorphisms.
EdgePolynomial graph_polynomial(const CorrelatorEngine& engine, const StableGraph& graph,
                                const Integer& automorphisms);

// Z(prod b_j^{r_j}) = prod r_j! zeta(r_j + 1); an even positive exponent is a
// PipelineError.
PiValue zeta_map(const EdgePolynomial& polynomial);

struct VolumeOptions {
  unsigned threads = 1;
};

struct VolumeBreakdown {
  int g = 0;
  int n = 0;
  PiValue total;
  std::map<StratumKey, PiValue> strata;
  std::map<int, PiValue> by_vertices;
  std::size_t graph_count = 0;
};

// Requires 2g + n >= 3 and (g, n) != (0, 3).
VolumeBreakdown volume_breakdown(const CorrelatorEngine& engine, int g, int n,
                                 const VolumeOptions& options = {});
PiValue volume(const CorrelatorEngine& engine, int g, int n, const VolumeOptions& options = {});

// Single vertex of genus g - E with E self-loops and all n legs.
StableGraph one_vertex_graph(int g, int n, int E);
// Z(P(Gamma_{g,n}(E))) by the generic pipeline.
PiValue one_vertex_pipeline(const CorrelatorEngine& engine, int g, int n, int E);
// Closed form for g >= 2; falls back to the pipeline for g < 2.
PiValue one_vertex_closed_form(const CorrelatorEngine& engine, int g, int n, int E);

// (pi/4) 2^{-n} (8/3)^{4-4g-n} Vol Q_{g,n}
PiValue normalized_ratio_exact(const PiValue& volume, int g, int n);
numeric::BigFloat normalized_ratio(const PiValue& volume, int g, int n, unsigned digits);

// Memoizing front end shared by the Siegel-Veech code and the CLI.
class VolumeCalculator {
 public:
  explicit VolumeCalculator(const CorrelatorEngine& engine, VolumeOptions options = {})
      : engine_(engine), options_(options) {}

  const VolumeBreakdown& breakdown(int g, int n);
  const PiValue& volume(int g, int n) { return breakdown(g, n).total; }
  const CorrelatorEngine& engine() const { return engine_; }

 private:
  const CorrelatorEngine& engine_;
  VolumeOptions options_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, VolumeBreakdown> memo_;
};

}  // namespace moduli::volumes
