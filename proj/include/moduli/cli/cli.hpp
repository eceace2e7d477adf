#pragma once

#include "moduli/correlators/engine.hpp"
#include "moduli/correlators/key.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace moduli::cli {

enum class OutputFormat { text, json, csv };

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct RunConfig {
  std::string command;
  std::optional<IntRange> g;
  std::optional<IntRange> n;
  std::optional<IntRange> E;
  std::optional<IntRange> k;
  std::optional<IntRange> N;
  std::vector<int> d;
  double omega = 1.0;
  double epsilon = 1.0;
  unsigned precision = 60;
  std::string cache_path;
  OutputFormat format = OutputFormat::text;
  unsigned threads = 1;
  int max_dim = 12;
  std::string suite = "all";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitUsage = 64;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Rows of text cells with a header; rendered as aligned text, CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& out, OutputFormat format) const;
};

// Columns: section, g, n, value, limit, deviation.
Table report_convergence(const RunConfig& config, const correlators::CorrelatorEngine& engine);

struct VerifyLine {
  std::string suite;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct SandwichReport {
  std::size_t lower_checks = 0;
  std::size_t upper_checks = 0;
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
};

// For every key with 3g+n-3 <= max_dim and n >= 2:
//   f_{g',n'}(t) <= <d>_{g,n} for g' <= g, n' in [n, n_max], 0 <= t < g',
//   <d>_{g,n} <= F_{g,n}(t) wherever F's precondition holds.
SandwichReport walk_sandwich(const correlators::CorrelatorEngine& engine, int max_dim,
                             int n_max = 8);
// Same checks over an explicit key list, e.g. a cache snapshot.
SandwichReport walk_sandwich(const correlators::CorrelatorEngine& engine,
                             std::span<const correlators::CorrelatorKey> keys, int n_max = 8);

// Suites: correlators, walk, harmonic, graphs, volumes, svc, inequalities, all.
std::vector<VerifyLine> verify_suite(const RunConfig& config,
                                     const correlators::CorrelatorEngine& engine);

}  // namespace moduli::cli
