#pragma once

#include "moduli/correlators/key.hpp"
#include "moduli/numeric/rational.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace moduli::correlators {

using numeric::Rational;

// Concurrent memo table. Entries never change once inserted.
class CorrelatorCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t inserts = 0;
  };

  std::optional<Rational> find(const CorrelatorKey& key) const;
  // Keeps the first value; a conflicting second value is a PipelineError.
  void insert(const CorrelatorKey& key, const Rational& value);

  std::size_t size() const;
  Stats stats() const;
  std::vector<std::pair<CorrelatorKey, Rational>> snapshot() const;

  // Text format: "MKCACHE v1" then sorted lines "g|d1,...,dn|p/q".
  std::size_t save(const std::filesystem::path& path) const;
  std::size_t load(const std::filesystem::path& path);
  std::size_t write(std::ostream& out) const;
  std::size_t read(std::istream& in);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CorrelatorKey, Rational, CorrelatorKeyHash> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> inserts_{0};
};

}  // namespace moduli::correlators
