#include "moduli/correlators/cache.hpp"

#include "moduli/numeric/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace moduli::correlators {

namespace {

constexpr const char* kHeader = "MKCACHE v1";

}  // namespace

std::optional<Rational> CorrelatorCache::find(const CorrelatorKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void CorrelatorCache::insert(const CorrelatorKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (inserted) {
    inserts_.fetch_add(1, std::memory_order_relaxed);
  } else if (it->second != value) {
    throw PipelineError("conflicting cache values for " + to_string(key));
  }
}

std::size_t CorrelatorCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

CorrelatorCache::Stats CorrelatorCache::stats() const {
  return {hits_.load(), misses_.load(), inserts_.load()};
}

std::vector<std::pair<CorrelatorKey, Rational>> CorrelatorCache::snapshot() const {
  std::vector<std::pair<CorrelatorKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(entries_.begin(), entries_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::size_t CorrelatorCache::write(std::ostream& out) const {
  std::vector<std::string> lines;
  for (const auto& [key, value] : snapshot())
    lines.push_back(to_string(key) + "|" + numeric::to_string(value));
  std::sort(lines.begin(), lines.end());
  out << kHeader << '\n';
  for (const auto& line : lines) out << line << '\n';
  return lines.size();
}

std::size_t CorrelatorCache::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("cache: missing header");
  if (line != kHeader) throw FormatError("cache: unsupported header '" + line + "'");
  std::size_t count = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw FormatError("cache line " + std::to_string(line_no) + ": " + why);
    };
    auto first = line.find('|');
    auto second = first == std::string::npos ? first : line.find('|', first + 1);
    if (second == std::string::npos) fail("expected g|d|value");
    int genus = 0;
    std::vector<int> d;
    try {
      std::size_t used = 0;
      genus = std::stoi(line.substr(0, first), &used);
      if (used != first) fail("bad genus");
      std::stringstream parts(line.substr(first + 1, second - first - 1));
      std::string item;
      while (std::getline(parts, item, ',')) {
        std::size_t item_used = 0;
        d.push_back(std::stoi(item, &item_used));
        if (item_used != item.size()) fail("bad exponent '" + item + "'");
      }
    } catch (const std::logic_error&) {
      fail("bad integer field");
    }
    Rational value;
    try {
      value = numeric::parse_rational(line.substr(second + 1));
      insert(CorrelatorKey::make(genus, d), value);
    } catch (const FormatError& e) {
      fail(e.what());
    } catch (const DomainError& e) {
      fail(e.what());
    } catch (const PipelineError& e) {
      fail(e.what());
    }
    ++count;
  }
  return count;
}

std::size_t CorrelatorCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw FormatError("cache: cannot write " + path.string());
  return write(out);
}

std::size_t CorrelatorCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cache: cannot read " + path.string());
  return read(in);
}

}  // namespace moduli::correlators
