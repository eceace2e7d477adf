#include "oracles.hpp"

#include "moduli/correlators/cache.hpp"
#include "moduli/correlators/checks.hpp"
#include "moduli/correlators/engine.hpp"
#include "moduli/correlators/key.hpp"
#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>
#include <thread>

using namespace moduli;
using namespace moduli::correlators;
using numeric::Rational;

namespace {

using Ints = std::vector<int>;

// Random valid key with |d| <= max_dim: pick (g, n), then a uniform
// nonnegative composition of 3g+n-3.
CorrelatorKey random_key(std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> genus(0, max_dim / 3 + 1);
  while (true) {
    int g = genus(rng);
    int n_max = max_dim + 3 - 3 * g;
    if (n_max < 1) continue;
    int n = std::uniform_int_distribution<int>(1, n_max)(rng);
    if (2 * g + n < 3) continue;
    int total = 3 * g + n - 3;
    Ints d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < total; ++i) ++d[std::uniform_int_distribution<int>(0, n - 1)(rng)];
    return CorrelatorKey::make(g, d);
  }
}

}  // namespace

TEST_CASE("keys are canonical") {
  auto a = CorrelatorKey::make(1, {0, 2, 1});
  auto b = CorrelatorKey::make(1, {1, 0, 2});
  CHECK(a == b);
  CHECK(a.exponents == Ints{2, 1, 0});
  CHECK(a.degree() == 3);
  CHECK(to_string(a) == "1|2,1,0");
  CHECK(CorrelatorKeyHash{}(a) == CorrelatorKeyHash{}(b));
  CHECK(is_valid_key(0, Ints{0, 0, 0}));
  CHECK_FALSE(is_valid_key(0, Ints{0, 0}));
  CHECK_FALSE(is_valid_key(1, Ints{2}));
  CHECK_FALSE(is_valid_key(1, Ints{2, -1}));
  CHECK_THROWS_AS(CorrelatorKey::make(1, {2}), DimensionError);
  CHECK_THROWS_AS(CorrelatorKey::make(0, {}), DomainError);
  CHECK(all_keys(0).size() == 1);
}

TEST_CASE("documented values") {
  CorrelatorEngine engine;
  CHECK(engine.normalized(0, Ints{0, 0, 0}) == 1);
  CHECK(engine.normalized(1, Ints{1}) == 1);
  CHECK(engine.normalized(2, Ints{4}) == 1);
  CHECK(engine.normalized(0, Ints{1, 0, 0, 0}) == 1);
  CHECK(engine.normalized(1, Ints{1, 1}) == Rational(3, 5));
  CHECK(engine.normalized(3, Ints{7, 1}) == Rational(15, 17));
  CHECK(engine.raw(1, Ints{1}) == Rational(1, 24));
  CHECK(engine.raw(0, Ints{0, 0, 0}) == 1);
  CHECK(engine.raw(2, Ints{4}) == Rational(1, 1152));
  CHECK_THROWS_AS(engine.normalized(2, Ints{3}), DimensionError);
  CHECK_THROWS_AS(engine.normalized(0, Ints{0}), DomainError);
  CHECK(engine.value_or_zero(2, {3}) == 0);
  CHECK(engine.value_or_zero(1, {0, 2}) == engine.normalized(1, Ints{2, 0}));
}

TEST_CASE("raw values agree with the double-factorial recursion") {
  CorrelatorEngine engine;
  for (const auto& key : all_keys(10)) {
    CAPTURE(to_string(key));
    CHECK(engine.raw(key.genus, key.exponents) == oracle::raw_correlator(key.genus, key.exponents));
  }
  // Classical numbers.
  CHECK(oracle::raw_correlator(2, {2, 3}) == Rational(29, 5760));
  CHECK(oracle::raw_correlator(3, {7}) == Rational(1, 82944));
}

TEST_CASE("permutation invariance through the public interface") {
  CorrelatorEngine engine;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto key = random_key(rng, 12);
    Ints shuffled = key.exponents;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(engine.normalized(key.genus, shuffled) == engine.normalized(key));
  }
}

TEST_CASE("recursion is independent of the eliminated entry") {
  CorrelatorEngine engine;
  CHECK(engine.apply_dvv_at(1, Ints{2, 1, 0}, 2) == engine.normalized(1, Ints{2, 1, 0}));
  CHECK(engine.apply_dvv_at(1, Ints{2, 1, 0}, 0) == engine.normalized(1, Ints{2, 1, 0}));
  CHECK(engine.apply_dvv_at(3, Ints{7, 1}, 0) == engine.apply_dvv_at(3, Ints{7, 1}, 1));
  CHECK_THROWS_AS(engine.apply_dvv_at(1, Ints{2, 1, 0}, 3), DomainError);

  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 150) {
    auto key = random_key(rng, 12);
    if (key.point_count() < 2) continue;
    ++tested;
    Rational expected = engine.normalized(key);
    for (int i = 0; i < key.point_count(); ++i) {
      CAPTURE(to_string(key));
      CAPTURE(i);
      CHECK(engine.apply_dvv_at(key.genus, key.exponents, static_cast<std::size_t>(i)) == expected);
    }
  }
}

TEST_CASE("string equation against separately computed lower values") {
  CorrelatorEngine engine;
  int checked = 0;
  for (const auto& key : all_keys(11)) {
    if (key.exponents.back() != 0 || key == CorrelatorKey::make(0, {0, 0, 0})) continue;
    const int g = key.genus;
    Ints d(key.exponents.begin(), key.exponents.end() - 1);
    const int n = static_cast<int>(d.size());
    Rational rhs = 0;
    for (int j = 0; j < n; ++j) {
      Ints lower = d;
      lower[j] -= 1;
      rhs += Rational(2 * d[j] + 1) * engine.value_or_zero(g, lower);
    }
    rhs /= Rational(6 * g + 2 * n - 3);
    CAPTURE(to_string(key));
    CHECK(engine.normalized(key) == rhs);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("one-point, genus-zero and dilaton identities") {
  CorrelatorEngine engine;
  for (int g = 1; g <= 25; ++g) CHECK(engine.normalized(g, Ints{3 * g - 2}) == 1);
  for (int n = 3; n <= 18; ++n) {
    Ints d(static_cast<std::size_t>(n), 0);
    std::fill(d.begin(), d.begin() + (n - 3), 1);
    Rational expected = Rational(numeric::power(numeric::Integer(3), n - 3) * numeric::factorial(n - 3)) /
                        Rational(numeric::double_factorial(2 * n - 5));
    CHECK(engine.normalized(0, d) == expected);
    CHECK(genus_zero_closed_form(n) == expected);
  }
  CHECK(dilaton_chain(1, 1) == 1);
  CHECK(dilaton_chain(2, 2) == Rational(9, 11));
  CHECK(dilaton_chain(2, 3) == Rational(9, 11) * Rational(12, 13));
  for (int g = 1; g <= 10; ++g)
    for (int n = 1; n <= 6; ++n) {
      Ints d(static_cast<std::size_t>(n), 1);
      d[0] = 3 * g - 2;
      CHECK(engine.normalized(g, d) == dilaton_chain(g, n));
    }
}

TEST_CASE("normalization factor") {
  // 24^g g! prod(2d_i+1)!! / (2|d|+1)!!
  CHECK(normalization_factor(2, Ints{4}) == 1152);
  CHECK(normalization_factor(0, Ints{0, 0, 0}) == 1);
  CorrelatorEngine engine;
  for (const auto& key : all_keys(8))
    CHECK(engine.normalized(key) == normalization_factor(key.genus, key.exponents) *
                                        engine.raw(key.genus, key.exponents));
}

TEST_CASE("exponential bound") {
  CorrelatorEngine engine;
  auto zero = exhaustive_bound_check(engine, 0);
  CHECK(zero.keys_checked == 1);
  CHECK(zero.holds());
  auto six = exhaustive_bound_check(engine, 6);
  CHECK(six.holds());
  Rational ratio9 = Rational(numeric::power(numeric::Integer(3), 6) * numeric::factorial(6)) /
                    Rational(numeric::double_factorial(13)) * numeric::power(Rational(2, 3), 8);
  CHECK(six.max_ratio >= ratio9);
  auto twelve = exhaustive_bound_check(engine, 12);
  CHECK(twelve.holds());
  CHECK(twelve.keys_checked == all_keys(12).size());
  for (const auto& key : all_keys(12)) CHECK(engine.normalized(key) >= 0);
}

TEST_CASE("two-point bounds") {
  CorrelatorEngine engine;
  auto one = two_point_scan(engine, 1);
  CHECK(one.holds);
  CHECK(one.lower_bound == Rational(3, 5));
  CHECK(one.values.size() == 3);
  CHECK(one.values[1] == Rational(3, 5));
  CHECK(one.min_value == Rational(3, 5));
  CHECK(one.max_value == 1);
  for (int g = 2; g <= 12; ++g) CHECK(two_point_scan(engine, g).holds);
}

TEST_CASE("cache round trip and error reporting") {
  auto cache = std::make_shared<CorrelatorCache>();
  CorrelatorEngine engine(cache);
  engine.normalized(4, Ints{5, 4, 3, 1});
  CHECK(cache->size() > 10);
  CHECK(cache->stats().inserts == cache->size());

  std::stringstream buffer;
  CHECK(cache->write(buffer) == cache->size());
  CorrelatorCache copy;
  CHECK(copy.read(buffer) == cache->size());
  CHECK(copy.snapshot() == cache->snapshot());

  auto path = std::filesystem::temp_directory_path() / "moduli_cache_roundtrip.txt";
  cache->save(path);
  CorrelatorCache loaded;
  CHECK(loaded.load(path) == cache->size());
  CHECK(loaded.snapshot() == cache->snapshot());
  std::filesystem::remove(path);

  std::stringstream header_only("MKCACHE v1\n");
  CorrelatorCache empty;
  CHECK(empty.read(header_only) == 0);

  std::stringstream wrong_version("MKCACHE v0\n");
  CHECK_THROWS_AS(empty.read(wrong_version), FormatError);

  std::stringstream corrupted("MKCACHE v1\n1|1|1\n1|2,0|x\n");
  try {
    empty.read(corrupted);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  auto [first_key, first_value] = cache->snapshot().front();
  CHECK_NOTHROW(cache->insert(first_key, first_value));
  CHECK_THROWS_AS(cache->insert(first_key, first_value + 1), PipelineError);
}

TEST_CASE("shared engine is safe across threads") {
  auto cache = std::make_shared<CorrelatorCache>();
  CorrelatorEngine engine(cache);
  std::vector<Rational> results(4);
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < 4; ++t)
      workers.emplace_back([&, t] { results[t] = engine.normalized(6, Ints{6, 5, 4, 3, 2}); });
  }
  CorrelatorEngine fresh;
  for (const auto& r : results) CHECK(r == fresh.normalized(6, Ints{6, 5, 4, 3, 2}));
}
