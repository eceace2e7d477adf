#include "moduli/numeric/bernoulli.hpp"

#include "moduli/numeric/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace moduli::numeric {

namespace {

std::mutex table_mutex;
std::vector<Rational>& table() {
  static std::vector<Rational> values{Rational(1)};
  return values;
}

}  // namespace

Rational bernoulli(unsigned m) {
  std::lock_guard lock(table_mutex);
  auto& values = table();
  // sum_{k=0}^{j} C(j+1, k) B_k = 0
  for (unsigned j = static_cast<unsigned>(values.size()); j <= m; ++j) {
    Rational sum = 0;
    for (unsigned k = 0; k < j; ++k) sum += Rational(binomial(j + 1, k)) * values[k];
    Rational b = -sum / Rational(j + 1);
    b.canonicalize();
    values.push_back(b);
  }
  return values[m];
}

}  // namespace moduli::numeric
