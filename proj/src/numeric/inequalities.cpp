#include "moduli/numeric/inequalities.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <vector>

namespace moduli::numeric {

namespace {

std::vector<std::vector<int>> all_compositions(int m, int total) {
  std::vector<std::vector<int>> out;
  for_each_composition({m, total, false}, [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

}  // namespace

IntegerInequalityReport verify_composition_factorial_inequality(int m, int A, int B, int C) {
  if (m < 1 || A < 0 || B < 0 || C < 0) throw DomainError("need m >= 1 and A, B, C >= 0");
  IntegerInequalityReport report;
  long top = static_cast<long>(A) + B + C - 3L * m + 1;

  std::vector<Integer> fact(static_cast<std::size_t>(A + B + C + 1));
  for (std::size_t i = 0; i < fact.size(); ++i) fact[i] = factorial(static_cast<long>(i));

  auto as = all_compositions(m, A);
  auto bs = all_compositions(m, B);
  auto cs = all_compositions(m, C);
  Integer lhs = 0;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      for (const auto& c : cs) {
        Integer term = 1;
        for (int i = 0; i < m; ++i) {
          int s = a[i] + b[i] + c[i];
          if (s < 3) {
            term = 0;
            break;
          }
          term *= fact[static_cast<std::size_t>(s - 2)];
        }
        lhs += term;
      }
    }
  }
  report.lhs = lhs;
  if (top < 0) {
    report.vacuous = true;
    report.holds = true;
    report.rhs = 0;
    return report;
  }
  report.rhs = power(Integer(2), static_cast<unsigned long>(12 * m + 9)) * factorial(top);
  report.holds = report.lhs <= report.rhs;
  return report;
}

IntegerInequalityReport verify_multinomial_product_inequality(
    const std::vector<int>& row_totals, const std::vector<std::vector<int>>& grid) {
  if (row_totals.size() != grid.size()) throw DomainError("row totals and grid disagree in size");
  if (grid.empty()) throw DomainError("empty grid");
  std::size_t columns = grid.front().size();
  std::vector<long> column_sums(columns, 0);
  long grand = 0;
  Integer lhs = 1;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != columns) throw DomainError("ragged grid");
    std::vector<long> parts;
    long sum = 0;
    for (std::size_t j = 0; j < columns; ++j) {
      if (grid[i][j] < 0) throw DomainError("negative grid entry");
      parts.push_back(grid[i][j]);
      sum += grid[i][j];
      column_sums[j] += grid[i][j];
    }
    if (sum != row_totals[i]) throw DomainError("row " + std::to_string(i) + " is inconsistent");
    grand += sum;
    lhs *= multinomial(sum, parts);
  }
  IntegerInequalityReport report;
  report.lhs = lhs;
  report.rhs = multinomial(grand, column_sums);
  report.holds = report.lhs <= report.rhs;
  return report;
}

IntegerInequalityReport verify_multinomial_product_inequality(
    const std::vector<std::vector<int>>& grid) {
  std::vector<int> totals;
  for (const auto& row : grid) {
    int s = 0;
    for (int x : row) s += x;
    totals.push_back(s);
  }
  return verify_multinomial_product_inequality(totals, grid);
}

TaylorTailReport verify_taylor_tail_bound(const Rational& R, const Rational& delta, int K,
                                          unsigned digits) {
  if (R <= 0 || delta <= 0) throw DomainError("need R > 0 and delta > 0");
  if (Rational(K) <= (1 + 2 * delta) * R) throw DomainError("need K > (1 + 2 delta) R");
  ScopedDigits guard(digits);
  BigFloat r = to_float(R);
  BigFloat d = to_float(delta);
  BigFloat partial = 0;
  BigFloat term = 1;
  for (int j = 0; j <= K; ++j) {
    partial += term;
    term *= r / (j + 1);
  }
  BigFloat e = exp(r);
  TaylorTailReport report;
  report.lhs = abs(e - partial);
  report.rhs = e / (d * pow(1 + d, d * r));
  report.margin = report.rhs - report.lhs;
  report.holds = report.lhs < report.rhs;
  return report;
}

}  // namespace moduli::numeric
