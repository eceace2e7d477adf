#pragma once

#include "moduli/numeric/bigfloat.hpp"
#include "moduli/numeric/rational.hpp"

#include <vector>

namespace moduli::numeric {

struct IntegerInequalityReport {
  Integer lhs;
  Integer rhs;
  bool holds = false;
  bool vacuous = false;
};

// sum over triples of K_m(A) x K_m(B) x K_m(C) with a_i+b_i+c_i >= 3 of
// prod (a_i+b_i+c_i-2)!  <=  2^{12m+9} (A+B+C-3m+1)!
IntegerInequalityReport verify_composition_factorial_inequality(int m, int A, int B, int C);

// prod_i multinomial(A_i; A_i1..A_ir) <= multinomial(sum A_i; column sums).
// Row totals are taken from the grid.
IntegerInequalityReport verify_multinomial_product_inequality(
    const std::vector<std::vector<int>>& grid);
// Explicit row totals; a mismatch with the grid is a DomainError.
IntegerInequalityReport verify_multinomial_product_inequality(
    const std::vector<int>& row_totals, const std::vector<std::vector<int>>& grid);

struct TaylorTailReport {
  BigFloat lhs;
  BigFloat rhs;
  BigFloat margin;  // rhs - lhs
  bool holds = false;
};

// |e^R - sum_{j<=K} R^j/j!| < delta^{-1} (1+delta)^{-delta R} e^R,
// requires R > 0, delta > 0 and K > (1 + 2 delta) R.
TaylorTailReport verify_taylor_tail_bound(const Rational& R, const Rational& delta, int K,
                                          unsigned digits);

}  // namespace moduli::numeric
