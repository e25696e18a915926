#pragma once

#include <vector>

#include "hilb/report.hpp"
#include "hilb/ring/laurent.hpp"
#include "hilb/universal.hpp"

namespace hilb {

// exp(sum_n u^n/n [y^0] F^n) for F = y^{-m} + ..., in [u] through u^order.
// Equals (product of the m branches of the inverse of 1/F) / u.
Series lagrangeExpLog(const LaurentSeries<Rational>& F, int order);

// Branches alpha_i(y), i = 1..r-1, of the inverse of
// f(x) = x^{r-1} / (1 + x + ... + x^{r-1})^2 through their power sums.
struct BranchSystem {
  int r = 2;
  Series g;                       // inverse of f^{1/(r-1)} in [s]
  std::vector<Series> powerSums;  // P_0 .. P_jMax in [y]
};
BranchSystem branchPowerSums(int r, int jMax, int yOrder);
// prod alpha_i from the power sums by Newton's identities, in [y].
Series branchProduct(const BranchSystem& b);

// B_3 (equivalently G_3) as a series in y from the branch product.
Series b3Product(int r, int yOrder);

struct BinomialTriple {
  Rational alpha, beta, gamma;
};
BinomialTriple binomialTriples(int n, int r);
// 4 r alpha_n - r^2 - 3 r^{2n} - 2n beta_n - 2n r^2 gamma_n
Rational b4Exponent(int n, int r);

// B_4(-y(1-y)^{r^2-1}) as a series in y.
Series b4Binomial(int r, int yOrder);
// G_4 from the conjectured product over branches, in y.
Series b4Conjecture(int r, int yOrder);

// Localization side: B_3, B_4 from the Verlinde extraction at rank r+1,
// pulled back along t = -y(1-y)^{r^2-1}.
Series b3Localization(int r, int yOrder);
Series b4Localization(int r, int yOrder);

Report verifyBConjecture(int r, int order);

}  // namespace hilb
