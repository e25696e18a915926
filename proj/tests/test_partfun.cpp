#include <doctest.h>

#include "hilb/partfun.hpp"

using namespace hilb;

namespace {

RF q() { return RF::q(); }
RF t() { return RF::t(); }
RF one() { return RF(Rational(1)); }

}  // namespace

TEST_CASE("omega low-order terms") {
  auto o0 = omegaMaster({0, 0, 2, 0});
  CHECK(o0.coeff({0}) == one());
  CHECK(o0.coeff({1}) == one() / ((q() - one()) * (one() - t())));

  auto o1 = omegaMaster({1, 0, 1, 2});
  RF base = one() / ((q() - one()) * (one() - t()));
  CHECK(o1.coeff({1, 0}) == base);
  CHECK(o1.coeff({1, 1}) == -base);
  CHECK(o1.coeff({1, 2}) == RF());

  // one denominator variable: single box gives 1/(1-y)
  auto oy = omegaMaster({0, 1, 1, 3});
  for (int j = 0; j <= 3; ++j) CHECK(oy.coeff({1, j}) == base);
}

TEST_CASE("functional equation") {
  CHECK(verifyFunctionalEquation(0, 3, 0).pass);
  auto r1 = verifyFunctionalEquation(1, 2, 2);
  CHECK(r1.pass);
  CHECK(r1.checked > 0);
  CHECK(verifyFunctionalEquation(2, 2, 2).pass);
}

TEST_CASE("palindromic corollary") {
  CHECK(verifyPalindromic(1, 2, 2).pass);
  CHECK(verifyPalindromic(0, 3, 0).pass);
  CHECK(verifyPalindromic(2, 2, 2).pass);
}

TEST_CASE("Chern and Verlinde kernels on a slope") {
  Rational c(-2);
  auto ch = omegaChern(0, 2, c, 2);
  CHECK(ch[0].constantTerm() == Rational(1));
  CHECK(ch[1].lowestExponent() == -2);
  CHECK(ch[1].coeff(-2) == c.inverse());
  CHECK(ch[1].coeff(-1) == Rational(0));
  auto ch1 = omegaChern(1, 1, c, 2);
  CHECK(ch1[1].coeff(-2) == c.inverse());

  auto ve = omegaVerlinde(0, 1, c, 2);
  // 1/((1-e^{-s})(1-e^{-cs})) = 1/(c s^2) + (1+c)/(2c s) + ...
  CHECK(ve[1].coeff(-2) == c.inverse());
  CHECK(ve[1].coeff(-1) == (Rational(1) + c) / (Rational(2) * c));
  auto ve1 = omegaVerlinde(1, 1, c, 2);
  CHECK(ve1[1].coeff(-1) == ve[1].coeff(-1));

  auto sym = omegaChern(0, 1, UniRatFunc::c(), 1);
  CHECK(sym[1].coeff(-2) == UniRatFunc::c().inverse());
}

TEST_CASE("Verlinde kernel sees only the sum of the weights") {
  KernelSpec<Rational> a, b;
  a.tau1 = b.tau1 = Rational(1);
  a.tau2 = b.tau2 = Rational(-3);
  a.entries = {{1, Rational(1)}, {1, Rational(2)}};
  b.entries = {{1, Rational(3)}, {1, Rational(0)}};
  a.wOrder = b.wOrder = 3;
  a.sOrder = b.sOrder = 8;
  a.verlinde = b.verlinde = true;
  CHECK(slopeKernel(a) == slopeKernel(b));
  a.verlinde = b.verlinde = false;
  CHECK_FALSE(slopeKernel(a) == slopeKernel(b));
}

TEST_CASE("term-by-term limits") {
  for (const auto& lam : partitionsUpTo(3)) {
    CHECK(verifyChernLimit(lam, Rational(2), Rational(-5, 3), {}).pass);
    CHECK(verifyChernLimit(lam, Rational(2), Rational(-5, 3), {Rational(1, 2)}).pass);
    CHECK(verifyChernLimit(lam, Rational(3), Rational(7), {Rational(1), Rational(-2, 5), Rational(4)}).pass);
    CHECK(verifyVerlindeLimit(lam, {}).pass);
    CHECK(verifyVerlindeLimit(lam, {{1, 0}, {2, -1}}).pass);
  }
}

TEST_CASE("H components at z = 0 and w = 0") {
  HExpansion h(HRequest{2, 4, 3, 0, 0, 0});
  const auto& hmm = h.component(-1, -1);
  const auto& hm0 = h.component(-1, 0);
  for (int m = 1; m <= 4; ++m) {
    CHECK(hmm.coeff({m, 0}) == -pow(Rational(m), -3));
    CHECK(hm0.coeff({m, 0}) == pow(Rational(m), -2) / Rational(2));
  }
  for (int n = 0; n <= 3; ++n) CHECK(hmm.coeff({0, n}) == Rational(0));
  CHECK_THROWS_AS(h.component(0, 1), Error);
  CHECK_THROWS_AS(extractH(1, 2, 1, 2, 2), Error);
  auto single = extractH(-1, -1, 2, 4, 3);
  CHECK(single.series == hmm);
}

TEST_CASE("numeric and symbolic slopes agree") {
  HRequest req{2, 2, 2, 1, 0, 0};
  HExpansion num(req);
  HExpansion sym = HExpansion::symbolic(req);
  for (int d = -2; d <= 1; ++d)
    for (int d2 = -1; d2 <= d + 1; ++d2) CHECK(num.component(d - d2, d2) == sym.component(d - d2, d2));
}

TEST_CASE("symmetry theorem") {
  CHECK(verifySymmetryTheorem(-1, -1, 1, 3, 3).pass);
  CHECK(verifySymmetryTheorem(0, 0, 2, 3, 4).pass);
  CHECK(verifySymmetryTheorem(-1, 1, 3, 2, 4).pass);
  // without the polylogarithm correction the z^0 row is not constant
  HExpansion h(HRequest{1, 3, 3, 0, 0, 0});
  CHECK(h.component(-1, -1).coeff({1, 0}) != Rational(0));
}

TEST_CASE("regularity of the logarithm") {
  std::vector<Rational> slopes{Rational(-1), Rational(-2), Rational(-1, 2), Rational(7, 3), Rational(-5, 3)};
  CHECK(verifyLogRegularity(0, 3, slopes).pass);
  CHECK(verifyLogRegularity(1, 3, slopes).pass);
  CHECK(verifyLogRegularity(2, 3, slopes).pass);
}

TEST_CASE("degenerate slope is rejected") {
  SlopeSpec<Rational> spec;
  spec.alpha = Rational(1);
  spec.beta = Rational(1);
  spec.wOrder = 2;
  spec.sOrder = 4;
  CHECK_THROWS_AS(slopeOmega(spec), Error);
}
