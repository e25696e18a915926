#include <doctest.h>

#include <random>

#include "hilb/closedform.hpp"

using namespace hilb;

namespace {

Series poly(std::vector<Rational> c, int order, const std::string& var = "y") {
  Series s({var}, {order});
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s.at(i) = c[i];
  return s;
}

void checkSame(const Series& a, const Series& b, int order) {
  for (int n = 0; n <= order; ++n) CHECK_MESSAGE(a.at(static_cast<std::size_t>(n)) == b.at(static_cast<std::size_t>(n)), "n = " << n);
}

}  // namespace

TEST_CASE("lagrangeExpLog trivial cases") {
  std::vector<Rational> c(20, Rational(0));
  c[0] = Rational(1);
  auto one = lagrangeExpLog(LaurentSeries<Rational>(-1, c), 6);
  CHECK(one.at(0) == Rational(1));
  for (int n = 1; n <= 6; ++n) CHECK(one.at(static_cast<std::size_t>(n)).isZero());
  auto two = lagrangeExpLog(LaurentSeries<Rational>(-2, c), 6);
  CHECK(two.at(0) == Rational(1));
  for (int n = 1; n <= 6; ++n) CHECK(two.at(static_cast<std::size_t>(n)).isZero());
  CHECK_THROWS_AS(lagrangeExpLog(LaurentSeries<Rational>(0, {Rational(1)}), 3), Error);
}

TEST_CASE("lagrangeExpLog against the compositional inverse") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(-3, 3);
  const int order = 8;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{Rational(1)};
    for (int i = 1; i <= order + 1; ++i) c.push_back(Rational(dist(rng), 1 + (i % 3)));
    auto lhs = lagrangeExpLog(LaurentSeries<Rational>(-1, c), order);
    // 1/F = y / (1 + c_1 y + ...)
    Series tail = poly(c, order + 1);
    Series y = Series::variable({"y"}, {order + 1}, 0);
    Series g = compositionalInverse(y * invert(tail));
    for (int n = 0; n <= order; ++n) CHECK(lhs.at(static_cast<std::size_t>(n)) == g.at(static_cast<std::size_t>(n + 1)));
  }
}

TEST_CASE("branch power sums") {
  // r = 2: the single branch inverts x/(1+x)^2
  auto b2 = branchPowerSums(2, 3, 5);
  std::vector<long> catalan{0, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) CHECK(b2.powerSums[1].at(static_cast<std::size_t>(n)) == Rational(catalan[static_cast<std::size_t>(n)]));
  // r = 3: f(g(s)) = s^2 with f(x) = x^2/(1+x+x^2)^2
  auto b3 = branchPowerSums(3, 4, 4);
  Series x = b3.g;
  Series one = x.constantLike(Rational(1));
  Series f = x * x * pow(one + x + x * x, Rational(-2));
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(f.at(n) == Rational(n == 2 ? 1 : 0));
  for (const auto& b : {b2, b3})
    for (std::size_t j = 1; j < b.powerSums.size(); ++j) CHECK(b.powerSums[j].at(0).isZero());
  CHECK_THROWS_AS(branchPowerSums(1, 2, 3), Error);
}

TEST_CASE("b3Product squares back to the branch product") {
  const int order = 6;
  for (int r = 2; r <= 5; ++r) {
    auto b = branchPowerSums(r, r - 1, order + 1);
    Series prod = branchProduct(b) * Rational(r % 2 ? -1 : 1);
    Series y = ySeries(order + 1);
    Series b3 = b3Product(r, order + 1);
    Series lhs = b3 * b3 * pow(y.constantLike(Rational(1)) - y, Rational(r)) * prod;
    for (int n = 0; n <= order + 1; ++n) CHECK_MESSAGE(lhs.at(static_cast<std::size_t>(n)) == Rational(n == 1 ? 1 : 0), "r = " << r << " n = " << n);
  }
}

TEST_CASE("b3Product closed forms") {
  const int order = 8;
  Series y = ySeries(order);
  Series one = y.constantLike(Rational(1));
  // r = 2: (1 + sqrt(1-4y)) / (2(1-y))
  Series expect = (one + pow(one - y * Rational(4), Rational(1, 2))) * Rational(1, 2) * invert(one - y);
  checkSame(b3Product(2, order), expect, order);
  checkSame(b3Product(1, order), one, order);
  checkSame(b3Product(0, order), one, order);
  for (int r = 2; r <= 3; ++r) checkSame(b3Product(r, order), g3OfY(r + 1, order), order);
}

TEST_CASE("binomial triples") {
  CHECK(binomialTriples(1, 2).gamma.isZero());
  CHECK(binomialTriples(1, 5).beta.isZero());
  for (int r = 0; r <= 1; ++r)
    for (int n = 1; n <= 10; ++n) CHECK_MESSAGE(b4Exponent(n, r).isZero(), "r = " << r << " n = " << n);
  CHECK_THROWS_AS(binomialTriples(0, 2), Error);
}

TEST_CASE("B4 binomial formula against the branch product") {
  for (int r = 0; r <= 4; ++r) {
    auto rep = verifyBConjecture(r, r <= 3 ? 8 : 6);
    CHECK_MESSAGE(rep.pass, rep.firstDiscrepancy);
  }
  Series b = b4Binomial(2, 6);
  CHECK(b.at(0) == Rational(1));
  CHECK(b.at(2) == Rational(-1, 2));
  CHECK(b.at(3) == Rational(-5, 2));
  CHECK(b.at(4) == Rational(-81, 8));
}

TEST_CASE("B3 and B4 against localization") {
  const int order = 5;
  checkSame(b3Localization(2, order), b3Product(2, order), order);
  checkSame(b4Localization(2, order), b4Binomial(2, order), order);
  checkSame(b4Localization(3, 4), b4Conjecture(3, 4), 4);
}
