#include <doctest.h>

#include <algorithm>

#include "hilb/partition.hpp"

using namespace hilb;
using Poly = MultiPoly<Rational>;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
long pentagonalCount(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sgn = (k % 2) ? 1 : -1;
      p[m] += sgn * p[m - g1];
      if (g2 <= m) p[m] += sgn * p[m - g2];
    }
  return p[n];
}

Poly swapQT(const Poly& p) {
  return p.transform([](const Exponent& e) { return Exponent{e[1], e[0]}; }, [](const Rational& c) { return c; });
}

Poly qt(std::initializer_list<std::tuple<long, int, int>> terms) {
  Poly p(RationalFunction::vars());
  for (auto [c, a, b] : terms) p.addTerm({a, b}, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(partitionsOf(0).size() == 1);
  CHECK(partitionsOf(0)[0].empty());
  auto p4 = partitionsOf(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].toString() == "[4]");
  CHECK(p4[1].toString() == "[3,1]");
  CHECK(p4[2].toString() == "[2,2]");
  CHECK(p4[3].toString() == "[2,1,1]");
  CHECK(p4[4].toString() == "[1,1,1,1]");
  for (int n = 0; n <= 20; ++n) CHECK(static_cast<long>(partitionsOf(n).size()) == pentagonalCount(n));
  CHECK(partitionsOf(10).size() == 42);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("box statistics") {
  auto b1 = Partition({1}).boxes();
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == BoxStats{0, 0, 0, 0});
  auto b21 = Partition({2, 1}).boxes();
  std::sort(b21.begin(), b21.end());
  std::vector<BoxStats> expect{{0, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  CHECK(b21 == expect);
  auto b31 = Partition({3, 1}).boxes();
  CHECK(b31[0] == BoxStats{0, 0, 2, 1});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitionsOf(n)) {
      auto a = p.boxes(), c = p.conjugate().boxes();
      std::vector<BoxStats> swapped;
      for (const auto& b : a) swapped.push_back({b.r, b.c, b.l, b.a});
      std::sort(swapped.begin(), swapped.end());
      std::sort(c.begin(), c.end());
      CHECK(swapped == c);
    }
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitionsOf(n)) {
      long sa = 0, sc = 0, sl = 0, sr = 0;
      for (const auto& b : p.boxes()) { sa += b.a; sc += b.c; sl += b.l; sr += b.r; }
      CHECK(sa == sc);
      CHECK(sl == sr);
    }
}

TEST_CASE("statistic polynomials") {
  Partition one({1}), p21({2, 1});
  CHECK(statN(one) == qt({{1, 1, 0}, {-1, 1, 1}, {-1, 0, 0}, {1, 0, 1}}));
  CHECK(statB(one) == qt({{1, 0, 0}}));
  CHECK(statT(one) == qt({{1, 0, 0}}));
  CHECK(statD(one) == qt({{-1, 1, 0}, {-1, 0, 1}, {1, 1, 1}}));
  CHECK(statB(p21) == qt({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(statT(p21) == qt({{1, 1, 1}}));
  Poly n21 = qt({{1, 2, 0}, {-1, 0, 1}}) * qt({{1, 1, 0}, {-1, 0, 2}}) * qt({{1, 1, 0}, {-1, 0, 0}}).pow(2) * qt({{1, 0, 0}, {-1, 0, 1}}).pow(2);
  CHECK(statN(p21) == n21);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitionsOf(n)) {
      Partition c = p.conjugate();
      CHECK(statN(p) == swapQT(statN(c)));
      CHECK(statT(p) == swapQT(statT(c)));
      CHECK(statB(p) == swapQT(statB(c)));
      CHECK(!statN(p).zero());
    }
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : partitionsOf(n))
      CHECK(statNInverse(p) * RationalFunction(statN(p)) == RationalFunction(Rational(1)));
}
