#include <doctest.h>

#include "hilb/toric.hpp"

using namespace hilb;

TEST_CASE("P2 tangent weights") {
  auto s = builtinSurface("p2");
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].t1 == LinearForm{1, 0});
  CHECK(s.points[0].t2 == LinearForm{0, 1});
  CHECK(s.points[1].t1 == LinearForm{-1, 1});
  CHECK(s.points[1].t2 == LinearForm{-1, 0});
  CHECK_THROWS_AS(builtinSurface("P3"), Error);
  CHECK_THROWS_AS(surfaceFromRays("bad", {{1, 0}, {0, 1}, {-1, 0}}), Error);
}

TEST_CASE("localization sums vanish") {
  for (const auto& name : builtinSurfaceNames()) {
    auto s = builtinSurface(name);
    std::vector<int> d(s.rays.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>(i) - 1;
    auto a = directSum(equivariantLineBundle(s, d), trivialBundle(s, 1));
    CHECK_MESSAGE(verifyVanishing(s, a).pass, name);
  }
}

TEST_CASE("Chern numbers") {
  auto p2 = builtinSurface("P2");
  auto n = chernNumbers(p2, parseBundle(p2, "O(1)"));
  CHECK(n.K2 == Rational(9));
  CHECK(n.euler == Rational(3));
  CHECK(n.chiO == Rational(1));
  CHECK(n.c1sq == Rational(1));
  CHECK(n.c1K == Rational(-3));
  CHECK(n.chiDet == Rational(3));
  CHECK(chernNumbers(p2, parseBundle(p2, "O(2)")).chiDet == Rational(6));
  CHECK(chernNumbers(p2, parseBundle(p2, "O(1)+O(1)")).c2 == Rational(1));
  CHECK(chernNumbers(p2, parseBundle(p2, "O(1)-O(-1)")).c2 == Rational(2));
  CHECK(c2BySubstitution(p2, parseBundle(p2, "O(1)-O(-1)")) == Rational(2));

  auto pp = builtinSurface("P1xP1");
  auto m = chernNumbers(pp, parseBundle(pp, "O(1,1)"));
  CHECK(m.K2 == Rational(8));
  CHECK(m.euler == Rational(4));
  CHECK(m.c1sq == Rational(2));
  CHECK(m.chiDet == Rational(4));

  for (const auto& name : builtinSurfaceNames()) {
    auto s = builtinSurface(name);
    CHECK_MESSAGE(chernNumbers(s, trivialBundle(s, 1)).chiO == Rational(1), name);
    CHECK(chernNumbers(s, trivialBundle(s, 1)).K2 == Rational(12) - chernNumbers(s, trivialBundle(s, 1)).euler);
  }
}

TEST_CASE("bundle parsing") {
  auto p2 = builtinSurface("P2");
  CHECK(parseBundle(p2, "O(1) + O[0,1,0]").rank() == 2);
  CHECK(parseBundle(p2, "O - O(1)").rank() == 0);
  CHECK_FALSE(parseBundle(p2, "O - O(1)").honest());
  CHECK_THROWS_AS(parseBundle(p2, "O(1,2)"), Error);
  CHECK_THROWS_AS(parseBundle(p2, "Q"), Error);
  CHECK_THROWS_AS(parseBundle(p2, "O[1,2]"), Error);
  auto v = parseBundle(p2, "O(1)+O(2)");
  auto w = parseBundle(p2, "O(2)");
  CHECK(chernNumbers(p2, kTheoryClass(v, w)).c1sq == Rational(1));
}

TEST_CASE("Verlinde and Chern series") {
  auto p2 = builtinSurface("P2");
  auto triv = verlindeSeries(p2, trivialBundle(p2, 0), 4);
  for (int n = 0; n <= 4; ++n) CHECK(triv.coeff({n}) == Rational(1));
  // chi(P2^[1], O(1)) = 3
  CHECK(verlindeSeries(p2, parseBundle(p2, "O(1)"), 2).coeff({1}) == Rational(3));
  // c2 of the tautological rank-2 bundle on S^[1] = S
  CHECK(chernSeries(p2, parseBundle(p2, "O(1)+O(1)"), 2).coeff({1}) == Rational(1));
  CHECK(chernSeries(p2, trivialBundle(p2, 0), 3).coeff({0}) == Rational(1));
}

TEST_CASE("specializations of the K-theoretic series") {
  auto p2 = builtinSurface("P2");
  for (const char* text : {"O", "O(1)", "O(1)+O(1)"}) {
    auto a = parseBundle(p2, text);
    int k = a.rank();
    const int N = 2;
    auto I = hilbK(p2, a, N, k * N);
    CHECK_MESSAGE(specializeVerlinde(I, k) == verlindeInvariant(p2, a, N), text);
    CHECK_MESSAGE(specializeChern(I, k) == chernSeries(p2, a, N), text);
  }
  // I^V of O is (1-w)^{-1}; of O(1) it is (1-w)^{-3}
  auto o = verlindeInvariant(p2, parseBundle(p2, "O"), 4);
  auto o1 = verlindeInvariant(p2, parseBundle(p2, "O(1)"), 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(o.coeff({n}) == Rational(1));
    CHECK(o1.coeff({n}) == binomial(Rational(n + 2), 2));
  }
  // the raw kernel is chi(det L^[n]) = binomial(chi(L), n)
  CHECK(verlindeSeries(p2, parseBundle(p2, "O(1)"), 3).coeff({3}) == Rational(1));

  auto pp = builtinSurface("P1xP1");
  auto b = parseBundle(pp, "O(1,0)+O(0,1)");
  auto Ipp = hilbK(pp, b, 2, 4);
  CHECK(specializeVerlinde(Ipp, 2) == verlindeInvariant(pp, b, 2));
  CHECK(specializeChern(Ipp, 2) == chernSeries(pp, b, 2));

  auto I = hilbK(p2, trivialBundle(p2, 1), 2, 1);
  CHECK_THROWS_AS(specializeChern(I, 1), Error);
}
