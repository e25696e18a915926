#include <doctest.h>

#include "hilb/closedform.hpp"
#include "hilb/universal.hpp"

using namespace hilb;

namespace {

int nonzeroCount(const Series& s) {
  int n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s.at(i).isZero()) ++n;
  return n;
}

void checkSame(const Series& a, const Series& b, int order) {
  for (int n = 0; n <= order; ++n) CHECK_MESSAGE(a.at(static_cast<std::size_t>(n)) == b.at(static_cast<std::size_t>(n)), "n = " << n);
}

// coefficient of w^m z^n in a [w, z] series
Rational wz(const Series& f, int m, int n) {
  return f.at(static_cast<std::size_t>(m * (f.orders()[1] + 1) + n));
}

}  // namespace

TEST_CASE("uv substitution") {
  auto uv = uvPair(3, 3, 4);
  CHECK(wz(uv.u, 1, 1) == Rational(1));
  CHECK(wz(uv.u, 0, 1).isZero());
  CHECK(wz(uv.v, 0, 1) == Rational(1));
  for (int n = 2; n <= 4; ++n) CHECK(wz(uv.v, 0, n).isZero());
  Series y = yOf(uv);
  CHECK(wz(y, 1, 2) == Rational(1));
  CHECK(wz(y, 0, 2).isZero());
  CHECK(wz(y, 1, 1).isZero());
}

TEST_CASE("hToF examples") {
  Series y = ySeries(3);
  Series f = hToF(y, 3, 3, 6);
  CHECK(wz(f, 1, 2) == Rational(1));
  Series g = hToF(logOneMinus(y), 3, 3, 6);
  for (int n = 2; n <= 6; ++n) CHECK(wz(g, 1, n) == -Rational(n % 2 ? -1 : 1) * binomial(Rational(1), n - 2));
  CHECK(nonzeroCount(hToF(y.zeroLike(), 3, 3, 6)) == 0);
  // round trip
  Series h = logOneMinus(y) + y * y * Rational(5, 7);
  checkSame(fToH(hToF(h, 4, 3, 6), 4), h, 3);
}

TEST_CASE("regularity fit") {
  Series y = ySeries(4);
  Series f = hToF(logOneMinus(y), 3, 4, 8);
  auto p = fitRegularity(f, 3);
  REQUIRE(p.size() >= 2);
  CHECK(p[1] == UniPoly({Rational(0), Rational(1, 6), Rational(-1, 6)}));
  CHECK(p[1].eval(Rational(3)) == Rational(-1));
  CHECK(checkSymmetric(f).pass);
  CHECK(checkRegular(f, 3).pass);
  // negative control
  Series bad = f;
  bad.at(static_cast<std::size_t>(2 * 9 + 3)) += Rational(1);
  CHECK_FALSE(checkSymmetric(bad).pass);
  CHECK_THROWS_AS(fitRegularity(bad, 3), Error);
}

TEST_CASE("Chern and Verlinde limits") {
  Series y = ySeries(4);
  Series f = hToF(y, 3, 4, 12);
  Series c = chernLimit(f, 3), v = verlindeLimit(f, 3);
  CHECK(c.at(1) == Rational(1));
  CHECK(c.at(2) == Rational(2));
  CHECK(c.at(3) == Rational(8));
  CHECK(v.at(1) == Rational(-1));
  CHECK(v.at(2) == Rational(3));
  CHECK(v.at(3) == Rational(-15));
  CHECK(verifyChernVerlindeLimits(f, 3).pass);
  CHECK(verifyChernVerlindeLimits(hToF(logOneMinus(y), 4, 4, 16), 4).pass);
}

TEST_CASE("C, C', D against their h-series") {
  for (int k : {3, 4}) {
    auto c = buildCDEF(k, 3, 6);
    auto diff = [&](const Series& a, const Series& b) { return nonzeroCount(a - b); };
    CHECK_MESSAGE(diff(c.C, hToF(hOfC(k, 3), k, 3, 6)) == 0, "C k = " << k);
    CHECK_MESSAGE(diff(c.Cprime, hToF(hOfCPrime(3), k, 3, 6)) == 0, "C' k = " << k);
    CHECK_MESSAGE(diff(c.D, hToF(hOfD(k, 3), k, 3, 6)) == 0, "D k = " << k);
    Series rhs = c.D1 * Rational(-k) + c.C11 * Rational(k * k) + c.C2 * Rational(k * (k - 1) / 2);
    CHECK(diff(c.D, rhs) == 0);
    for (const Series* s : {&c.C, &c.Cprime, &c.D, &c.E, &c.F}) {
      CHECK(checkSymmetric(*s).pass);
      CHECK(checkRegular(*s, k).pass);
    }
  }
  CHECK(hOfD(3, 2).at(1) == Rational(-3));
  CHECK(bracketConstantTerm(3, 1) == Rational(2));
}

TEST_CASE("G3 closed form degenerates") {
  for (int k : {1, 2}) {
    Series g = g3OfY(k, 6);
    CHECK(g.at(0) == Rational(1));
    for (int n = 1; n <= 6; ++n) CHECK(g.at(static_cast<std::size_t>(n)).isZero());
  }
}

TEST_CASE("main theorem at k = 3") {
  const int W = 3, Z = 6;
  auto U = extractUniversal(Flavor::Full, 3, W, Z);
  CHECK(U.checked.size() >= 2);
  for (int i = 0; i <= 3; ++i) CHECK_MESSAGE(nonzeroCount(exp(U.logG[i]) - closedFormG(i, 3, W, Z)) == 0, "G" << i);
  auto fromH = logGFromH(buildCDEF(3, W, Z));
  for (int i = 0; i <= 4; ++i) CHECK_MESSAGE(nonzeroCount(fromH[static_cast<std::size_t>(i)] - U.logG[static_cast<std::size_t>(i)]) == 0, "H route " << i);
  for (int i = 0; i <= 2; ++i) {
    Series g = closedFormG(i, 3, W, Z);
    CHECK(wz(g, 0, 0) == Rational(1));
    for (int n = 1; n <= Z; ++n) CHECK(wz(g, 0, n).isZero());
  }
}

TEST_CASE("A and B series closed forms") {
  const int order = 4;
  Series y = ySeries(order);
  Series one = y.constantLike(Rational(1));
  for (int r : {2, 3}) {
    const int k = r + 1;
    const Rational R(r);
    Series omy = one - y, omry = one - y * R, omr2y = one - y * (R * R);
    auto A = extractUniversal(Flavor::Chern, k, order, 0);
    Series x = -(y * pow(omry, Rational(r - 1)));
    auto pullA = [&](int i) { return exp(composeUni(A.logG[static_cast<std::size_t>(i)], x)); };
    checkSame(pullA(0), pow(omy, Rational(r + 1)) * invert(omry), order);
    checkSame(pullA(1), omry * pow(omy, Rational(-r)), order);
    checkSame(pullA(2), pow(omry, Rational(2 * r)) * pow(omy, -R * R) * invert(omr2y), order);
    auto B = extractUniversal(Flavor::Verlinde, k, order, 0);
    Series t = -(y * pow(omy, R * R - Rational(1)));
    auto pullB = [&](int i) { return exp(composeUni(B.logG[static_cast<std::size_t>(i)], t)); };
    checkSame(pullB(1), omy, order);
    checkSame(pullB(2), pow(omy, R * R) * invert(omr2y), order);
    checkSame(pullB(3), b3Product(r, order), order);
  }
  auto B0 = extractUniversal(Flavor::Verlinde, 1, 4, 0);
  for (int i : {3, 4}) CHECK(nonzeroCount(B0.logG[static_cast<std::size_t>(i)]) == 0);
}

TEST_CASE("differential identities") {
  auto rep = verifyDifferentialIdentities(3, 3, 3);
  CHECK_MESSAGE(rep.pass, rep.firstDiscrepancy);
  auto rep1 = verifyDifferentialIdentities(1, 2, 4);
  CHECK_MESSAGE(rep1.pass, rep1.firstDiscrepancy);
}

TEST_CASE("symmetric regular universal series") {
  auto U = extractUniversal(Flavor::Full, 3, 3, 9);
  for (const Series& f : {U.logG[0] + U.logG[1], U.logG[3], U.logG[4]}) {
    CHECK(checkSymmetric(f).pass);
    CHECK(checkRegular(f, 3).pass);
    auto rep = verifyChernVerlindeLimits(f, 3);
    CHECK_MESSAGE(rep.pass, rep.firstDiscrepancy);
  }
}

TEST_CASE("Segre-Verlinde correspondence at k = 3") {
  auto rep = verifySegreVerlinde(3, 3);
  CHECK_MESSAGE(rep.pass, rep.firstDiscrepancy);
  CHECK_THROWS_AS(verifySegreVerlinde(2, 3), Error);
  auto m = verifyMainTheorem(3, 2, 4);
  CHECK_MESSAGE(m.pass, m.firstDiscrepancy);
}
