// One line per acceptance criterion; exit status is nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "hilb/closedform.hpp"
#include "hilb/macdonald.hpp"
#include "hilb/partfun.hpp"
#include "hilb/partition.hpp"
#include "hilb/toric.hpp"
#include "hilb/universal.hpp"

using namespace hilb;

namespace {

Report macdonaldSuite() {
  Report rep("macdonald", {});
  for (int n = 1; n <= 4; ++n) rep.merge(verifyCauchy(n));
  auto small = partitionsUpTo(3);
  for (const auto& mu : small) rep.merge(verifyGarsiaTesler(mu, 3));
  for (const auto& mu : small)
    for (const auto& nu : small) rep.merge(verifyKoornwinder(mu, nu));
  for (const auto& mu : partitionsUpTo(5))
    if (!mu.empty()) rep.merge(verifyProductSpecialization(mu));
  return rep;
}

Report functionalEquation() {
  Report rep("omega", {});
  for (int k = 0; k <= 2; ++k) {
    const int z = k == 0 ? 0 : 3;
    rep.merge(verifyFunctionalEquation(k, 3, z));
    rep.merge(verifyPalindromic(k, 3, z));
  }
  return rep;
}

Report symmetry() {
  Report rep("symmetry", {});
  for (int k = 1; k <= 3; ++k) {
    HExpansion h(HRequest{k, 4, 4, 1, 0, 0});
    for (int d1 = -1; d1 <= 1; ++d1)
      for (int d2 = -1; d2 <= 1; ++d2)
        if (d1 + d2 <= 1) rep.merge(verifySymmetryTheorem(h, d1, d2));
  }
  return rep;
}

Report localization() {
  Report rep("localization", {});
  for (const auto& name : builtinSurfaceNames()) {
    auto s = builtinSurface(name);
    std::vector<int> d(s.rays.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>(i % 3) - 1;
    rep.merge(verifyVanishing(s, directSum(equivariantLineBundle(s, d), trivialBundle(s, 2))));
    chernNumbers(s, trivialBundle(s, 1));  // throws on slope dependence
  }
  auto p2 = builtinSurface("P2");
  auto n = chernNumbers(p2, parseBundle(p2, "O(1)"));
  rep.expectEqual(n.euler, Rational(3), "chi(P2)");
  rep.expectEqual(n.K2, Rational(9), "K^2 of P2");
  rep.expectEqual(n.c1sq, Rational(1), "c1(O(1))^2");
  auto q = builtinSurface("P1xP1");
  auto nq = chernNumbers(q, trivialBundle(q, 1));
  rep.expectEqual(nq.euler, Rational(4), "chi(P1xP1)");
  rep.expectEqual(nq.K2, Rational(8), "K^2 of P1xP1");
  auto v = verlindeSeries(p2, trivialBundle(p2, 0), 6);
  for (int i = 0; i <= 6; ++i) rep.expectEqual(v.at(static_cast<std::size_t>(i)), Rational(1), "(1-w)^{-1} at w^" + std::to_string(i));
  return rep;
}

Report mainTheorem() {
  Report rep("main", {});
  for (int k : {3, 4}) rep.merge(verifyMainTheorem(k, 4, 8));
  return rep;
}

Report segreVerlinde() {
  Report rep("segre-verlinde", {});
  for (int k : {3, 4}) rep.merge(verifySegreVerlinde(k, 4));
  return rep;
}

Report knownSeries() {
  Report rep("known", {});
  const int order = 4;
  Series y = ySeries(order);
  Series one = y.constantLike(Rational(1));
  for (int r : {2, 3}) {
    const Rational R(r);
    Series omy = one - y, omry = one - y * R, omr2y = one - y * (R * R);
    auto A = extractUniversal(Flavor::Chern, r + 1, order, 0);
    auto B = extractUniversal(Flavor::Verlinde, r + 1, order, 0);
    Series x = -(y * pow(omry, Rational(r - 1)));
    Series t = -(y * pow(omy, R * R - Rational(1)));
    auto at = [](const Series& logS, const Series& arg) { return exp(composeUni(logS, arg)); };
    const std::string tag = " r=" + std::to_string(r);
    rep.expectEqual(at(B.logG[1], t), omy, "B1" + tag);
    rep.expectEqual(at(B.logG[2], t), pow(omy, R * R) * invert(omr2y), "B2" + tag);
    rep.expectEqual(at(A.logG[0], x), pow(omy, Rational(r + 1)) * invert(omry), "A0" + tag);
    rep.expectEqual(at(A.logG[1], x), omry * pow(omy, -R), "A1" + tag);
    rep.expectEqual(at(A.logG[2], x), pow(omry, Rational(2 * r)) * pow(omy, -R * R) * invert(omr2y), "A2" + tag);
  }
  return rep;
}

Report b3Triple() {
  Report rep("b3", {});
  for (int r : {2, 3}) {
    Series p = b3Product(r, 8);
    rep.expectEqual(g3OfY(r + 1, 8), p, "exp formula vs product r=" + std::to_string(r));
    rep.expectEqual(b3Localization(r, 8), p, "localization vs product r=" + std::to_string(r));
  }
  return rep;
}

Report b4Replay() {
  Report rep("b4", {});
  for (auto [r, order] : {std::pair{2, 6}, std::pair{3, 5}}) {
    Series b = b4Binomial(r, order);
    rep.expectEqual(b4Conjecture(r, order), b, "conjecture r=" + std::to_string(r));
    rep.expectEqual(b4Localization(r, order), b, "localization r=" + std::to_string(r));
  }
  for (int r = 0; r <= 4; ++r) rep.merge(verifyBConjecture(r, 12));
  return rep;
}

Report calculus() {
  Report rep("calculus", {});
  for (int k : {3, 4}) {
    auto c = buildCDEF(k, 3, 6);
    rep.expectEqual(c.C, hToF(hOfC(k, 3), k, 3, 6), "C k=" + std::to_string(k));
    rep.expectEqual(c.Cprime, hToF(hOfCPrime(3), k, 3, 6), "C' k=" + std::to_string(k));
    rep.expectEqual(c.D, hToF(hOfD(k, 3), k, 3, 6), "D k=" + std::to_string(k));
  }
  const int W = 4, Z = 8;
  std::map<std::pair<int, int>, Series> bySubstitution;
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> da(1, 3), dk(3, 5), dm(0, W), dn(0, Z);
  for (int cell = 0; cell < 200; ++cell) {
    const int a = da(rng), k = dk(rng), m = dm(rng), n = dn(rng);
    auto key = std::pair{a, k};
    if (!bySubstitution.count(key)) bySubstitution.emplace(key, hToFBySubstitution(pow(ySeries(Z), Rational(a)), k, W, Z));
    const Series& f = bySubstitution.at(key);
    rep.expectEqual(f.coeff({m, n}), symRegCoefficient(a, m, n, k),
                    "cell a=" + std::to_string(a) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  return rep;
}

bool runCli(const std::string& args, std::string& out) {
  std::string cmd = std::string(HILBSERIES_EXE) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return false;
  std::array<char, 4096> buf;
  out.clear();
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  return pclose(p) == 0;
}

Report determinism() {
  Report rep("determinism", {});
  std::string a, b, c;
  if (!runCli("verify all --quick", a)) rep.fail("first run did not exit 0");
  if (!runCli("verify all --quick", b)) rep.fail("second run did not exit 0");
  if (!runCli("--jobs 3 verify all --quick", c)) rep.fail("--jobs 3 run did not exit 0");
  rep.expectEqual(a, b, "repeat run differs");
  rep.expectEqual(a, c, "--jobs 3 output differs");
  if (a.empty()) rep.fail("empty report");
  return rep;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
      {"Macdonald suite", macdonaldSuite},
      {"functional equation of Omega and palindromicity", functionalEquation},
      {"symmetry of the H components", symmetry},
      {"localization sanity", localization},
      {"main theorem reproduction", mainTheorem},
      {"Segre-Verlinde correspondence", segreVerlinde},
      {"known A and B series", knownSeries},
      {"B3 triple agreement", b3Triple},
      {"B4 binomial, product and localization", b4Replay},
      {"regularity and symmetry calculus", calculus},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
      rep = criteria[i].second();
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.pass) ++failed;
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << "criterion " << (i + 1) << ": " << (rep.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  (" << rep.checked << " checks, " << t << ")";
    if (!rep.pass) std::cout << "  first discrepancy: " << rep.firstDiscrepancy;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
