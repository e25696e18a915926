#pragma once

#include <array>
#include <string>
#include <vector>

#include "hilb/report.hpp"
#include "hilb/ring/series.hpp"
#include "hilb/ring/unipoly.hpp"
#include "hilb/toric.hpp"

namespace hilb {

using Series = TruncatedSeries<Rational>;

enum class Flavor { Full, Chern, Verlinde };
const char* flavorName(Flavor f);

// (c2(alpha), chi(det alpha), chi(O_S)/2, c1(alpha)K - K^2/2, K^2)
std::array<Rational, 5> productExponents(const ChernNumbers& n);

struct FitRow {
  std::string surface, bundle;
  std::array<Rational, 5> exponents;
};

// log G_0..G_4 (Full, in [w,z]), log A_0..A_4 (Chern, in [w]) or
// log B_1..B_4 (Verlinde, in [w], slot 0 unused and zero).
struct UniversalSeriesBundle {
  int k = 0;
  Flavor flavor = Flavor::Full;
  std::array<Series, 5> logG;
  std::vector<FitRow> solved, checked;
};

// Candidate (S, alpha) pairs of rank k built from line bundles.
std::vector<std::pair<std::string, std::string>> fitCandidates(int k);

// Solves log I = sum_i e_i log G_i on a rank-5 (rank-4 for Verlinde) subset
// of the candidates and checks the remaining rows (at least `extra` of them).
UniversalSeriesBundle extractUniversal(Flavor flavor, int k, int wOrder, int zOrder, int extra = 2);

// u(w,z), v(w,z) from u = w z (1-v)^{k-1}, v = z (1-u)^{k-1}.
struct UVPair {
  int k = 1;
  Series u, v;
};
UVPair uvPair(int k, int wOrder, int zOrder);
// u/v = w (1-v)^{k-1} / (1-u)^{k-1}
Series uOverV(const UVPair& uv);
// y = uv / ((1-u)(1-v))
Series yOf(const UVPair& uv);
// Substitutes a series in [u, v] into (w, z).
Series uvSubstitute(const Series& expr, const UVPair& uv);

// log((1-u)^{k-1} - v) and friends in (w, z); each argument has constant term 1.
Series logOneMinus(const Series& x);

// [x^0] ((x^{k-1} - x^{1-k}) / (x - x^{-1}))^{2n}
Rational bracketConstantTerm(int k, int n);

// The series h(y) of G_3 as a function of y (also B_3 with r = k-1).
Series g3OfY(int k, int yOrder);
// h-series of the symmetric regular series C_k, C'_k and D_k.
Series hOfC(int k, int yOrder);
Series hOfCPrime(int yOrder);
Series hOfD(int k, int yOrder);

// Coefficient of w^m z^n in the symmetric regular series of h = y^a.
Rational symRegCoefficient(int a, int m, int n, int k);

// Symmetric regular f from h(y); the uv-substitution and the coefficient
// formula are both run and must agree (Mismatch otherwise).
Series hToF(const Series& h, int k, int wOrder, int zOrder);
Series hToFBySubstitution(const Series& h, int k, int wOrder, int zOrder);
Series hToFByFormula(const Series& h, int k, int wOrder, int zOrder);
// Inverse map, triangular in the w^a z^{2a} coefficients; result in [y] up to
// min(wOrder, zOrder / 2).
Series fToH(const Series& f, int k);

// Exponentiate, compose with y(w,z) and so on for univariate series in y.
Series ySeries(int yOrder);

Report checkSymmetric(const Series& f);
// Polynomials p_m, m = 0..wOrder; throws ValidationFailure at the first bad (m, n).
std::vector<UniPoly> fitRegularity(const Series& f, int k, int d = 0);
Report checkRegular(const Series& f, int k, int d = 0);

// Chern and Verlinde limits, in [w].
Series chernLimit(const Series& f, int k, int d = 0);
Series verlindeLimit(const Series& f, int k);
// f_chern(y (1-(k-1)y)^{k-2}) = f_verlinde((-1)^k y (1-y)^{k(k-2)}) = h(y)
Report verifyChernVerlindeLimits(const Series& f, int k);

// Univariate helpers.
Series composeUni(const Series& outer, const Series& inner);
// y (1-(k-1)y)^{k-2} and (-1)^k y (1-y)^{k(k-2)}
Series chernArgument(int k, int yOrder);
Series verlindeArgument(int k, int yOrder);

struct CDEF {
  int k = 0;
  Series C, Cprime, D, E, F;
  // H_{-1,-1,k}, H_{-1,0,k}, H_{-1,1,k}, H_{0,0,k} and the Taylor data
  Series Hmm, Hm0, Hm1, H00;
  Series C2, C11, D1, Eser, Fser;
};
CDEF buildCDEF(int k, int wOrder, int zOrder);

// log G_0..G_4 assembled from the H expansion.
std::array<Series, 5> logGFromH(const CDEF& c);

// Closed forms of G_0..G_3 in (w, z).
Series closedFormG(int index, int k, int wOrder, int zOrder);

Report verifyDifferentialIdentities(int k, int wOrder, int zOrder);

// Extraction at (wOrder, zOrder) against closedFormG(0..3) and the H route.
Report verifyMainTheorem(int k, int wOrder, int zOrder);
// log(G0 G1), log G3, log G4 at (order, k order): symmetric, regular, and
// their limits pulled back along x = -y(1-ry)^{r-1}, t = -y(1-y)^{r^2-1}
// (r = k-1) give the same h(y), which also matches the Chern and Verlinde
// extractions.
Report verifySegreVerlinde(int k, int order);

}  // namespace hilb
