#pragma once

#include <array>
#include <string>
#include <vector>

#include "hilb/report.hpp"
#include "hilb/ring/rational.hpp"
#include "hilb/ring/series.hpp"
#include "hilb/ring/unipoly.hpp"

namespace hilb {

// x a1 + y a2
struct LinearForm {
  int x = 0, y = 0;
  Rational at(const Rational& c) const { return Rational(x) + Rational(y) * c; }
  UniPoly onLine() const { return UniPoly(std::vector<Rational>{Rational(x), Rational(y)}); }
  friend LinearForm operator+(LinearForm a, LinearForm b) { return {a.x + b.x, a.y + b.y}; }
  friend LinearForm operator*(int k, LinearForm a) { return {k * a.x, k * a.y}; }
  bool operator==(const LinearForm&) const = default;
};

struct FixedPoint {
  LinearForm t1, t2;
};

// Smooth complete toric surface from its rays in counterclockwise order.
// Fixed point i belongs to the cone spanned by rays i and i+1.
struct ToricSurface {
  std::string name;
  std::vector<std::array<int, 2>> rays;
  std::vector<FixedPoint> points;
};

// Weights per fixed point; minus holds the subtracted bundle of a K-theory class.
struct EquivariantBundle {
  std::vector<std::vector<LinearForm>> plus, minus;
  int rank() const;
  bool honest() const;
};

struct ChernNumbers {
  Rational c2, c1sq, chiDet, chiO, c1K, K2, euler;
};

ToricSurface surfaceFromRays(std::string name, std::vector<std::array<int, 2>> rays);
// P2, P1xP1, F0..F3 (also F_a), Bl1P2, Bl2P2, Bl3P2; case-insensitive.
ToricSurface builtinSurface(const std::string& name);
std::vector<std::string> builtinSurfaceNames();

// O(sum_rho d_rho D_rho)
EquivariantBundle equivariantLineBundle(const ToricSurface& s, const std::vector<int>& divisor);
EquivariantBundle trivialBundle(const ToricSurface& s, int rank);
EquivariantBundle directSum(const EquivariantBundle& a, const EquivariantBundle& b);
EquivariantBundle kTheoryClass(const EquivariantBundle& v, const EquivariantBundle& w);
// Summands joined by + and -: O, O(n) on P2, O(a,b) on P1xP1, O[d0,...] on any
// surface (one entry per ray).
EquivariantBundle parseBundle(const ToricSurface& s, const std::string& text);

ChernNumbers chernNumbers(const ToricSurface& s, const EquivariantBundle& a);
// c2 of a virtual class through p_n(v) -> p_n(V) - p_n(W).
Rational c2BySubstitution(const ToricSurface& s, const EquivariantBundle& a);
Report verifyVanishing(const ToricSurface& s, const EquivariantBundle& a);

// Default slopes c for a2 = c a1; the first two that avoid every degenerate
// weight are used and must agree.
const std::vector<Rational>& defaultSlopes();

// I_{S,alpha}(w, z) over Q in [w, z].
TruncatedSeries<Rational> hilbK(const ToricSurface& s, const EquivariantBundle& a, int wOrder, int zOrder);
// I^C and I^V in [w].
TruncatedSeries<Rational> chernSeries(const ToricSurface& s, const EquivariantBundle& a, int wOrder);
TruncatedSeries<Rational> verlindeSeries(const ToricSurface& s, const EquivariantBundle& a, int wOrder);
// I^V of a rank-k class alpha: the raw Verlinde kernel on alpha - O, so that
// alpha = O gives (1-w)^{-1}. This is what the Verlinde specialization of
// hilbK reproduces for honest bundles.
TruncatedSeries<Rational> verlindeInvariant(const ToricSurface& s, const EquivariantBundle& a, int wOrder);

TruncatedSeries<Rational> specializeChern(const TruncatedSeries<Rational>& I, int k);
TruncatedSeries<Rational> specializeVerlinde(const TruncatedSeries<Rational>& I, int k);

}  // namespace hilb
