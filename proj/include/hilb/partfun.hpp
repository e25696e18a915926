#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hilb/macdonald.hpp"
#include "hilb/report.hpp"
#include "hilb/ring/laurent.hpp"
#include "hilb/ring/unipoly.hpp"
#include "hilb/slope.hpp"

namespace hilb {

struct OmegaSpec {
  int k = 0;  // numerator variables z1..zk
  int m = 0;  // denominator variables y1..ym
  int wOrder = 0;
  int zOrder = 0;
};

// Master partition function over Q(q,t) in the variables [w, z1.., y1..].
RFSeries omegaMaster(const OmegaSpec& spec);

// Compares Omega with the Macdonald-side expansion on every monomial of
// total z-degree at most min(k * zOrder, 6); that cap makes the mu-sum exact.
Report verifyFunctionalEquation(int k, int wOrder, int zOrder);
Report verifyPalindromic(int k, int wOrder, int zOrder);

// Chern or Verlinde kernel with all bundle weights zero on the line
// t1 = s, t2 = c s. Entry n is the w^n coefficient, known through s^precision.
template <class F>
std::vector<LaurentSeries<F>> omegaKernel(int k, int wOrder, const F& c, int precision, bool verlinde) {
  KernelSpec<F> spec;
  spec.tau1 = F(Rational(1));
  spec.tau2 = c;
  for (int i = 0; i < k; ++i) spec.entries.emplace_back(1, F(Rational(0)));
  spec.wOrder = wOrder;
  spec.sOrder = 2 * wOrder + precision;
  spec.verlinde = verlinde;
  auto f = slopeKernel(spec);
  std::vector<LaurentSeries<F>> out;
  for (int n = 0; n <= wOrder; ++n) {
    std::vector<F> cs;
    for (int e = 0; e <= spec.sOrder; ++e) cs.push_back(f.coeff({n, e}));
    out.emplace_back(-2 * n, std::move(cs));
  }
  return out;
}
template <class F>
std::vector<LaurentSeries<F>> omegaChern(int k, int wOrder, const F& c, int precision) {
  return omegaKernel(k, wOrder, c, precision, false);
}
template <class F>
std::vector<LaurentSeries<F>> omegaVerlinde(int k, int wOrder, const F& c, int precision) {
  return omegaKernel(k, wOrder, c, precision, true);
}

// Term-by-term limits of the master function. The Chern check works at
// numeric (t1, t2, v); the Verlinde check takes v_i = m_i t1 + n_i t2 so that
// everything stays in Q(q,t).
Report verifyChernLimit(const Partition& lam, const Rational& t1, const Rational& t2, const std::vector<Rational>& v);
Report verifyVerlindeLimit(const Partition& lam, const std::vector<std::pair<int, int>>& v);

// Layers of log Omega(w; z e^{v1}, z e^{v2}, z, ..., z; e^{t1}, e^{t2}).
// Payload variables are z and, when their orders are positive, v1 and v2.
struct HRequest {
  int k = 1;
  int wOrder = 1;
  int zOrder = 1;
  int dMax = 0;
  int v1Order = 0;
  int v2Order = 0;
};

class HExpansion {
 public:
  // Numeric slopes c = -1, -2, ..., one more than needed for interpolation.
  explicit HExpansion(const HRequest& req);
  // Single slope with c kept symbolic in Q(c).
  static HExpansion symbolic(const HRequest& req);

  const HRequest& request() const { return req_; }
  // Series in [w, z, (v1), (v2)] over Q.
  const TruncatedSeries<Rational>& component(int d1, int d2) const;
  std::vector<std::string> vars() const;

 private:
  HExpansion() = default;
  HRequest req_;
  std::map<std::pair<int, int>, TruncatedSeries<Rational>> comps_;
};

struct HComponent {
  int d1 = -1, d2 = -1;
  TruncatedSeries<Rational> series;  // in [w, z]
};

constexpr int kHCap = 2;
HComponent extractH(int d1, int d2, int k, int wOrder, int zOrder);

// Polylogarithm Li_s(x) = sum x^n / n^s as coefficients 0..order.
std::vector<Rational> polylog(int s, int order);

Report verifySymmetryTheorem(int d1, int d2, int k, int wOrder, int zOrder);
Report verifySymmetryTheorem(const HExpansion& h, int d1, int d2);

// (1 - e^{t1})(1 - e^{t2}) log Omega has no pole in s on each slope line.
Report verifyLogRegularity(int k, int wOrder, const std::vector<Rational>& slopes);

}  // namespace hilb
