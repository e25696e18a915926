#pragma once

#include <climits>
#include <cstdlib>
#include <string>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/parallel.hpp"
#include "hilb/partition.hpp"
#include "hilb/ring/series.hpp"

// Partition sums restricted to a line t1 = s, t2 = c s through the origin of
// the equivariant parameters. A weight-n term of these sums has a pole of
// order 2n in s, so the sums are stored in W = w / s^2. The result is then a
// genuine power series in (W, payload, s) and every truncation is exact.
// Variables are ordered [W, payload..., s].

namespace hilb {

// Box factor (1 - X exp((shift + c alpha + r beta) s + sum_j linear[j] v_j))^power
// where X is the payload monomial and v_j the payload variables.
template <class F>
struct SlopeEntry {
  int power = 1;
  std::vector<int> monomial;
  F shift{};
  std::vector<Rational> linear;
};

// Master sum at q = e^{alpha s}, t = e^{beta s}.
template <class F>
struct SlopeSpec {
  F alpha{}, beta{};
  std::vector<std::string> payloadVars;
  std::vector<int> payloadOrders;
  std::vector<SlopeEntry<F>> entries;
  int wOrder = 0;
  int sOrder = 0;
};

// Chern (or Verlinde) kernel with tangent weights tau1 s, tau2 s. Each entry
// is (power, nu) for a bundle weight nu s.
template <class F>
struct KernelSpec {
  F tau1{}, tau2{};
  std::vector<std::pair<int, F>> entries;
  int wOrder = 0;
  int sOrder = 0;
  bool verlinde = false;
};

namespace slope {

template <class F>
using Uni = std::vector<F>;

template <class F>
Uni<F> uniMul(const Uni<F>& a, const Uni<F>& b) {
  Uni<F> r(a.size(), F(Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (isZero(a[i])) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j)
      if (!isZero(b[j])) r[i + j] += a[i] * b[j];
  }
  return r;
}

// e^{g s}
template <class F>
Uni<F> expLinear(const F& g, int order) {
  Uni<F> r(static_cast<std::size_t>(order) + 1, F(Rational(0)));
  F p(Rational(1));
  for (int n = 0; n <= order; ++n) {
    r[n] = p * Rational(factorial(n)).inverse();
    p = p * g;
  }
  return r;
}

// x / (e^x - 1) at x = L s
template <class F>
Uni<F> bernoulliLinear(const F& L, int order) {
  Uni<F> r(static_cast<std::size_t>(order) + 1, F(Rational(0)));
  F p(Rational(1));
  for (int n = 0; n <= order; ++n) {
    Rational b = bernoulli(n);
    if (!b.isZero()) r[n] = p * (b / Rational(factorial(n)));
    p = p * L;
  }
  return r;
}

// Multiplies a series whose last variable is s by a univariate series in s.
template <class F>
TruncatedSeries<F> mulUni(const TruncatedSeries<F>& a, const Uni<F>& u) {
  TruncatedSeries<F> r = a.zeroLike();
  const int S = a.orders().back();
  const std::size_t blocks = a.size() / (static_cast<std::size_t>(S) + 1);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t base = b * (static_cast<std::size_t>(S) + 1);
    for (int i = 0; i <= S; ++i) {
      const F& x = a.at(base + i);
      if (isZero(x)) continue;
      for (int j = 0; i + j <= S; ++j)
        if (!isZero(u[j])) r.at(base + i + j) += x * u[j];
    }
  }
  return r;
}

// Multiplies by exp(g x) where x is variable var.
template <class F>
TruncatedSeries<F> mulExpVar(const TruncatedSeries<F>& a, std::size_t var, const F& g) {
  if (isZero(g)) return a;
  std::vector<int> unit(a.nvars(), 0);
  unit[var] = 1;
  const std::size_t stride = a.indexOf(unit);
  const int ord = a.orders()[var];
  Uni<F> ex = expLinear(g, ord);
  TruncatedSeries<F> r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const F& x = a.at(i);
    if (isZero(x)) continue;
    int e = static_cast<int>((i / stride) % (static_cast<std::size_t>(ord) + 1));
    for (int j = 1; e + j <= ord; ++j) r.at(i + j * stride) += x * ex[j];
  }
  return r;
}

// Multiplies by a monomial, dropping what leaves the box.
template <class F>
TruncatedSeries<F> mulMonomial(const TruncatedSeries<F>& a, const std::vector<int>& mono) {
  TruncatedSeries<F> r = a.zeroLike();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (isZero(a.at(i))) continue;
    auto e = a.exponentOf(i);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += mono[k];
    if (r.inBox(e)) r.at(r.indexOf(e)) = a.at(i);
  }
  return r;
}

template <class F>
void requireNonzero(const F& x, const std::string& what) {
  if (isZero(x)) throw Error(ErrorCode::DegenerateSlope, what + " vanishes on the slope line");
}

inline std::vector<Partition> partitionsFor(int wOrder) {
  if (wOrder > maxWeight(8)) throw Error(ErrorCode::WeightTooLarge, "partition sum beyond weight cap");
  return partitionsUpTo(wOrder);
}

}  // namespace slope

inline std::vector<std::string> slopeVars(const std::vector<std::string>& payload) {
  std::vector<std::string> v{"W"};
  v.insert(v.end(), payload.begin(), payload.end());
  v.push_back("s");
  return v;
}

// Summand of one partition as a series in [payload..., s], including the
// factor s^{2|lambda|} that moves it to the W-normalization.
template <class F>
TruncatedSeries<F> slopeTerm(const SlopeSpec<F>& spec, const Partition& lam) {
  using namespace slope;
  const int S = spec.sOrder;
  std::vector<std::string> vars = spec.payloadVars;
  vars.push_back("s");
  std::vector<int> orders = spec.payloadOrders;
  orders.push_back(S);
  const std::size_t np = spec.payloadVars.size();

  F pref(Rational(lam.weight() % 2 ? -1 : 1));
  Uni<F> su(static_cast<std::size_t>(S) + 1, F(Rational(0)));
  su[0] = F(Rational(1));
  F shift(Rational(0));
  auto boxes = lam.boxes();
  for (const auto& b : boxes) {
    F L1 = spec.alpha * Rational(b.a + 1) - spec.beta * Rational(b.l);
    F L2 = spec.beta * Rational(b.l + 1) - spec.alpha * Rational(b.a);
    requireNonzero(L1, "arm-leg weight");
    requireNonzero(L2, "arm-leg weight");
    pref = pref * inverse(L1 * L2);
    su = uniMul(su, bernoulliLinear(L1, S));
    su = uniMul(su, bernoulliLinear(L2, S));
    shift = shift - spec.alpha * Rational(b.a) - spec.beta * Rational(b.l);
  }
  su = uniMul(su, expLinear(shift, S));

  TruncatedSeries<F> acc = TruncatedSeries<F>::constant(vars, orders, pref);
  acc = mulUni(acc, su);
  for (const auto& e : spec.entries) {
    std::vector<int> mono = e.monomial;
    mono.resize(np, 0);
    mono.push_back(0);
    if (!acc.inBox(mono)) continue;  // factor is 1 in this truncation
    if (e.power < 0 && std::all_of(mono.begin(), mono.end(), [](int d) { return d == 0; }))
      throw Error(ErrorCode::InvalidArgument, "denominator entry needs a payload monomial");
    for (const auto& b : boxes) {
      F g = e.shift + spec.alpha * Rational(b.c) + spec.beta * Rational(b.r);
      // times X^m exp(m (g s + linear.v))
      auto shifted = [&](const TruncatedSeries<F>& x, int m) {
        TruncatedSeries<F> y = mulExpVar(x, np, g * Rational(m));
        for (std::size_t j = 0; j < e.linear.size(); ++j)
          if (!e.linear[j].isZero()) y = mulExpVar(y, j, F(e.linear[j] * Rational(m)));
        std::vector<int> mm = mono;
        for (auto& d : mm) d *= m;
        return mulMonomial(y, mm);
      };
      for (int p = 0; p < std::abs(e.power); ++p) {
        if (e.power > 0) {
          acc -= shifted(acc, 1);
        } else {
          TruncatedSeries<F> next = acc;
          for (int m = 1;; ++m) {
            TruncatedSeries<F> t = shifted(acc, m);
            if (t.isZero()) break;
            next += t;
          }
          acc = std::move(next);
        }
      }
    }
  }
  return acc;
}

template <class F>
TruncatedSeries<F> slopeOmega(const SlopeSpec<F>& spec) {
  auto parts = slope::partitionsFor(spec.wOrder);
  std::vector<int> orders{spec.wOrder};
  orders.insert(orders.end(), spec.payloadOrders.begin(), spec.payloadOrders.end());
  orders.push_back(spec.sOrder);
  TruncatedSeries<F> r(slopeVars(spec.payloadVars), orders);
  auto terms = parallelMap<TruncatedSeries<F>>(parts.size(), [&](std::size_t i) { return slopeTerm(spec, parts[i]); });
  for (std::size_t li = 0; li < parts.size(); ++li) {
    const Partition& lam = parts[li];
    const TruncatedSeries<F>& t = terms[li];
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (isZero(t.at(i))) continue;
      auto ex = t.exponentOf(i);
      ex.insert(ex.begin(), lam.weight());
      r.at(r.indexOf(ex)) += t.at(i);
    }
  }
  return r;
}

// Chern or Verlinde summand of one partition as a univariate series in s.
template <class F>
slope::Uni<F> kernelTerm(const KernelSpec<F>& spec, const Partition& lam) {
  using namespace slope;
  const int S = spec.sOrder;
  F pref(Rational(1));
  Uni<F> su(static_cast<std::size_t>(S) + 1, F(Rational(0)));
  su[0] = F(Rational(1));
  F expo(Rational(0));
  for (const auto& b : lam.boxes()) {
    F L1 = spec.tau1 * Rational(b.a + 1) - spec.tau2 * Rational(b.l);
    F L2 = spec.tau2 * Rational(b.l + 1) - spec.tau1 * Rational(b.a);
    requireNonzero(L1, "arm-leg weight");
    requireNonzero(L2, "arm-leg weight");
    pref = pref * inverse(L1 * L2);
    if (spec.verlinde) {
      su = uniMul(su, bernoulliLinear(-L1, S));
      su = uniMul(su, bernoulliLinear(-L2, S));
    }
    for (const auto& [power, nu] : spec.entries) {
      F g = nu - spec.tau1 * Rational(b.c) - spec.tau2 * Rational(b.r);
      if (spec.verlinde) {
        expo = expo + g * Rational(power);
        continue;
      }
      Uni<F> lin(static_cast<std::size_t>(S) + 1, F(Rational(0)));
      lin[0] = F(Rational(1));
      if (S >= 1) lin[1] = g;
      if (power >= 0) {
        for (int p = 0; p < power; ++p) su = uniMul(su, lin);
      } else {
        // 1/(1 + g s) = sum (-g s)^n
        Uni<F> inv(static_cast<std::size_t>(S) + 1, F(Rational(0)));
        F x(Rational(1));
        for (int n = 0; n <= S; ++n) {
          inv[n] = x;
          x = x * (-g);
        }
        for (int p = 0; p < -power; ++p) su = uniMul(su, inv);
      }
    }
  }
  if (spec.verlinde) su = uniMul(su, expLinear(expo, S));
  for (auto& c : su) c = c * pref;
  return su;
}

template <class F>
TruncatedSeries<F> slopeKernel(const KernelSpec<F>& spec) {
  auto parts = slope::partitionsFor(spec.wOrder);
  TruncatedSeries<F> r({"W", "s"}, {spec.wOrder, spec.sOrder});
  for (const auto& lam : parts) {
    auto u = kernelTerm(spec, lam);
    for (int e = 0; e <= spec.sOrder; ++e)
      if (!isZero(u[e])) r.at(r.indexOf({lam.weight(), e})) += u[e];
  }
  return r;
}

// Smallest e - 2n over nonzero coefficients of W^n s^e, or INT_MAX when zero.
// In the unnormalized series this is the lowest s-exponent.
template <class F>
int lowestSlopeLayer(const TruncatedSeries<F>& f) {
  int low = INT_MAX;
  const std::size_t sv = f.nvars() - 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (isZero(f.at(i))) continue;
    auto e = f.exponentOf(i);
    low = std::min(low, e[sv] - 2 * e[0]);
  }
  return low;
}

// Coefficient of s^d in the unnormalized series: [W^n s^{2n+d}] as a series
// in [w, payload...].
template <class F>
TruncatedSeries<F> slopeLayer(const TruncatedSeries<F>& f, int d) {
  const std::size_t sv = f.nvars() - 1;
  const int S = f.orders()[sv];
  const int N = f.orders()[0];
  if (2 * N + d > S) throw Error(ErrorCode::TruncationTooSmall, "s-order too small for requested layer");
  std::vector<std::string> vars(f.vars().begin(), f.vars().end() - 1);
  vars[0] = "w";
  std::vector<int> orders(f.orders().begin(), f.orders().end() - 1);
  TruncatedSeries<F> r(vars, orders);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (isZero(f.at(i))) continue;
    auto e = f.exponentOf(i);
    if (e[sv] != 2 * e[0] + d) continue;
    e.pop_back();
    r.at(r.indexOf(e)) = f.at(i);
  }
  return r;
}

}  // namespace hilb
