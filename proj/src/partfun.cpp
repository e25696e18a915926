#include "hilb/partfun.hpp"

#include <algorithm>

#include "hilb/linalg.hpp"
#include "hilb/parallel.hpp"

namespace hilb {

namespace {

RF one() { return RF(Rational(1)); }

std::string monomialName(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> omegaVars(int k, int m) {
  std::vector<std::string> v{"w"};
  for (int i = 1; i <= k; ++i) v.push_back("z" + std::to_string(i));
  for (int j = 1; j <= m; ++j) v.push_back("y" + std::to_string(j));
  return v;
}

// (w + z1 + ... + zk) * c as an alphabet over the Omega variables
Alphabet linearAlphabet(const std::vector<std::string>& vars, bool withW, bool withZ, const RF& c) {
  Alphabet a(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if ((i == 0 && !withW) || (i > 0 && !withZ)) continue;
    std::vector<int> e(vars.size(), 0);
    e[i] = 1;
    a.addTerm(e, c);
  }
  return a;
}

RF inverseBoxFactor() { return RF::oneMinusInverse(1, 0) * RF::oneMinusInverse(0, 1); }

}  // namespace

RFSeries omegaMaster(const OmegaSpec& spec) {
  if (spec.k < 0 || spec.m < 0 || spec.wOrder < 0 || spec.zOrder < 0)
    throw Error(ErrorCode::InvalidArgument, "negative Omega parameter");
  auto parts = slope::partitionsFor(spec.wOrder);
  auto vars = omegaVars(spec.k, spec.m);
  std::vector<int> orders(vars.size(), spec.zOrder);
  orders[0] = spec.wOrder;
  std::vector<std::string> pv(vars.begin() + 1, vars.end());
  std::vector<int> po(orders.begin() + 1, orders.end());
  const std::size_t np = pv.size();

  auto terms = parallelMap<RFSeries>(parts.size(), [&](std::size_t li) {
    const Partition& lam = parts[li];
    RFSeries acc = RFSeries::constant(pv, po, statNInverse(lam));
    for (const auto& b : lam.boxes()) {
      RF mon = RF::monomial(Rational(1), b.c, b.r);
      for (std::size_t i = 0; i < np; ++i) {
        std::vector<int> unit(np, 0);
        unit[i] = 1;
        if (static_cast<int>(i) < spec.k) {
          acc -= slope::mulMonomial(acc, unit) * mon;
        } else {
          // 1 / (1 - mon y) = sum (mon y)^p
          RFSeries next = acc, cur = acc;
          while (true) {
            cur = slope::mulMonomial(cur, unit) * mon;
            if (cur.isZero()) break;
            next += cur;
          }
          acc = std::move(next);
        }
      }
    }
    return acc;
  });

  RFSeries r(vars, orders);
  for (std::size_t li = 0; li < parts.size(); ++li) {
    const RFSeries& t = terms[li];
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.at(i).zero()) continue;
      auto e = t.exponentOf(i);
      e.insert(e.begin(), parts[li].weight());
      r.at(r.indexOf(e)) += t.at(i);
    }
  }
  return r;
}

Report verifyFunctionalEquation(int k, int wOrder, int zOrder) {
  Report rep("omega-functional-equation", {{"k", k}, {"wOrder", wOrder}, {"zOrder", zOrder}});
  RFSeries lhs = omegaMaster({k, 0, wOrder, zOrder});
  const auto& vars = lhs.vars();
  const auto& orders = lhs.orders();
  const int cap = std::min(k * zOrder, maxWeight(6));
  rep.params["muCap"] = cap;

  RFSeries sum(vars, orders);
  Alphabet wPlusOne = linearAlphabet(vars, true, false, one());
  wPlusOne.addTerm(std::vector<int>(vars.size(), 0), one());
  Alphabet zs = linearAlphabet(vars, false, true, one());
  auto parts = partitionsUpTo(cap);
  auto terms = parallelMap<RFSeries>(parts.size(), [&](std::size_t i) {
    const Partition& mu = parts[i];
    SymFunc h = modifiedMacdonald(mu);
    RF c = RF(statT(mu)) * statNInverse(mu);
    if (mu.weight() % 2) c = -c;
    return plethysticEvaluate(h, wPlusOne, orders) * plethysticEvaluate(h, zs, orders) * c;
  });
  for (const auto& t : terms) sum += t;
  RFSeries rhs = plethysticExp(linearAlphabet(vars, true, true, -inverseBoxFactor()), orders) * sum;

  for (std::size_t i = 0; i < lhs.size(); ++i) {
    auto e = lhs.exponentOf(i);
    int zdeg = 0;
    for (std::size_t j = 1; j < e.size(); ++j) zdeg += e[j];
    if (zdeg > cap) continue;
    rep.expectEqual(lhs.at(i), rhs.at(i), "coefficient of " + monomialName(vars, e));
  }
  return rep;
}

Report verifyPalindromic(int k, int wOrder, int zOrder) {
  Report rep("omega-palindromic", {{"k", k}, {"wOrder", wOrder}, {"zOrder", zOrder}});
  RFSeries om = omegaMaster({k, 0, wOrder, zOrder});
  const auto& vars = om.vars();
  RFSeries tilde = plethysticExp(linearAlphabet(vars, true, true, inverseBoxFactor()), om.orders()) * om;
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    auto e = tilde.exponentOf(i);
    int n = 0;
    for (std::size_t j = 1; j < e.size(); ++j) n += e[j];
    int m = e[0];
    if (m > n) {
      rep.expectEqual(tilde.at(i), RF(), "w-degree bound at " + monomialName(vars, e));
    } else if (n - m <= wOrder && n - m < m) {
      auto f = e;
      f[0] = n - m;
      rep.expectEqual(tilde.at(i), tilde.coeff(f), "palindromic pair at " + monomialName(vars, e));
    }
  }
  return rep;
}

Report verifyChernLimit(const Partition& lam, const Rational& t1, const Rational& t2, const std::vector<Rational>& v) {
  using LS = LaurentSeries<Rational>;
  const int P = 8;
  const int k = static_cast<int>(v.size());
  Report rep("chern-limit", {{"partition", lam.toString()}, {"k", k}});
  auto expSeries = [&](const Rational& g) {
    std::vector<Rational> c;
    Rational p(1);
    for (int n = 0; n <= P; ++n) {
      c.push_back(p / Rational(factorial(n)));
      p *= g;
    }
    return LS(0, c);
  };
  std::vector<Rational> geo;
  for (int n = 0; n <= P; ++n) geo.push_back(Rational(n % 2 ? -1 : 1));
  LS invOnePlus(0, geo);
  std::vector<Rational> unit(P + 1, Rational(0));
  unit[0] = Rational(1);
  LS oneS(0, unit);
  std::vector<Rational> onePlusC = unit;
  onePlusC[1] = Rational(1);
  LS onePlus(0, onePlusC);

  const int n = lam.weight();
  LS term(n * (2 - k), unit);
  if (n % 2) term = term * Rational(-1);
  Rational direct(1);
  for (const auto& b : lam.boxes()) {
    for (int i = 0; i < k; ++i) {
      Rational g = Rational(b.c) * t1 + Rational(b.r) * t2 - v[i];
      term = term * onePlus * (oneS - expSeries(g) * invOnePlus);
      direct *= Rational(1) + v[i] - t1 * Rational(b.c) - t2 * Rational(b.r);
    }
    term = term / (expSeries(Rational(b.a + 1) * t1) - expSeries(Rational(b.l) * t2));
    term = term / (expSeries(Rational(b.a) * t1) - expSeries(Rational(b.l + 1) * t2));
    direct /= (Rational(b.a + 1) * t1 - Rational(b.l) * t2) * (Rational(b.l + 1) * t2 - Rational(b.a) * t1);
  }
  ++rep.checked;
  if (term.hasPole()) rep.fail("pole in epsilon");
  rep.expectEqual(term.constantTerm(), direct, "epsilon^0 coefficient");
  return rep;
}

Report verifyVerlindeLimit(const Partition& lam, const std::vector<std::pair<int, int>>& v) {
  const int k = static_cast<int>(v.size());
  Report rep("verlinde-limit", {{"partition", lam.toString()}, {"k", k}});
  // epsilon-polynomial of the rescaled master term
  std::vector<RF> poly{one()};
  RF direct = one();
  for (const auto& b : lam.boxes()) {
    for (int i = 0; i <= k; ++i) {
      RF V = i < k ? RF::monomial(Rational(1), -v[i].first, -v[i].second) : one();
      RF root = RF::monomial(Rational(1), b.c, b.r) * V;
      std::vector<RF> next(poly.size() + 1, RF());
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= poly[j] * root;
      }
      poly = std::move(next);
      if (i < k) direct *= V * RF::monomial(Rational(1), b.c, b.r);
    }
    direct *= RF::oneMinusInverse(b.a + 1, -b.l) * RF::oneMinusInverse(-b.a, b.l + 1);
  }
  RF lhs = poly[0] * statNInverse(lam);
  if ((k * lam.weight()) % 2) lhs = -lhs;
  rep.expectEqual(lhs, direct, "epsilon^0 coefficient");
  return rep;
}

namespace {

template <class F>
TruncatedSeries<F> logOmegaOnSlope(const HRequest& req, const F& c) {
  SlopeSpec<F> spec;
  spec.alpha = F(Rational(1));
  spec.beta = c;
  spec.payloadVars = {"z"};
  spec.payloadOrders = {req.zOrder};
  if (req.v1Order > 0) { spec.payloadVars.push_back("v1"); spec.payloadOrders.push_back(req.v1Order); }
  if (req.v2Order > 0) { spec.payloadVars.push_back("v2"); spec.payloadOrders.push_back(req.v2Order); }
  const std::size_t np = spec.payloadVars.size();
  for (int i = 0; i < req.k; ++i) {
    SlopeEntry<F> e;
    e.power = 1;
    e.monomial.assign(np, 0);
    e.monomial[0] = 1;
    e.shift = F(Rational(0));
    e.linear.assign(np, Rational(0));
    if (i == 0 && req.v1Order > 0) e.linear[1] = Rational(1);
    if (i == 1 && req.v2Order > 0) e.linear[req.v1Order > 0 ? 2 : 1] = Rational(1);
    spec.entries.push_back(std::move(e));
  }
  spec.wOrder = req.wOrder;
  spec.sOrder = 2 * req.wOrder + req.dMax;
  TruncatedSeries<F> l = log(slopeOmega(spec));
  if (lowestSlopeLayer(l) < -2) throw Error(ErrorCode::PoleSurvived, "log Omega has a pole beyond s^-2");
  return l;
}

void checkRequest(const HRequest& req) {
  if (req.k < 0 || req.wOrder < 0 || req.zOrder < 0 || req.dMax < -2 || req.v1Order < 0 || req.v2Order < 0)
    throw Error(ErrorCode::InvalidArgument, "bad H request");
}

}  // namespace

HExpansion::HExpansion(const HRequest& req) : req_(req) {
  checkRequest(req);
  const int nodes = req.dMax + 4;
  std::vector<Rational> slopes;
  for (int j = 1; j <= nodes; ++j) slopes.push_back(Rational(-j));
  auto logs = parallelMap<TruncatedSeries<Rational>>(slopes.size(), [&](std::size_t j) { return logOmegaOnSlope(req, slopes[j]); });

  for (int d = -2; d <= req.dMax; ++d) {
    // c X_d(c) = sum_{d2} c^{d2+1} H_{d-d2,d2} has degree d + 2
    const int deg = d + 2;
    std::vector<Rational> xs(slopes.begin(), slopes.begin() + deg + 1);
    std::vector<UniPoly> basis;
    for (int i = 0; i <= deg; ++i) {
      std::vector<Rational> ys(deg + 1, Rational(0));
      ys[i] = Rational(1);
      basis.push_back(interpolate(xs, ys));
    }
    std::vector<TruncatedSeries<Rational>> layers;
    for (const auto& l : logs) layers.push_back(slopeLayer(l, d));
    const auto& shape = layers[0];
    for (int d2 = -1; d2 <= d + 1; ++d2) comps_[{d - d2, d2}] = shape.zeroLike();
    for (std::size_t idx = 0; idx < shape.size(); ++idx) {
      UniPoly p;
      bool any = false;
      for (int i = 0; i <= deg; ++i) {
        const Rational& y = layers[i].at(idx);
        if (y.isZero()) continue;
        any = true;
        p += basis[i] * (y * slopes[i]);
      }
      Rational check = layers[deg + 1].at(idx) * slopes[deg + 1];
      if (p.eval(slopes[deg + 1]) != check)
        throw Error(ErrorCode::SlopeDependence, "log Omega layer is not polynomial in the slope");
      if (!any) continue;
      for (int d2 = -1; d2 <= d + 1; ++d2) comps_[{d - d2, d2}].at(idx) = p.coeff(d2 + 1);
    }
  }
}

HExpansion HExpansion::symbolic(const HRequest& req) {
  checkRequest(req);
  HExpansion h;
  h.req_ = req;
  TruncatedSeries<UniRatFunc> l = logOmegaOnSlope(req, UniRatFunc::c());
  for (int d = -2; d <= req.dMax; ++d) {
    TruncatedSeries<UniRatFunc> layer = slopeLayer(l, d);
    TruncatedSeries<Rational> shape = layer.mapCoefficients([](const UniRatFunc&) { return Rational(0); });
    for (int d2 = -1; d2 <= d + 1; ++d2) h.comps_[{d - d2, d2}] = shape.zeroLike();
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      if (layer.at(idx).zero()) continue;
      UniRatFunc p = layer.at(idx) * UniRatFunc::c();
      if (p.den().degree() != 0 || p.num().degree() > d + 2)
        throw Error(ErrorCode::SlopeDependence, "symbolic layer is not a polynomial of the expected degree");
      Rational dl = p.den().coeff(0);
      for (int d2 = -1; d2 <= d + 1; ++d2) h.comps_[{d - d2, d2}].at(idx) = p.num().coeff(d2 + 1) / dl;
    }
  }
  return h;
}

const TruncatedSeries<Rational>& HExpansion::component(int d1, int d2) const {
  if (d1 < -1 || d2 < -1) throw Error(ErrorCode::InvalidArgument, "H index below -1");
  auto it = comps_.find({d1, d2});
  if (it == comps_.end()) throw Error(ErrorCode::InsufficientCap, "H component beyond the computed s-order");
  return it->second;
}

std::vector<std::string> HExpansion::vars() const {
  std::vector<std::string> v{"w", "z"};
  if (req_.v1Order > 0) v.push_back("v1");
  if (req_.v2Order > 0) v.push_back("v2");
  return v;
}

HComponent extractH(int d1, int d2, int k, int wOrder, int zOrder) {
  if (d1 + d2 > kHCap) throw Error(ErrorCode::InsufficientCap, "requested H component exceeds the cap");
  HExpansion h(HRequest{k, wOrder, zOrder, d1 + d2, 0, 0});
  return HComponent{d1, d2, h.component(d1, d2)};
}

std::vector<Rational> polylog(int s, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order; ++n) c[n] = pow(Rational(n), -s);
  return c;
}

Report verifySymmetryTheorem(const HExpansion& h, int d1, int d2) {
  const auto& req = h.request();
  Report rep("symmetry-theorem", {{"d1", d1}, {"d2", d2}, {"k", req.k}, {"wOrder", req.wOrder}, {"zOrder", req.zOrder}});
  TruncatedSeries<Rational> f = h.component(d1, d2).embed({"w", "z"}, {req.wOrder, req.zOrder}, true);
  Rational corr = bernoulli(d1 + 1) * bernoulli(d2 + 1) / Rational(mpz_class(factorial(d1 + 1) * factorial(d2 + 1)));
  auto liw = polylog(1 - d1 - d2, req.wOrder);
  auto liz = polylog(1 - d1 - d2, req.zOrder);
  for (int m = 1; m <= req.wOrder; ++m) f.at(f.indexOf({m, 0})) += corr * liw[m];
  for (int n = 1; n <= req.zOrder; ++n) f.at(f.indexOf({0, n})) += corr * Rational(req.k) * liz[n];
  for (int n = 0; n <= req.zOrder; ++n) {
    for (int m = 0; m <= req.wOrder; ++m) {
      std::string where = "w^" + std::to_string(m) + " z^" + std::to_string(n);
      if (m > n) {
        rep.expectEqual(f.coeff({m, n}), Rational(0), "degree bound at " + where);
      } else if (n - m <= req.wOrder && n - m < m) {
        rep.expectEqual(f.coeff({m, n}), f.coeff({n - m, n}), "palindromic pair at " + where);
      }
    }
  }
  return rep;
}

Report verifySymmetryTheorem(int d1, int d2, int k, int wOrder, int zOrder) {
  HExpansion h(HRequest{k, wOrder, zOrder, d1 + d2, 0, 0});
  return verifySymmetryTheorem(h, d1, d2);
}

Report verifyLogRegularity(int k, int wOrder, const std::vector<Rational>& slopes) {
  Report rep("log-regularity", {{"k", k}, {"wOrder", wOrder}});
  HRequest req{k, wOrder, wOrder, 0, 0, 0};
  for (const auto& c : slopes) {
    ++rep.checked;
    try {
      logOmegaOnSlope(req, c);
    } catch (const Error& e) {
      rep.fail("slope " + c.toString() + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace hilb
