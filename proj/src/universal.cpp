#include "hilb/universal.hpp"

#include <algorithm>

#include "hilb/linalg.hpp"
#include "hilb/parallel.hpp"
#include "hilb/partfun.hpp"

namespace hilb {

const char* flavorName(Flavor f) {
  switch (f) {
    case Flavor::Full: return "full";
    case Flavor::Chern: return "chern";
    case Flavor::Verlinde: return "verlinde";
  }
  return "?";
}

std::array<Rational, 5> productExponents(const ChernNumbers& n) {
  return {n.c2, n.chiDet, n.chiO / Rational(2), n.c1K - n.K2 / Rational(2), n.K2};
}

namespace {

std::string joinRank(std::vector<std::string> lead, int k) {
  // lead summands followed by copies of O up to rank k; rank 0 subtracts O
  std::string s;
  int r = static_cast<int>(lead.size());
  for (const auto& t : lead) s += (s.empty() ? "" : "+") + t;
  for (; r < k; ++r) s += (s.empty() ? "O" : "+O");
  for (; r > k; --r) s += "-O";
  return s.empty() ? "0" : s;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> fitCandidates(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "rank must be nonnegative");
  std::vector<std::pair<std::string, std::vector<std::string>>> leads{
      {"P2", {}},
      {"P2", {"O(1)"}},
      {"P2", {"O(1)", "O(1)"}},
      {"P1xP1", {}},
      {"P1xP1", {"O(1,0)"}},
      {"Bl2P2", {}},
      {"P2", {"O(2)"}},
      {"P1xP1", {"O(1,1)"}},
      {"P2", {"O(1)", "O(-1)"}},
      {"Bl1P2", {"O[1,0,0,0]"}},
      {"Bl3P2", {}},
      {"P1xP1", {"O(1,0)", "O(0,1)"}},
  };
  std::vector<std::pair<std::string, std::string>> r;
  for (const auto& [s, lead] : leads) r.emplace_back(s, joinRank(lead, k));
  return r;
}

UniversalSeriesBundle extractUniversal(Flavor flavor, int k, int wOrder, int zOrder, int extra) {
  std::vector<int> cols = flavor == Flavor::Verlinde ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{0, 1, 2, 3, 4};
  const std::size_t need = cols.size();

  struct Row {
    ToricSurface s;
    EquivariantBundle a;
    FitRow info;
  };
  std::vector<Row> chosen, spare;
  Matrix m;
  for (const auto& [sname, btext] : fitCandidates(k)) {
    auto s = builtinSurface(sname);
    auto a = parseBundle(s, btext);
    auto e = productExponents(chernNumbers(s, a));
    Row row{s, a, {s.name, btext, e}};
    std::vector<Rational> sub;
    for (int c : cols) sub.push_back(e[static_cast<std::size_t>(c)]);
    if (chosen.size() < need) {
      Matrix t = m;
      t.push_back(sub);
      if (matrixRank(t) == static_cast<int>(t.size())) {
        m = t;
        chosen.push_back(row);
        continue;
      }
    }
    if (static_cast<int>(spare.size()) < extra) spare.push_back(row);
  }
  if (chosen.size() < need) throw Error(ErrorCode::RankDeficientMatrix, "candidate Chern-number matrix has rank below " + std::to_string(need));

  std::vector<Row> all = chosen;
  all.insert(all.end(), spare.begin(), spare.end());
  auto logs = parallelMap<Series>(all.size(), [&](std::size_t i) {
    const auto& r = all[i];
    switch (flavor) {
      case Flavor::Full: return log(hilbK(r.s, r.a, wOrder, zOrder));
      case Flavor::Chern: return log(chernSeries(r.s, r.a, wOrder));
      case Flavor::Verlinde: return log(verlindeInvariant(r.s, r.a, wOrder));
    }
    return Series();
  });

  UniversalSeriesBundle out;
  out.k = k;
  out.flavor = flavor;
  for (auto& g : out.logG) g = logs[0].zeroLike();
  for (std::size_t idx = 0; idx < logs[0].size(); ++idx) {
    std::vector<Rational> b;
    for (std::size_t i = 0; i < need; ++i) b.push_back(logs[i].at(idx));
    bool allZero = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x.isZero(); });
    if (allZero) continue;
    auto x = solveSquare(m, b);
    for (std::size_t c = 0; c < need; ++c) out.logG[static_cast<std::size_t>(cols[c])].at(idx) = x[c];
  }
  for (const auto& r : chosen) out.solved.push_back(r.info);
  for (std::size_t i = 0; i < spare.size(); ++i) {
    Series pred = logs[0].zeroLike();
    for (int c : cols) pred += out.logG[static_cast<std::size_t>(c)] * spare[i].info.exponents[static_cast<std::size_t>(c)];
    if (!(pred == logs[need + i]))
      throw Error(ErrorCode::NonzeroResidual, "product formula residual on " + spare[i].info.surface + " " + spare[i].info.bundle);
    out.checked.push_back(spare[i].info);
  }
  return out;
}

UVPair uvPair(int k, int wOrder, int zOrder) {
  Series w = Series::variable({"w", "z"}, {wOrder, zOrder}, 0);
  Series z = w.variableLike(1);
  Series one = w.constantLike(Rational(1));
  UVPair p{k, w * z, z};
  for (int it = 0; it <= wOrder + zOrder + 1; ++it) {
    Series u = w * z * pow(one - p.v, Rational(k - 1));
    Series v = z * pow(one - p.u, Rational(k - 1));
    bool done = u == p.u && v == p.v;
    p.u = u;
    p.v = v;
    if (done) break;
  }
  return p;
}

Series uOverV(const UVPair& uv) {
  Series one = uv.u.constantLike(Rational(1));
  Series w = uv.u.variableLike(0);
  return w * pow(one - uv.v, Rational(uv.k - 1)) * pow(one - uv.u, Rational(1 - uv.k));
}

Series yOf(const UVPair& uv) {
  Series one = uv.u.constantLike(Rational(1));
  return uv.u * uv.v * invert(one - uv.u) * invert(one - uv.v);
}

Series uvSubstitute(const Series& expr, const UVPair& uv) {
  if (expr.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "expression must be a series in u and v");
  return substitute(expr, {uv.u, uv.v});
}

Series logOneMinus(const Series& x) { return log(x.constantLike(Rational(1)) - x); }

Rational bracketConstantTerm(int k, int n) {
  if (n == 0) return Rational(1);
  if (k == 1) return Rational(0);
  int kk = k >= 2 ? k : 2 - k;
  // x^{kk-2} + x^{kk-4} + ... + x^{2-kk}; the sign for k <= 0 squares away
  const int half = kk - 2, len = 2 * half + 1;
  std::vector<Rational> base(static_cast<std::size_t>(len), Rational(0));
  for (int e = -half; e <= half; e += 2) base[static_cast<std::size_t>(e + half)] = Rational(1);
  std::vector<Rational> acc{Rational(1)};
  int off = 0;
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<Rational> next(acc.size() + base.size() - 1, Rational(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a].isZero()) continue;
      for (std::size_t b = 0; b < base.size(); ++b)
        if (!base[b].isZero()) next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
    off += half;
  }
  return acc[static_cast<std::size_t>(off)];
}

Series ySeries(int yOrder) { return Series::variable({"y"}, {yOrder}, 0); }

Series g3OfY(int k, int yOrder) {
  Series y = ySeries(yOrder);
  Series one = y.constantLike(Rational(1));
  Series l = logOneMinus(y) * Rational(-(k - 1), 2);
  for (int n = 1; n <= yOrder; ++n) l.at(static_cast<std::size_t>(n)) -= bracketConstantTerm(k, n) / Rational(2 * n);
  return exp(l);
}

Series hOfC(int k, int yOrder) {
  Series h = ySeries(yOrder);
  Rational r(k - 1);
  for (int a = 1; a <= yOrder; ++a) h.at(static_cast<std::size_t>(a)) = -Rational(k) * Rational(k - 1) * pow(r, 2 * (a - 1));
  return h;
}

Series hOfCPrime(int yOrder) { return logOneMinus(ySeries(yOrder)); }

Series hOfD(int k, int yOrder) {
  Series h = ySeries(yOrder);
  for (int a = 1; a <= yOrder; ++a) h.at(static_cast<std::size_t>(a)) = -Rational(k) / Rational(2 * a) * bracketConstantTerm(k, a);
  return h;
}

Rational symRegCoefficient(int a, int m, int n, int k) {
  if (a == 0) return Rational(m == 0 && n == 0 ? 1 : 0);
  if (m < a || n < 0) return Rational(0);
  const long A = -a + static_cast<long>(n - m) * (k - 1), B = -a + static_cast<long>(m) * (k - 1);
  Rational sign(n % 2 ? -1 : 1);
  if (A != 0 && B != 0) {
    Rational pre = Rational(k - 2) * Rational(a) * Rational(static_cast<long>(n) * (k - 1) - static_cast<long>(a) * k) / (Rational(A) * Rational(B));
    return sign * pre * binomial(Rational(A), m - a) * binomial(Rational(B), n - m - a);
  }
  Rational km1(k - 1);
  return sign * (binomial(Rational(A), m - a) * binomial(Rational(B), n - m - a) -
                 km1 * km1 * binomial(Rational(A - 1), m - a - 1) * binomial(Rational(B - 1), n - m - a - 1));
}

namespace {

int hNeeded(int wOrder, int zOrder) { return std::min(wOrder, zOrder / 2); }

void requireHOrder(const Series& h, int wOrder, int zOrder) {
  if (h.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "h must be a series in y");
  if (h.orders()[0] < hNeeded(wOrder, zOrder)) throw Error(ErrorCode::TruncationTooSmall, "h is not known to the order the (w,z) box needs");
}

}  // namespace

Series hToFBySubstitution(const Series& h, int k, int wOrder, int zOrder) {
  requireHOrder(h, wOrder, zOrder);
  UVPair uv = uvPair(k, wOrder, zOrder);
  Series y = yOf(uv);
  Series r = y.constantLike(h.constantTerm());
  Series p = y.constantLike(Rational(1));
  for (int a = 1; a <= hNeeded(wOrder, zOrder); ++a) {
    p = p * y;
    const Rational& c = h.at(static_cast<std::size_t>(a));
    if (!c.isZero()) r += p * c;
  }
  return r;
}

Series hToFByFormula(const Series& h, int k, int wOrder, int zOrder) {
  requireHOrder(h, wOrder, zOrder);
  Series f({"w", "z"}, {wOrder, zOrder});
  const int A = hNeeded(wOrder, zOrder);
  for (int m = 0; m <= wOrder; ++m)
    for (int n = 0; n <= zOrder; ++n) {
      Rational acc(0);
      for (int a = 0; a <= std::min(m, A); ++a) {
        const Rational& c = h.at(static_cast<std::size_t>(a));
        if (!c.isZero()) acc += c * symRegCoefficient(a, m, n, k);
      }
      f.setCoeff({m, n}, acc);
    }
  return f;
}

Series hToF(const Series& h, int k, int wOrder, int zOrder) {
  Series a = hToFBySubstitution(h, k, wOrder, zOrder);
  Series b = hToFByFormula(h, k, wOrder, zOrder);
  if (!(a == b)) throw Error(ErrorCode::Mismatch, "uv-substitution and coefficient formula disagree");
  return a;
}

Series fToH(const Series& f, int k) {
  const int A = hNeeded(f.orders()[0], f.orders()[1]);
  Series h = ySeries(A);
  h.at(0) = f.coeff({0, 0});
  for (int a = 1; a <= A; ++a) {
    Rational acc = f.coeff({a, 2 * a});
    for (int b = 0; b < a; ++b) {
      const Rational& c = h.at(static_cast<std::size_t>(b));
      if (!c.isZero()) acc -= c * symRegCoefficient(b, a, 2 * a, k);
    }
    h.at(static_cast<std::size_t>(a)) = acc;
  }
  return h;
}

Report checkSymmetric(const Series& f) {
  Report rep("symmetric", nlohmann::json::object());
  const int W = f.orders()[0], Z = f.orders()[1];
  for (int m = 0; m <= W; ++m)
    for (int n = 0; n <= Z; ++n) {
      Rational a = f.coeff({m, n});
      if (n < m) {
        ++rep.checked;
        if (!a.isZero()) rep.fail("w^" + std::to_string(m) + " z^" + std::to_string(n) + " should vanish");
        continue;
      }
      if (n - m > W || n - m == m) continue;
      rep.expectEqual(a, f.coeff({n - m, n}), "w^" + std::to_string(m) + " z^" + std::to_string(n));
    }
  return rep;
}

std::vector<UniPoly> fitRegularity(const Series& f, int k, int d) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "regularity fits need an integer rank k >= 3");
  const int W = f.orders()[0], Z = f.orders()[1];
  if (Z < 2 * W - d) throw Error(ErrorCode::TruncationTooSmall, "z-order below 2 wOrder - d");
  std::vector<UniPoly> ps;
  for (int m = 0; m <= W; ++m) {
    const int deg = 2 * m - d, km = k * m;
    UniPoly p;
    if (deg >= 0) {
      std::vector<Rational> xs, ys;
      for (int n = 0; n <= deg; ++n) {
        Rational b = binomial(Rational(km), n);
        xs.emplace_back(n);
        ys.push_back((n % 2 ? -f.coeff({m, n}) : f.coeff({m, n})) / b);
      }
      p = interpolate(xs, ys);
    }
    for (int n = std::max(deg + 1, 0); n <= Z; ++n) {
      Rational expect = p.eval(Rational(n)) * binomial(Rational(km), n);
      if (n % 2) expect = -expect;
      if (!(expect == f.coeff({m, n})))
        throw Error(ErrorCode::ValidationFailure, "regularity fails at w^" + std::to_string(m) + " z^" + std::to_string(n));
    }
    ps.push_back(p);
  }
  return ps;
}

Report checkRegular(const Series& f, int k, int d) {
  Report rep("regular", {{"k", k}, {"d", d}});
  ++rep.checked;
  try {
    fitRegularity(f, k, d);
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

Series chernLimit(const Series& f, int k, int d) {
  auto ps = fitRegularity(f, k, d);
  Series r = Series({"w"}, {f.orders()[0]});
  for (int m = 0; m < static_cast<int>(ps.size()); ++m) {
    const int top = 2 * m - d;
    if (top < 0) continue;
    Rational ff(1);
    for (int i = 0; i < top; ++i) ff *= Rational(k * m - i);
    Rational c = ps[static_cast<std::size_t>(m)].coeff(top) * ff;
    r.at(static_cast<std::size_t>(m)) = d % 2 ? -c : c;
  }
  return r;
}

Series verlindeLimit(const Series& f, int k) {
  const int W = f.orders()[0];
  if (f.orders()[1] < k * W) throw Error(ErrorCode::TruncationTooSmall, "Verlinde limit needs z-order >= k wOrder");
  Series r({"w"}, {W});
  for (int m = 0; m <= W; ++m) r.at(static_cast<std::size_t>(m)) = f.coeff({m, k * m});
  return r;
}

Series composeUni(const Series& outer, const Series& inner) {
  if (outer.nvars() != 1 || inner.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "composeUni expects univariate series");
  if (!inner.constantTerm().isZero()) throw Error(ErrorCode::NonzeroConstantTerm, "inner series must vanish at 0");
  const int N = inner.orders()[0];
  if (outer.orders()[0] < N) throw Error(ErrorCode::TruncationTooSmall, "outer series shorter than the target order");
  Series r = inner.constantLike(outer.constantTerm());
  Series p = inner.constantLike(Rational(1));
  for (int j = 1; j <= N; ++j) {
    p = p * inner;
    const Rational& c = outer.at(static_cast<std::size_t>(j));
    if (!c.isZero()) r += p * c;
  }
  return r;
}

Series chernArgument(int k, int yOrder) {
  Series y = ySeries(yOrder);
  return y * pow(y.constantLike(Rational(1)) - y * Rational(k - 1), Rational(k - 2));
}

Series verlindeArgument(int k, int yOrder) {
  Series y = ySeries(yOrder);
  Series r = y * pow(y.constantLike(Rational(1)) - y, Rational(static_cast<long>(k) * (k - 2)));
  return k % 2 ? -r : r;
}

Report verifyChernVerlindeLimits(const Series& f, int k) {
  Report rep("chern-verlinde-limits", {{"k", k}});
  Series h = fToH(f, k);
  const int Y = std::min(h.orders()[0], f.orders()[0]);
  Series hy = h.truncate({Y});
  Series fc = chernLimit(f, k).truncate({Y});
  Series fv = verlindeLimit(f, k).truncate({Y});
  rep.expectEqual(composeUni(fc, chernArgument(k, Y)), hy, "Chern limit");
  rep.expectEqual(composeUni(fv, verlindeArgument(k, Y)), hy, "Verlinde limit");
  return rep;
}

namespace {

Series atZeroV(const Series& s) { return s.slice(2, 0).slice(2, 0); }

}  // namespace

CDEF buildCDEF(int k, int wOrder, int zOrder) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "the C' series needs two z-variables");
  HExpansion h(HRequest{k, wOrder, zOrder, 0, 2, 1});
  CDEF c;
  c.k = k;
  const auto& hmm = h.component(-1, -1);
  const auto& hm0 = h.component(-1, 0);
  c.Hmm = atZeroV(hmm);
  c.Hm0 = atZeroV(hm0);
  c.Hm1 = atZeroV(h.component(-1, 1));
  c.H00 = atZeroV(h.component(0, 0));
  // vars [w, z, v1, v2]
  c.C11 = hmm.slice(3, 0).slice(2, 2);
  c.Cprime = hmm.slice(3, 1).slice(2, 1);
  c.C2 = c.Cprime - c.C11 * Rational(2);
  c.D1 = -hm0.slice(3, 0).slice(2, 1);
  c.Eser = c.Hm1;
  c.Fser = c.H00;

  auto Dw = [](const Series& s) { return s.eulerDerivative(0); };
  auto Dz = [](const Series& s) { return s.eulerDerivative(1); };
  c.C = Dz(Dw(Dz(c.Hmm) - Dw(c.Hmm)));
  c.D = Dz(c.Hm0 + Dz(c.Hmm) * Rational(1, 2));
  Series K = Dw(Dz(c.Hmm) - Dw(c.Hmm)) - Dz(Dz(c.Hmm));
  c.E = c.Hm1 + K * Rational(1, 12);
  c.F = c.H00 + K * Rational(1, 4);
  return c;
}

std::array<Series, 5> logGFromH(const CDEF& c) {
  return {c.C2,
          c.C11 * Rational(2),
          (c.Fser - c.Eser * Rational(2)) * Rational(24) - c.C11 * Rational(4),
          c.C11 - c.D1,
          c.Eser * Rational(3) - c.Fser + (c.C11 - c.D1) * Rational(1, 2)};
}

Series closedFormG(int index, int k, int wOrder, int zOrder) {
  UVPair uv = uvPair(k, wOrder, zOrder);
  const Series& u = uv.u;
  const Series& v = uv.v;
  Series one = u.constantLike(Rational(1));
  Series omu = one - u, omv = one - v, omuv = one - u - v;
  Series a = pow(omu, Rational(k - 1)) - v;  // (1-u)^{k-1} - v
  const long k2 = static_cast<long>(k) * k;
  switch (index) {
    case 0:
      return pow(omuv, Rational(k)) * pow(omv, Rational(1 - k)) * invert(a);
    case 1:
      return pow(omv, Rational(k - 2)) * a * invert(omu) * pow(omuv, Rational(1 - k));
    case 2: {
      Series delta = omuv - u * v * Rational(k2 - 2 * k);
      Series t = one - uOverV(uv);
      return t * t * pow(omv, Rational((k - 2) * (k - 2))) * pow(a, Rational(2 * (k - 1))) *
             pow(omuv, Rational(-(k - 1) * (k - 1))) * pow(omu, Rational(2 * k - k2)) * invert(delta);
    }
    case 3: {
      Series y = yOf(uv);
      Series h = g3OfY(k, std::max(1, hNeeded(wOrder, zOrder)));
      Series r = one * h.constantTerm();
      Series p = one;
      for (int n = 1; n <= h.orders()[0]; ++n) {
        p = p * y;
        r += p * h.at(static_cast<std::size_t>(n));
      }
      return r;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "closed forms exist for G_0..G_3 only");
  }
}

namespace {

// D_w and D_z realized on series in [u, v].
struct UVOperators {
  int k;
  Series one, u, v, deltaInv;
  UVOperators(int k_, int U, int V) : k(k_) {
    one = Series::constant({"u", "v"}, {U, V}, Rational(1));
    u = one.variableLike(0);
    v = one.variableLike(1);
    deltaInv = invert(one - u - v - u * v * Rational(static_cast<long>(k) * k - 2 * k));
  }
  Series Dw(const Series& f) const {
    Series fu = f.eulerDerivative(0), fv = f.eulerDerivative(1);
    return ((one - u) * (one - v) * fu - u * (one - v) * fv * Rational(k - 1)) * deltaInv;
  }
  Series Dz(const Series& f) const {
    Series fu = f.eulerDerivative(0), fv = f.eulerDerivative(1);
    return ((one - u) * (one - v * Rational(k)) * fu + (one - v) * (one - u * Rational(k)) * fv) * deltaInv;
  }
};

}  // namespace

Report verifyDifferentialIdentities(int k, int wOrder, int zOrder) {
  Report rep("differential-identities", {{"k", k}, {"wOrder", wOrder}, {"zOrder", zOrder}});
  UVPair uv = uvPair(k, wOrder, zOrder);
  UVOperators ops(k, wOrder, zOrder);

  // chain-rule operators on a few test series
  std::vector<std::pair<std::string, Series>> tests{
      {"log(1-v)", logOneMinus(ops.v)},
      {"log(1-u)", logOneMinus(ops.u)},
      {"uv/(1-u)", ops.u * ops.v * invert(ops.one - ops.u)},
  };
  for (const auto& [name, f] : tests) {
    Series fwz = uvSubstitute(f, uv);
    rep.expectEqual(uvSubstitute(ops.Dw(f), uv), fwz.eulerDerivative(0), "D_w " + name);
    rep.expectEqual(uvSubstitute(ops.Dz(f), uv), fwz.eulerDerivative(1), "D_z " + name);
  }
  // the chain rule gives +(k-1)uv/Delta here
  Series target = ops.u * ops.v * ops.deltaInv * Rational(k - 1);
  rep.expectEqual(ops.Dw(tests[0].second), target, "D_w log(1-v) = (k-1)uv/Delta");

  // second derivatives of H_{-1,-1,k}
  HExpansion h(HRequest{k, wOrder, zOrder, -2, 0, 0});
  const Series& H = h.component(-1, -1);
  Series HzW = H.eulerDerivative(0).eulerDerivative(1);
  Series Hzz = H.eulerDerivative(1).eulerDerivative(1);
  Series Hww = H.eulerDerivative(0).eulerDerivative(0);
  Series one = uv.u.constantLike(Rational(1));
  Series lu = logOneMinus(uv.u), lv = logOneMinus(uv.v);
  Series la = log(pow(one - uv.u, Rational(k - 1)) - uv.v);
  rep.expectEqual(HzW, lu * Rational(-k), "D_w D_z H");
  rep.expectEqual(Hzz, (la - lu * Rational(k) - lv) * Rational(k), "D_z^2 H");
  rep.expectEqual(Hww, logOneMinus(uOverV(uv)) - lu, "D_w^2 H");
  return rep;
}

}  // namespace hilb

namespace hilb {

Report verifyMainTheorem(int k, int wOrder, int zOrder) {
  Report rep("main-theorem", {{"k", k}, {"worder", wOrder}, {"zorder", zOrder}});
  auto U = extractUniversal(Flavor::Full, k, wOrder, zOrder);
  rep.checked += U.checked.size();
  for (int i = 0; i <= 3; ++i)
    rep.expectEqual(exp(U.logG[static_cast<std::size_t>(i)]), closedFormG(i, k, wOrder, zOrder), "G" + std::to_string(i) + " closed form");
  if (k >= 2) {
    auto fromH = logGFromH(buildCDEF(k, wOrder, zOrder));
    for (std::size_t i = 0; i < 5; ++i) rep.expectEqual(fromH[i], U.logG[i], "log G" + std::to_string(i) + " from H");
  }
  return rep;
}

namespace {

// f(-w)
Series flipSign(const Series& f) {
  Series r = f;
  for (std::size_t n = 1; n < r.size(); n += 2) r.at(n) = -r.at(n);
  return r;
}

}  // namespace

Report verifySegreVerlinde(int k, int order) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "regularity fits need k >= 3");
  Report rep("segre-verlinde", {{"k", k}, {"order", order}});
  const int r = k - 1;
  auto U = extractUniversal(Flavor::Full, k, order, k * order);
  auto A = extractUniversal(Flavor::Chern, k, order, 0);
  auto B = extractUniversal(Flavor::Verlinde, k, order, 0);
  Series y = ySeries(order);
  Series one = y.constantLike(Rational(1));
  Series x = -(y * pow(one - y * Rational(r), Rational(r - 1)));
  Series t = -(y * pow(one - y, Rational(static_cast<long>(r) * r - 1)));
  struct Item {
    std::string name;
    Series f, logA, logB;
  };
  std::vector<Item> items{{"log G0G1", U.logG[0] + U.logG[1], A.logG[0] + A.logG[1], B.logG[1]},
                          {"log G3", U.logG[3], A.logG[3], B.logG[3]},
                          {"log G4", U.logG[4], A.logG[4], B.logG[4]}};
  for (const auto& it : items) {
    auto sym = checkSymmetric(it.f);
    sym.identity = it.name + " symmetric";
    rep.merge(sym);
    auto reg = checkRegular(it.f, k);
    reg.identity = it.name + " regular";
    rep.merge(reg);
    if (!reg.pass) continue;
    Series h = fToH(it.f, k).truncate({order});
    Series fc = flipSign(chernLimit(it.f, k));
    Series fv = verlindeLimit(it.f, k);
    if (k % 2 == 0) fv = flipSign(fv);
    rep.expectEqual(composeUni(fc, x), h, it.name + ": Chern limit at x");
    rep.expectEqual(composeUni(fv, t), h, it.name + ": Verlinde limit at t");
    rep.expectEqual(composeUni(it.logA, x), h, it.name + ": Chern extraction at x");
    rep.expectEqual(composeUni(it.logB, t), h, it.name + ": Verlinde extraction at t");
  }
  return rep;
}

}  // namespace hilb
