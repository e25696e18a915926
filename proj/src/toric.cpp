#include "hilb/toric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hilb/parallel.hpp"
#include "hilb/slope.hpp"

namespace hilb {

int EquivariantBundle::rank() const {
  int p = plus.empty() ? 0 : static_cast<int>(plus[0].size());
  int m = minus.empty() ? 0 : static_cast<int>(minus[0].size());
  return p - m;
}

bool EquivariantBundle::honest() const {
  for (const auto& w : minus)
    if (!w.empty()) return false;
  return true;
}

ToricSurface surfaceFromRays(std::string name, std::vector<std::array<int, 2>> rays) {
  ToricSurface s{std::move(name), std::move(rays), {}};
  const std::size_t M = s.rays.size();
  if (M < 3) throw Error(ErrorCode::InvalidArgument, "a complete fan needs at least three rays");
  for (std::size_t i = 0; i < M; ++i) {
    const auto& u = s.rays[i];
    const auto& v = s.rays[(i + 1) % M];
    if (u[0] * v[1] - u[1] * v[0] != 1) throw Error(ErrorCode::InvalidArgument, "cone " + std::to_string(i) + " is not smooth and positively oriented");
    // dual basis of (u, v)
    s.points.push_back({LinearForm{v[1], -v[0]}, LinearForm{-u[1], u[0]}});
  }
  return s;
}

std::vector<std::string> builtinSurfaceNames() {
  return {"P2", "P1xP1", "F0", "F1", "F2", "F3", "Bl1P2", "Bl2P2", "Bl3P2"};
}

ToricSurface builtinSurface(const std::string& name) {
  std::string key;
  for (char ch : name)
    if (ch != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "p2") return surfaceFromRays("P2", {{1, 0}, {0, 1}, {-1, -1}});
  if (key == "p1xp1") return surfaceFromRays("P1xP1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (key.size() == 2 && key[0] == 'f' && key[1] >= '0' && key[1] <= '3') {
    int a = key[1] - '0';
    return surfaceFromRays("F" + std::to_string(a), {{1, 0}, {0, 1}, {-1, a}, {0, -1}});
  }
  if (key == "bl1p2") return surfaceFromRays("Bl1P2", {{1, 0}, {1, 1}, {0, 1}, {-1, -1}});
  if (key == "bl2p2") return surfaceFromRays("Bl2P2", {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}});
  if (key == "bl3p2") return surfaceFromRays("Bl3P2", {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  throw Error(ErrorCode::UnknownSurface, "unknown surface " + name);
}

EquivariantBundle equivariantLineBundle(const ToricSurface& s, const std::vector<int>& divisor) {
  const std::size_t M = s.rays.size();
  if (divisor.size() != M) throw Error(ErrorCode::BadDivisorData, "divisor needs one entry per ray");
  EquivariantBundle b;
  for (std::size_t i = 0; i < M; ++i) {
    const auto& p = s.points[i];
    b.plus.push_back({divisor[i] * p.t1 + divisor[(i + 1) % M] * p.t2});
    b.minus.emplace_back();
  }
  return b;
}

EquivariantBundle trivialBundle(const ToricSurface& s, int rank) {
  EquivariantBundle b;
  b.plus.assign(s.points.size(), std::vector<LinearForm>(static_cast<std::size_t>(rank)));
  b.minus.assign(s.points.size(), {});
  return b;
}

EquivariantBundle directSum(const EquivariantBundle& a, const EquivariantBundle& b) {
  if (a.plus.empty()) return b;
  if (b.plus.empty()) return a;
  if (a.plus.size() != b.plus.size()) throw Error(ErrorCode::InvalidArgument, "bundles live on different surfaces");
  EquivariantBundle r = a;
  for (std::size_t i = 0; i < r.plus.size(); ++i) {
    r.plus[i].insert(r.plus[i].end(), b.plus[i].begin(), b.plus[i].end());
    r.minus[i].insert(r.minus[i].end(), b.minus[i].begin(), b.minus[i].end());
  }
  return r;
}

EquivariantBundle kTheoryClass(const EquivariantBundle& v, const EquivariantBundle& w) {
  EquivariantBundle neg{w.minus, w.plus};
  return directSum(v, neg);
}

namespace {

std::vector<int> parseInts(const std::string& body) {
  std::vector<int> r;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + item + "'");
    }
  }
  return r;
}

EquivariantBundle parseSummand(const ToricSurface& s, const std::string& tok) {
  const std::size_t M = s.rays.size();
  if (tok == "O") return trivialBundle(s, 1);
  if (tok.size() < 3 || tok[0] != 'O') throw Error(ErrorCode::ParseError, "bad bundle summand '" + tok + "'");
  char open = tok[1], close = tok.back();
  std::string body = tok.substr(2, tok.size() - 3);
  auto d = parseInts(body);
  std::vector<int> div(M, 0);
  if (open == '[' && close == ']') {
    if (d.size() != M) throw Error(ErrorCode::BadDivisorData, "expected " + std::to_string(M) + " ray coefficients");
    div = d;
  } else if (open == '(' && close == ')') {
    if (s.name == "P2" && d.size() == 1) {
      div[0] = d[0];
    } else if ((s.name == "P1xP1" || s.name == "F0") && d.size() == 2) {
      div[0] = d[0];
      div[1] = d[1];
    } else {
      throw Error(ErrorCode::BadDivisorData, "O(...) notation is defined for P2 and P1xP1 only; use O[d0,...]");
    }
  } else {
    throw Error(ErrorCode::ParseError, "bad bundle summand '" + tok + "'");
  }
  return equivariantLineBundle(s, div);
}

}  // namespace

EquivariantBundle parseBundle(const ToricSurface& s, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return trivialBundle(s, 0);
  EquivariantBundle pos = trivialBundle(s, 0), neg = trivialBundle(s, 0);
  int depth = 0;
  bool negative = false;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorCode::ParseError, "empty bundle summand");
    auto b = parseSummand(s, cur);
    if (negative) neg = directSum(neg, b);
    else pos = directSum(pos, b);
    cur.clear();
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    char ch = t[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !cur.empty()) {
      flush();
      negative = ch == '-';
      continue;
    }
    cur += ch;
  }
  flush();
  return kTheoryClass(pos, neg);
}

namespace {

struct PointSums {
  UniRatFunc inv, tangent, c1, c1sq, c2, c1T, TT;
};

UniPoly sumForms(const std::vector<LinearForm>& ws) {
  UniPoly r;
  for (const auto& w : ws) r += w.onLine();
  return r;
}

UniPoly e2Forms(const std::vector<LinearForm>& ws) {
  UniPoly r;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) r += ws[i].onLine() * ws[j].onLine();
  return r;
}

UniPoly p2Forms(const std::vector<LinearForm>& ws) {
  UniPoly r;
  for (const auto& w : ws) r += w.onLine() * w.onLine();
  return r;
}

// Localization sums on the line a2 = c a1, each a homogeneous expression of
// degree 0 (or -2, -1 for the vanishing sums) in a1 evaluated at a1 = 1.
PointSums localizationSums(const ToricSurface& s, const EquivariantBundle& a) {
  PointSums r;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    UniPoly T1 = p.t1.onLine(), T2 = p.t2.onLine();
    UniRatFunc inv(UniPoly(Rational(1)), T1 * T2);
    UniPoly e1v = sumForms(a.plus[i]), e1x = sumForms(a.minus[i]);
    UniPoly c1 = e1v - e1x;
    // c(V)/c(W) in degree 2: e2(v) - e1(v) e1(x) + h2(x)
    UniPoly c2 = e2Forms(a.plus[i]) - e1v * e1x + (e1x * e1x - e2Forms(a.minus[i]));
    UniPoly T = T1 + T2;
    r.inv += inv;
    r.tangent += inv * UniRatFunc(T, UniPoly(Rational(1)));
    r.c1 += inv * UniRatFunc(c1, UniPoly(Rational(1)));
    r.c1sq += inv * UniRatFunc(c1 * c1, UniPoly(Rational(1)));
    r.c2 += inv * UniRatFunc(c2, UniPoly(Rational(1)));
    r.c1T += inv * UniRatFunc(T * c1, UniPoly(Rational(1)));
    r.TT += inv * UniRatFunc(T * T, UniPoly(Rational(1)));
  }
  return r;
}

Rational constantOf(const UniRatFunc& f, const std::string& what) {
  if (!f.isConstant()) throw Error(ErrorCode::NonConstantResult, what + " depends on the equivariant parameters: " + f.toString());
  return f.constantValue();
}

}  // namespace

ChernNumbers chernNumbers(const ToricSurface& s, const EquivariantBundle& a) {
  if (a.plus.size() != s.points.size() || a.minus.size() != s.points.size())
    throw Error(ErrorCode::InvalidArgument, "weight table does not match the surface");
  PointSums ps = localizationSums(s, a);
  ChernNumbers n;
  n.c2 = constantOf(ps.c2, "integral of c2");
  n.c1sq = constantOf(ps.c1sq, "integral of c1^2");
  n.c1K = -constantOf(ps.c1T, "integral of c1 c1(T)");
  n.K2 = constantOf(ps.TT, "integral of c1(T)^2");
  n.euler = Rational(static_cast<long>(s.points.size()));
  n.chiO = (n.K2 + n.euler) / Rational(12);
  n.chiDet = (n.c1sq - n.c1K) / Rational(2) + n.chiO;
  return n;
}

Rational c2BySubstitution(const ToricSurface& s, const EquivariantBundle& a) {
  UniRatFunc sum;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& pt = s.points[i];
    UniPoly p1 = sumForms(a.plus[i]) - sumForms(a.minus[i]);
    UniPoly p2 = p2Forms(a.plus[i]) - p2Forms(a.minus[i]);
    // e2 = (p1^2 - p2) / 2
    sum += UniRatFunc((p1 * p1 - p2) * Rational(1, 2), pt.t1.onLine() * pt.t2.onLine());
  }
  return constantOf(sum, "substituted c2");
}

Report verifyVanishing(const ToricSurface& s, const EquivariantBundle& a) {
  Report rep("localization-vanishing", {{"surface", s.name}, {"rank", a.rank()}});
  PointSums ps = localizationSums(s, a);
  rep.expectEqual(ps.inv, UniRatFunc(), "sum 1/(t1 t2)");
  rep.expectEqual(ps.tangent, UniRatFunc(), "sum (t1+t2)/(t1 t2)");
  rep.expectEqual(ps.c1, UniRatFunc(), "sum c1/(t1 t2)");
  for (const auto* f : {&ps.c1sq, &ps.c2, &ps.c1T, &ps.TT}) {
    ++rep.checked;
    if (!f->isConstant()) rep.fail("non-constant localization sum " + f->toString());
  }
  return rep;
}

const std::vector<Rational>& defaultSlopes() {
  static const std::vector<Rational> s{Rational(-7, 3), Rational(11, 5), Rational(-13, 8), Rational(19, 7), Rational(-23, 11)};
  return s;
}

namespace {

struct PointWeights {
  Rational tau1, tau2;
  std::vector<Rational> v, x;
};

std::vector<PointWeights> weightsOnSlope(const ToricSurface& s, const EquivariantBundle& a, const Rational& c) {
  std::vector<PointWeights> r;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    PointWeights p{s.points[i].t1.at(c), s.points[i].t2.at(c), {}, {}};
    if (p.tau1.isZero() || p.tau2.isZero()) throw Error(ErrorCode::DegenerateSlope, "tangent weight vanishes on the slope line");
    for (const auto& w : a.plus[i]) p.v.push_back(w.at(c));
    for (const auto& w : a.minus[i]) p.x.push_back(w.at(c));
    r.push_back(std::move(p));
  }
  return r;
}

TruncatedSeries<Rational> productOf(const std::vector<TruncatedSeries<Rational>>& fs) {
  TruncatedSeries<Rational> r = fs.at(0);
  for (std::size_t i = 1; i < fs.size(); ++i) r = r * fs[i];
  return r;
}

TruncatedSeries<Rational> hilbKOnSlope(const ToricSurface& s, const EquivariantBundle& a, int wOrder, int zOrder, const Rational& c) {
  auto pts = weightsOnSlope(s, a, c);
  auto factors = parallelMap<TruncatedSeries<Rational>>(pts.size(), [&](std::size_t i) {
    SlopeSpec<Rational> spec;
    spec.alpha = -pts[i].tau1;
    spec.beta = -pts[i].tau2;
    spec.payloadVars = {"z"};
    spec.payloadOrders = {zOrder};
    for (const auto& v : pts[i].v) spec.entries.push_back({1, {1}, v, {}});
    for (const auto& x : pts[i].x) spec.entries.push_back({-1, {1}, x, {}});
    spec.wOrder = wOrder;
    spec.sOrder = 2 * wOrder;
    return slopeOmega(spec);
  });
  auto prod = productOf(factors);
  if (lowestSlopeLayer(prod) < 0) throw Error(ErrorCode::PoleSurvived, "principal part survives in the fixed-point product");
  return slopeLayer(prod, 0);
}

TruncatedSeries<Rational> kernelOnSlope(const ToricSurface& s, const EquivariantBundle& a, int wOrder, bool verlinde, const Rational& c) {
  auto pts = weightsOnSlope(s, a, c);
  auto factors = parallelMap<TruncatedSeries<Rational>>(pts.size(), [&](std::size_t i) {
    KernelSpec<Rational> spec;
    spec.tau1 = pts[i].tau1;
    spec.tau2 = pts[i].tau2;
    for (const auto& v : pts[i].v) spec.entries.emplace_back(1, v);
    for (const auto& x : pts[i].x) spec.entries.emplace_back(-1, x);
    spec.wOrder = wOrder;
    spec.sOrder = 2 * wOrder;
    spec.verlinde = verlinde;
    return slopeKernel(spec);
  });
  auto prod = productOf(factors);
  if (lowestSlopeLayer(prod) < 0) throw Error(ErrorCode::PoleSurvived, "principal part survives in the fixed-point product");
  return slopeLayer(prod, 0);
}

// Runs f on the first two usable slopes and insists on agreement.
template <class Fn>
TruncatedSeries<Rational> onTwoSlopes(Fn&& f) {
  std::vector<TruncatedSeries<Rational>> got;
  for (const auto& c : defaultSlopes()) {
    try {
      got.push_back(f(c));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateSlope) throw;
      continue;
    }
    if (got.size() == 2) break;
  }
  if (got.size() < 2) throw Error(ErrorCode::DegenerateSlope, "no two usable slopes among the defaults");
  if (!(got[0] == got[1])) throw Error(ErrorCode::SlopeDependence, "result differs between slopes");
  return got[0];
}

}  // namespace

TruncatedSeries<Rational> hilbK(const ToricSurface& s, const EquivariantBundle& a, int wOrder, int zOrder) {
  return onTwoSlopes([&](const Rational& c) { return hilbKOnSlope(s, a, wOrder, zOrder, c); });
}

TruncatedSeries<Rational> chernSeries(const ToricSurface& s, const EquivariantBundle& a, int wOrder) {
  return onTwoSlopes([&](const Rational& c) { return kernelOnSlope(s, a, wOrder, false, c); });
}

TruncatedSeries<Rational> verlindeSeries(const ToricSurface& s, const EquivariantBundle& a, int wOrder) {
  auto r = onTwoSlopes([&](const Rational& c) { return kernelOnSlope(s, a, wOrder, true, c); });
  if (a.honest()) {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r.at(i).isInteger()) throw Error(ErrorCode::NonIntegerVerlinde, "Euler characteristic " + r.at(i).toString() + " is not an integer");
  }
  return r;
}

TruncatedSeries<Rational> verlindeInvariant(const ToricSurface& s, const EquivariantBundle& a, int wOrder) {
  return verlindeSeries(s, kTheoryClass(a, trivialBundle(s, 1)), wOrder);
}

TruncatedSeries<Rational> specializeChern(const TruncatedSeries<Rational>& I, int k) {
  const int N = I.orders()[0], Z = I.orders()[1];
  if (Z < k * N) throw Error(ErrorCode::TruncationTooSmall, "z-order below k * wOrder");
  TruncatedSeries<Rational> r({"w"}, {N});
  for (int n = 0; n <= N; ++n) {
    // eps^{(2-k)n} sum_j I_{n,j} (1+eps)^{kn-j}
    const int shift = (k - 2) * n;
    auto epsCoeff = [&](int i) {
      Rational acc(0);
      for (int j = 0; j <= Z; ++j) {
        const Rational& x = I.coeff({n, j});
        if (!x.isZero()) acc += x * binomial(Rational(k * n - j), i);
      }
      return acc;
    };
    for (int i = 0; i < shift; ++i)
      if (!epsCoeff(i).isZero()) throw Error(ErrorCode::PoleSurvived, "Chern specialization has a pole in epsilon");
    if (shift < 0) continue;
    Rational v = epsCoeff(shift);
    r.at(static_cast<std::size_t>(n)) = n % 2 ? -v : v;
  }
  return r;
}

TruncatedSeries<Rational> specializeVerlinde(const TruncatedSeries<Rational>& I, int k) {
  const int N = I.orders()[0], Z = I.orders()[1];
  if (Z < k * N) throw Error(ErrorCode::TruncationTooSmall, "z-order below k * wOrder");
  TruncatedSeries<Rational> r({"w"}, {N});
  for (int n = 0; n <= N; ++n) {
    Rational v = I.coeff({n, k * n});
    r.at(static_cast<std::size_t>(n)) = ((k + 1) * n) % 2 ? -v : v;
  }
  return r;
}

}  // namespace hilb
