#include "hilb/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace hilb {

namespace {

Partition mergeParts(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

RF one() { return RF(Rational(1)); }

std::vector<std::vector<Rational>> invertMatrix(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].isZero()) ++piv;
    if (piv == n) throw Error(ErrorCode::RankDeficientMatrix, "singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) { a[col][j] *= f; inv[col][j] *= f; }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].isZero()) continue;
      Rational g = a[r][col];
      for (std::size_t j = 0; j < n; ++j) { a[r][j] -= g * a[col][j]; inv[r][j] -= g * inv[col][j]; }
    }
  }
  return inv;
}

// number of ways to distribute the parts of rho into slots with sums lambda
long countAssignments(const std::vector<int>& rho, std::size_t i, std::vector<int>& room) {
  if (i == rho.size()) {
    for (int r : room)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < rho[i]) continue;
    r -= rho[i];
    total += countAssignments(rho, i + 1, room);
    r += rho[i];
  }
  return total;
}

std::mutex macMu;

}  // namespace

SymFunc SymFunc::powerSum(const Partition& rho, int maxDegree, const RF& c) {
  SymFunc f(maxDegree);
  f.addTerm(rho, c);
  return f;
}

RF SymFunc::coeff(const Partition& rho) const {
  auto it = terms_.find(rho);
  return it == terms_.end() ? RF() : it->second;
}

void SymFunc::addTerm(const Partition& rho, const RF& c) {
  if (c.zero() || rho.weight() > maxDegree_) return;
  auto [it, fresh] = terms_.emplace(rho, c);
  if (!fresh) {
    it->second += c;
    if (it->second.zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::degreePart(int d) const {
  SymFunc r(maxDegree_);
  for (const auto& [rho, c] : terms_)
    if (rho.weight() == d) r.terms_.emplace(rho, c);
  return r;
}

SymFunc SymFunc::withMaxDegree(int d) const {
  SymFunc r(d);
  for (const auto& [rho, c] : terms_) r.addTerm(rho, c);
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [rho, c] : o.terms_) addTerm(rho, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [rho, c] : o.terms_) addTerm(rho, -c);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r(std::min(a.maxDegree_, b.maxDegree_));
  for (const auto& [ra, ca] : a.terms_)
    for (const auto& [rb, cb] : b.terms_)
      if (ra.weight() + rb.weight() <= r.maxDegree_) r.addTerm(mergeParts(ra, rb), ca * cb);
  return r;
}

SymFunc operator*(SymFunc a, const RF& s) {
  if (s.zero()) return SymFunc(a.maxDegree_);
  for (auto& [rho, c] : a.terms_) c *= s;
  return a;
}

SymFunc symExp(const SymFunc& g) {
  if (!g.coeff(Partition()).zero()) throw Error(ErrorCode::NonzeroConstantTerm, "symmetric exp needs zero constant term");
  SymFunc result = SymFunc::constant(one(), g.maxDegree());
  SymFunc power = result;
  for (int k = 1; k <= g.maxDegree(); ++k) {
    power = power * g * RF(Rational(1, k));
    result += power;
  }
  return result;
}

std::vector<std::vector<Rational>> powerToMonomial(int n) {
  auto parts = partitionsOf(n);
  std::vector<std::vector<Rational>> m(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<int> room = parts[j].parts();
      m[i][j] = Rational(countAssignments(parts[i].parts(), 0, room));
    }
  return m;
}

namespace {

const std::vector<std::vector<Rational>>& monomialToPower(int n) {
  static std::map<int, std::vector<std::vector<Rational>>> cache;
  std::lock_guard<std::mutex> lock(macMu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // m = R^{-1} p
  return cache.emplace(n, invertMatrix(powerToMonomial(n))).first->second;
}

}  // namespace

SymFunc monomialSym(const Partition& lambda) {
  int n = lambda.weight();
  auto parts = partitionsOf(n);
  const auto& inv = monomialToPower(n);
  std::size_t row = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), lambda) - parts.begin());
  SymFunc f(n);
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!inv[row][j].isZero()) f.addTerm(parts[j], RF(inv[row][j]));
  return f;
}

Alphabet alphabetAdams(const Alphabet& a, int n) {
  return a.transform(
      [n](const Exponent& e) {
        Exponent r = e;
        for (auto& x : r) x *= n;
        return r;
      },
      [n](const RF& c) { return c.adams(n); });
}

Alphabet scalarAlphabet(const RF& c) { return Alphabet({}, c); }

RFSeries alphabetSeries(const Alphabet& a, const std::vector<int>& orders) {
  RFSeries s(a.vars(), orders);
  for (const auto& [e, c] : a.terms()) {
    for (int x : e)
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "alphabet has negative exponents");
    if (s.inBox(e)) s.at(s.indexOf(e)) += c;
  }
  return s;
}

RFSeries plethysticEvaluate(const SymFunc& f, const Alphabet& a, const std::vector<int>& orders) {
  std::map<int, RFSeries> pn;
  auto power = [&](int n) -> const RFSeries& {
    auto it = pn.find(n);
    if (it == pn.end()) it = pn.emplace(n, alphabetSeries(alphabetAdams(a, n), orders)).first;
    return it->second;
  };
  RFSeries result(a.vars(), orders);
  for (const auto& [rho, c] : f.terms()) {
    RFSeries term = RFSeries::constant(a.vars(), orders, c);
    for (int part : rho.parts()) term = term * power(part);
    result += term;
  }
  return result;
}

RF plethysticEvaluateScalar(const SymFunc& f, const RF& c) {
  std::map<int, RF> pn;
  RF result;
  for (const auto& [rho, coef] : f.terms()) {
    RF term = coef;
    for (int part : rho.parts()) {
      auto it = pn.find(part);
      if (it == pn.end()) it = pn.emplace(part, c.adams(part)).first;
      term *= it->second;
    }
    result += term;
  }
  return result;
}

RFSeries plethysticExp(const Alphabet& a, const std::vector<int>& orders) {
  if (!a.coeff(Exponent(a.nvars(), 0)).zero()) throw Error(ErrorCode::ConstantTermPresent, "plethystic exponential of an alphabet with constant term");
  int total = 0;
  for (int o : orders) total += o;
  RFSeries g(a.vars(), orders);
  for (int n = 1; n <= total; ++n) g += alphabetSeries(alphabetAdams(a, n), orders) * RF(Rational(1, n));
  return exp(g);
}

std::vector<MultiPoly<Rational>> macdonaldMonomialCoefficients(const Partition& mu) {
  struct Cell { int row, col, arm, leg, below; };
  std::vector<Cell> cells;
  Partition conj = mu.conjugate();
  std::map<std::pair<int, int>, int> where;
  for (int row = mu.length() - 1; row >= 0; --row)
    for (int col = 0; col < mu.part(row); ++col) {
      where[{row, col}] = static_cast<int>(cells.size());
      cells.push_back({row, col, mu.part(row) - col - 1, conj.part(col) - row - 1, -1});
    }
  for (auto& c : cells)
    if (c.row > 0) c.below = where[{c.row - 1, c.col}];
  // attacking pairs (u before v in reading order)
  std::vector<std::pair<int, int>> attacks;
  for (std::size_t u = 0; u < cells.size(); ++u)
    for (std::size_t v = u + 1; v < cells.size(); ++v) {
      const Cell& a = cells[u];
      const Cell& b = cells[v];
      if (a.row == b.row || (a.row == b.row + 1 && b.col < a.col)) attacks.emplace_back(u, v);
    }
  int n = mu.weight();
  std::vector<MultiPoly<Rational>> out;
  for (const auto& lambda : partitionsOf(n)) {
    std::vector<int> word;
    for (int i = 0; i < lambda.length(); ++i) word.insert(word.end(), lambda.part(i), i + 1);
    std::map<std::pair<int, int>, long> counts;
    do {
      int inv = 0, maj = 0;
      for (const auto& [u, v] : attacks)
        if (word[u] > word[v]) ++inv;
      for (std::size_t u = 0; u < cells.size(); ++u) {
        int b = cells[u].below;
        if (b >= 0 && word[u] > word[b]) {
          maj += cells[u].leg + 1;
          inv -= cells[u].arm;
        }
      }
      ++counts[{inv, maj}];
    } while (std::next_permutation(word.begin(), word.end()));
    MultiPoly<Rational> poly(RF::vars());
    for (const auto& [e, c] : counts) poly.addTerm({e.first, e.second}, Rational(c));
    out.push_back(std::move(poly));
  }
  return out;
}

SymFunc modifiedMacdonald(const Partition& mu) {
  int cap = maxWeight(6);
  if (mu.weight() > cap) throw Error(ErrorCode::WeightTooLarge, "partition weight " + std::to_string(mu.weight()) + " exceeds cap " + std::to_string(cap));
  static std::map<Partition, SymFunc> cache;
  {
    std::lock_guard<std::mutex> lock(macMu);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  int n = mu.weight();
  auto parts = partitionsOf(n);
  auto mono = macdonaldMonomialCoefficients(mu);
  const auto& inv = monomialToPower(n);
  SymFunc f(n);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    RF::Poly c(RF::vars());
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!inv[i][j].isZero()) c += mono[i] * inv[i][j];
    f.addTerm(parts[j], RF(c));
  }
  std::lock_guard<std::mutex> lock(macMu);
  return cache.emplace(mu, f).first->second;
}

namespace {

RFSeries boxProductSeries(const Partition& mu, int order) {
  RFSeries r = RFSeries::constant({"u"}, {order}, one());
  for (const auto& b : mu.boxes()) {
    RFSeries f = RFSeries::constant({"u"}, {order}, one());
    if (order >= 1) f.setCoeff({1}, -RF::monomial(Rational(1), b.c, b.r));
    r = r * f;
  }
  return r;
}

RF tInverse(const Partition& p) {
  return RF::monomial(Rational(1), -static_cast<int>(p.conjugate().nStat()), -static_cast<int>(p.nStat()));
}

nlohmann::json partJson(const Partition& p) { return p.parts(); }

}  // namespace

Report verifyCauchy(int n) {
  Report rep("cauchy", {{"n", n}});
  auto parts = partitionsOf(n);
  std::vector<SymFunc> h;
  std::vector<RF> ninv;
  for (const auto& lam : parts) {
    h.push_back(modifiedMacdonald(lam));
    ninv.push_back(statNInverse(lam));
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) {
      RF lhs;
      for (std::size_t l = 0; l < parts.size(); ++l) lhs += h[l].coeff(parts[i]) * h[l].coeff(parts[j]) * ninv[l];
      RF rhs;
      if (i == j) {
        rhs = RF(Rational(parts[i].length() % 2 ? -1 : 1) / parts[i].zee());
        for (int p : parts[i].parts()) rhs *= RF::oneMinusInverse(p, 0) * RF::oneMinusInverse(0, p);
      }
      rep.expectEqual(lhs, rhs, "coefficient of p" + parts[i].toString() + "[X] p" + parts[j].toString() + "[Y]");
    }
  return rep;
}

Report verifyGarsiaTesler(const Partition& mu, int degreeCap) {
  Report rep("garsia-tesler", {{"mu", partJson(mu)}, {"degreeCap", degreeCap}});
  // left side: p_n -> p_n + 1
  SymFunc hmu = mu.weight() == 0 ? SymFunc::constant(one(), 0) : modifiedMacdonald(mu);
  SymFunc lhs(degreeCap);
  for (const auto& [rho, c] : hmu.terms()) {
    SymFunc term = SymFunc::constant(c, degreeCap);
    for (int p : rho.parts()) term = term * (SymFunc::powerSum(Partition({p}), degreeCap) + SymFunc::constant(one(), degreeCap));
    lhs += term;
  }
  SymFunc g(degreeCap);
  for (int k = 1; k <= degreeCap; ++k)
    g.addTerm(Partition({k}), RF::oneMinusInverse(k, 0) * RF::oneMinusInverse(0, k) * RF(Rational(1, k)));
  SymFunc e = symExp(g);
  RF dmu(statD(mu));
  SymFunc sum(degreeCap);
  for (const auto& lam : partitionsUpTo(degreeCap)) {
    SymFunc hl = lam.weight() == 0 ? SymFunc::constant(one(), degreeCap) : modifiedMacdonald(lam).withMaxDegree(degreeCap);
    RF scalar = lam.weight() == 0 ? one() : plethysticEvaluateScalar(modifiedMacdonald(lam), dmu);
    scalar *= tInverse(lam) * statNInverse(lam);
    if (lam.weight() % 2) scalar = -scalar;
    sum += hl * scalar;
  }
  SymFunc rhs = e * sum;
  for (const auto& lam : partitionsUpTo(degreeCap))
    rep.expectEqual(lhs.coeff(lam), rhs.coeff(lam), "coefficient of p" + lam.toString());
  return rep;
}

Report verifyKoornwinder(const Partition& mu, const Partition& nu) {
  Report rep("koornwinder", {{"mu", partJson(mu)}, {"nu", partJson(nu)}});
  int order = mu.weight() + nu.weight();
  auto alpha = [&](const Partition& p) {
    Alphabet a({"u"}, one());
    a.addTerm({1}, RF(statD(p)));
    return a;
  };
  auto hEval = [&](const Partition& p, const Alphabet& a) {
    if (p.weight() == 0) return RFSeries::constant({"u"}, {order}, one());
    return plethysticEvaluate(modifiedMacdonald(p), a, {order});
  };
  RFSeries lhs = hEval(nu, alpha(mu)) * boxProductSeries(mu, order);
  RFSeries rhs = hEval(mu, alpha(nu)) * boxProductSeries(nu, order);
  for (int i = 0; i <= order; ++i) rep.expectEqual(lhs.coeff({i}), rhs.coeff({i}), "coefficient of u^" + std::to_string(i));
  // u -> infinity limit, cross-multiplied by T_mu T_nu
  auto scalar = [&](const Partition& p, const Partition& other) {
    if (p.weight() == 0) return one();
    return plethysticEvaluateScalar(modifiedMacdonald(p), RF(statD(other)));
  };
  RF left = scalar(nu, mu) * RF(statT(mu));
  RF right = scalar(mu, nu) * RF(statT(nu));
  if (nu.weight() % 2) left = -left;
  if (mu.weight() % 2) right = -right;
  rep.expectEqual(left, right, "u -> infinity limit");
  return rep;
}

Report verifyProductSpecialization(const Partition& mu) {
  Report rep("one-minus-u", {{"mu", partJson(mu)}});
  int n = mu.weight();
  Alphabet a({"u"}, one());
  a.addTerm({1}, RF(Rational(-1)));
  RFSeries lhs = n == 0 ? RFSeries::constant({"u"}, {n}, one()) : plethysticEvaluate(modifiedMacdonald(mu), a, {n});
  RFSeries rhs = boxProductSeries(mu, n);
  for (int i = 0; i <= n; ++i) rep.expectEqual(lhs.coeff({i}), rhs.coeff({i}), "coefficient of u^" + std::to_string(i));
  return rep;
}

Report verifyOneVariable(const Partition& mu) {
  Report rep("one-variable", {{"mu", partJson(mu)}});
  int n = mu.weight();
  Alphabet a = Alphabet::variable({"w"}, 0);
  RFSeries lhs = plethysticEvaluate(modifiedMacdonald(mu), a, {n});
  for (int i = 0; i <= n; ++i) rep.expectEqual(lhs.coeff({i}), i == n ? one() : RF(), "coefficient of w^" + std::to_string(i));
  return rep;
}

}  // namespace hilb
