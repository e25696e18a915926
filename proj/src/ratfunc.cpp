#include "hilb/ring/ratfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace hilb {

namespace {

std::mutex cacheMu;

int eulerPhi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

void extendedGcd(long a, long b, long& x, long& y) {
  // x a + y b = gcd(a, b)
  if (b == 0) { x = a >= 0 ? 1 : -1; y = 0; return; }
  long x1, y1;
  extendedGcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

CycloPrime normalizedDirection(int a, int b, int& g, bool& flipped) {
  g = std::gcd(std::abs(a), std::abs(b));
  a /= g;
  b /= g;
  flipped = a < 0 || (a == 0 && b < 0);
  if (flipped) { a = -a; b = -b; }
  return CycloPrime{a, b, 1};
}

// Phi_d(y^n) = prod of Phi_m(y) over the returned m.
std::vector<int> adamsSplit(int d, int n) {
  static std::map<std::pair<int, int>, std::vector<int>> cache;
  {
    std::lock_guard<std::mutex> lock(cacheMu);
    auto it = cache.find({d, n});
    if (it != cache.end()) return it->second;
  }
  const UniPoly& phi = cyclotomic(d);
  std::vector<Rational> c(static_cast<std::size_t>(phi.degree()) * n + 1);
  for (int i = 0; i <= phi.degree(); ++i) c[static_cast<std::size_t>(i) * n] = phi.coeff(i);
  UniPoly rest(std::move(c));
  std::vector<int> out;
  for (int m = 1; m <= d * n; ++m) {
    if ((d * n) % m) continue;
    UniPoly q, r;
    UniPoly::divmod(rest, cyclotomic(m), q, r);
    if (r.zero()) { out.push_back(m); rest = q; }
  }
  if (rest.degree() != 0) throw Error(ErrorCode::NotFactorable, "adams split failed");
  std::lock_guard<std::mutex> lock(cacheMu);
  cache[{d, n}] = out;
  return out;
}

}  // namespace

const UniPoly& cyclotomic(int d) {
  static std::map<int, UniPoly> cache;
  {
    std::lock_guard<std::mutex> lock(cacheMu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  std::vector<Rational> c(d + 1);
  c[0] = Rational(-1);
  c[d] = Rational(1);
  UniPoly p(std::move(c));
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    UniPoly q, r;
    UniPoly::divmod(p, cyclotomic(e), q, r);
    p = q;
  }
  std::lock_guard<std::mutex> lock(cacheMu);
  return cache.emplace(d, std::move(p)).first->second;
}

bool dividePrime(const MultiPoly<Rational>& f, const CycloPrime& p, MultiPoly<Rational>& quotient) {
  long bx, by;
  extendedGcd(p.a, p.b, bx, by);
  // group exponents by kappa = b e_q - a e_t; position on the line j = bx e_q + by e_t
  std::map<long, std::map<long, Rational>> lines;
  for (const auto& [e, c] : f.terms()) {
    long kappa = static_cast<long>(p.b) * e[0] - static_cast<long>(p.a) * e[1];
    long j = bx * e[0] + by * e[1];
    lines[kappa].emplace(j, c);
  }
  const UniPoly& phi = cyclotomic(p.d);
  MultiPoly<Rational> out(f.vars());
  for (const auto& [kappa, line] : lines) {
    long jmin = line.begin()->first;
    long jmax = line.rbegin()->first;
    if (jmax - jmin < phi.degree()) return false;
    std::vector<Rational> c(static_cast<std::size_t>(jmax - jmin + 1));
    for (const auto& [j, v] : line) c[static_cast<std::size_t>(j - jmin)] = v;
    UniPoly q, r;
    UniPoly::divmod(UniPoly(std::move(c)), phi, q, r);
    if (!r.zero()) return false;
    long baseQ = by * kappa, baseT = -bx * kappa;
    for (int i = 0; i <= q.degree(); ++i) {
      const Rational& v = q.coeffs()[i];
      if (v.isZero()) continue;
      long j = jmin + i;
      out.addTerm({static_cast<int>(baseQ + j * p.a), static_cast<int>(baseT + j * p.b)}, v);
    }
  }
  quotient = std::move(out);
  return true;
}

const std::vector<std::string>& RationalFunction::vars() {
  static const std::vector<std::string> v{"q", "t"};
  return v;
}

RationalFunction::Poly RationalFunction::polyMonomial(const Rational& c, int qe, int te) {
  return Poly::monomial(vars(), {qe, te}, c);
}

RationalFunction RationalFunction::monomial(const Rational& c, int qe, int te) {
  return RationalFunction(polyMonomial(c, qe, te));
}

RationalFunction::RationalFunction(Poly num, Den den) : num_(std::move(num)) {
  for (const auto& [p, m] : den)
    if (m > 0) den_[p] += m;
  Den all = den_;
  reduceAgainst(all);
}

RationalFunction::Poly RationalFunction::primePoly(const CycloPrime& p) {
  static std::map<CycloPrime, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(cacheMu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  const UniPoly& phi = cyclotomic(p.d);
  Poly r(vars());
  for (int i = 0; i <= phi.degree(); ++i) r.addTerm({i * p.a, i * p.b}, phi.coeff(i));
  std::lock_guard<std::mutex> lock(cacheMu);
  return cache.emplace(p, r).first->second;
}

RationalFunction RationalFunction::oneMinus(int a, int b) {
  Poly p = polyMonomial(Rational(1), 0, 0);
  p.addTerm({a, b}, Rational(-1));
  return RationalFunction(p);
}

RationalFunction RationalFunction::oneMinusInverse(int a, int b) {
  if (a == 0 && b == 0) throw Error(ErrorCode::DivisionByZero, "1 - q^0 t^0");
  int g;
  bool flipped;
  CycloPrime dir = normalizedDirection(a, b, g, flipped);
  Den den;
  for (int m = 1; m <= g; ++m)
    if (g % m == 0) den[CycloPrime{dir.a, dir.b, m}] = 1;
  RationalFunction r;
  // 1 - y^g = -prod Phi_m(y); for flipped direction 1 - x^g = x^g prod Phi_m(1/x)
  if (!flipped) r.num_ = polyMonomial(Rational(-1), 0, 0);
  else r.num_ = polyMonomial(Rational(1), -a, -b);
  r.den_ = std::move(den);
  return r;
}

RationalFunction::Poly RationalFunction::denPoly() const {
  Poly r = polyMonomial(Rational(1), 0, 0);
  for (const auto& [p, m] : den_) r *= primePoly(p).pow(static_cast<unsigned>(m));
  return r;
}

bool RationalFunction::isConstant() const {
  if (!den_.empty()) return false;
  if (num_.zero()) return true;
  return num_.termCount() == 1 && num_.terms().begin()->first == Exponent{0, 0};
}

Rational RationalFunction::constantValue() const {
  if (!isConstant()) throw Error(ErrorCode::NonConstantResult, "expected constant, got " + toString());
  return num_.coeff({0, 0});
}

void RationalFunction::reduceAgainst(const Den& primes) {
  if (num_.zero()) { den_.clear(); return; }
  for (const auto& [p, mult] : primes) {
    auto it = den_.find(p);
    if (it == den_.end()) continue;
    Poly q;
    while (it->second > 0 && dividePrime(num_, p, q)) {
      num_ = std::move(q);
      --it->second;
    }
    if (it->second == 0) den_.erase(it);
  }
}

RationalFunction RationalFunction::combine(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  if (b.zero()) return a;
  if (a.zero()) return subtract ? -b : b;
  RationalFunction r;
  if (a.den_ == b.den_) {
    r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    Den l = a.den_;
    for (const auto& [p, m] : b.den_) l[p] = std::max(l[p], m);
    Poly fa = polyMonomial(Rational(1), 0, 0), fb = fa;
    for (const auto& [p, m] : l) {
      auto ia = a.den_.find(p);
      int ma = ia == a.den_.end() ? 0 : ia->second;
      auto ib = b.den_.find(p);
      int mb = ib == b.den_.end() ? 0 : ib->second;
      if (m > ma) fa *= primePoly(p).pow(static_cast<unsigned>(m - ma));
      if (m > mb) fb *= primePoly(p).pow(static_cast<unsigned>(m - mb));
    }
    Poly na = a.num_ * fa, nb = b.num_ * fb;
    r.num_ = subtract ? na - nb : na + nb;
    r.den_ = std::move(l);
  }
  Den all = r.den_;
  r.reduceAgainst(all);
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.zero() || b.zero()) return RationalFunction();
  // primes of one denominator can only cancel against the other numerator
  RationalFunction::Poly na = a.num_, nb = b.num_;
  RationalFunction::Den da = a.den_, db = b.den_;
  auto cancel = [](RationalFunction::Poly& num, RationalFunction::Den& den) {
    for (auto it = den.begin(); it != den.end();) {
      RationalFunction::Poly q;
      while (it->second > 0 && dividePrime(num, it->first, q)) {
        num = std::move(q);
        --it->second;
      }
      it = it->second == 0 ? den.erase(it) : std::next(it);
    }
  };
  if (!db.empty()) cancel(na, db);
  if (!da.empty()) cancel(nb, da);
  RationalFunction r;
  r.num_ = na * nb;
  r.den_ = std::move(da);
  for (const auto& [p, m] : db) r.den_[p] += m;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  Poly rest = num_;
  Den factors;
  if (rest.termCount() > 1) {
    // candidate directions come from exponent differences
    std::set<std::pair<int, int>> dirs;
    std::vector<Exponent> exps;
    for (const auto& [e, c] : rest.terms()) exps.push_back(e);
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::size_t j = i + 1; j < exps.size(); ++j) {
        int g;
        bool f;
        CycloPrime d = normalizedDirection(exps[j][0] - exps[i][0], exps[j][1] - exps[i][1], g, f);
        dirs.insert({d.a, d.b});
      }
    for (const auto& [a, b] : dirs) {
      int qmin = 1 << 30, qmax = -(1 << 30), tmin = qmin, tmax = qmax;
      for (const auto& [e, c] : rest.terms()) {
        qmin = std::min(qmin, e[0]); qmax = std::max(qmax, e[0]);
        tmin = std::min(tmin, e[1]); tmax = std::max(tmax, e[1]);
      }
      int steps = 1 << 30;
      if (a) steps = std::min(steps, (qmax - qmin) / a);
      if (b) steps = std::min(steps, (tmax - tmin) / std::abs(b));
      // phi(d) >= sqrt(d / 2)
      for (int d = 1; d <= 2 * steps * steps + 2 && rest.termCount() > 1; ++d) {
        if (eulerPhi(d) > steps) continue;
        CycloPrime p{a, b, d};
        Poly q;
        while (dividePrime(rest, p, q)) {
          rest = std::move(q);
          ++factors[p];
        }
      }
    }
  }
  if (rest.termCount() != 1)
    throw Error(ErrorCode::NotFactorable, "numerator does not factor over cyclotomic binomials: " + num_.toString());
  const auto& [e, c] = *rest.terms().begin();
  Poly inv = polyMonomial(c.inverse(), -e[0], -e[1]);
  RationalFunction r;
  r.num_ = inv * denPoly();
  r.den_ = std::move(factors);
  return r;
}

RationalFunction RationalFunction::adams(int n) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "adams index must be positive");
  if (n == 1) return *this;
  RationalFunction r;
  r.num_ = num_.transform([n](const Exponent& e) { return Exponent{e[0] * n, e[1] * n}; },
                          [](const Rational& c) { return c; });
  for (const auto& [p, m] : den_)
    for (int s : adamsSplit(p.d, n)) r.den_[CycloPrime{p.a, p.b, s}] += m;
  Den all = r.den_;
  r.reduceAgainst(all);
  return r;
}

Rational RationalFunction::evaluate(const Rational& qv, const Rational& tv) const {
  auto ev = [&](const Poly& p) {
    Rational s(0);
    for (const auto& [e, c] : p.terms()) s += c * pow(qv, e[0]) * pow(tv, e[1]);
    return s;
  };
  return ev(num_) / ev(denPoly());
}

std::string RationalFunction::toString() const {
  if (den_.empty()) return num_.toString();
  return "(" + num_.toString() + ")/(" + denPoly().toString() + ")";
}

}  // namespace hilb
