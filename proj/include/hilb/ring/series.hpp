#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hilb/ring/rational.hpp"

namespace hilb {

template <class R>
concept Coefficient = requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { isZero(a) } -> std::convertible_to<bool>;
  R(q);
};

namespace detail {
// Unqualified so that overloads declared after this header are found by ADL.
template <class R>
bool coeffIsZero(const R& c) {
  return isZero(c);
}
}  // namespace detail

// Multivariate power series truncated to the box 0 <= e_i <= orders[i].
// Monomials outside the box form an ideal, so every ring operation below is
// exact on the retained coefficients. Storage is dense in mixed radix with
// the last variable varying fastest, which makes index order lexicographic.
template <Coefficient R>
class TruncatedSeries {
 public:
  using Exponent = std::vector<int>;

  TruncatedSeries() : size_(1), coeffs_(1, R(Rational(0))) {}
  TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders)
      : vars_(std::move(vars)), orders_(std::move(orders)) {
    if (vars_.size() != orders_.size()) throw Error(ErrorCode::InvalidArgument, "vars/orders size mismatch");
    strides_.assign(vars_.size(), 1);
    size_ = 1;
    for (std::size_t i = vars_.size(); i-- > 0;) {
      if (orders_[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
      strides_[i] = size_;
      size_ *= static_cast<std::size_t>(orders_[i]) + 1;
    }
    coeffs_.assign(size_, R(Rational(0)));
  }

  static TruncatedSeries constant(std::vector<std::string> vars, std::vector<int> orders, const R& c) {
    TruncatedSeries s(std::move(vars), std::move(orders));
    s.coeffs_[0] = c;
    return s;
  }
  static TruncatedSeries variable(std::vector<std::string> vars, std::vector<int> orders, std::size_t i) {
    TruncatedSeries s(std::move(vars), std::move(orders));
    if (s.orders_.at(i) >= 1) s.coeffs_[s.strides_[i]] = R(Rational(1));
    return s;
  }
  TruncatedSeries zeroLike() const { return TruncatedSeries(vars_, orders_); }
  TruncatedSeries constantLike(const R& c) const { return constant(vars_, orders_, c); }
  TruncatedSeries variableLike(std::size_t i) const { return variable(vars_, orders_, i); }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& orders() const { return orders_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return size_; }
  std::size_t varIndex(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw Error(ErrorCode::InvalidArgument, "unknown series variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  bool inBox(const Exponent& e) const {
    if (e.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 || e[i] > orders_[i]) return false;
    return true;
  }
  std::size_t indexOf(const Exponent& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(e[i]);
    return idx;
  }
  Exponent exponentOf(std::size_t idx) const {
    Exponent e(orders_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = static_cast<int>(idx / strides_[i]);
      idx %= strides_[i];
    }
    return e;
  }
  int totalDegree(std::size_t idx) const {
    int d = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      d += static_cast<int>(idx / strides_[i]);
      idx %= strides_[i];
    }
    return d;
  }

  // Coefficient access; exponents outside the box read as zero.
  R coeff(const Exponent& e) const { return inBox(e) ? coeffs_[indexOf(e)] : R(Rational(0)); }
  void setCoeff(const Exponent& e, const R& c) {
    if (!inBox(e)) throw Error(ErrorCode::InvalidArgument, "exponent outside truncation box");
    coeffs_[indexOf(e)] = c;
  }
  const R& at(std::size_t idx) const { return coeffs_[idx]; }
  R& at(std::size_t idx) { return coeffs_[idx]; }
  const R& constantTerm() const { return coeffs_[0]; }

  bool isZero() const {
    for (const auto& c : coeffs_)
      if (!detail::coeffIsZero(c)) return false;
    return true;
  }

  // Calls f(exponent, coefficient) on nonzero terms in lexicographic order.
  template <class F>
  void forEachTerm(F&& f) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (!detail::coeffIsZero(coeffs_[i])) f(exponentOf(i), coeffs_[i]);
  }

  template <class F>
  auto mapCoefficients(F&& f) const {
    using S = std::decay_t<decltype(f(coeffs_[0]))>;
    TruncatedSeries<S> r(vars_, orders_);
    for (std::size_t i = 0; i < size_; ++i)
      if (!detail::coeffIsZero(coeffs_[i])) r.at(i) = f(coeffs_[i]);
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    requireSameShape(o);
    for (std::size_t i = 0; i < size_; ++i)
      if (!detail::coeffIsZero(o.coeffs_[i])) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    requireSameShape(o);
    for (std::size_t i = 0; i < size_; ++i)
      if (!detail::coeffIsZero(o.coeffs_[i])) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const R& s) {
    for (auto& c : coeffs_)
      if (!detail::coeffIsZero(c)) c = c * s;
    return *this;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_)
      if (!detail::coeffIsZero(c)) c = -c;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.requireSameShape(b);
    TruncatedSeries r(a.vars_, a.orders_);
    auto ta = a.nonzeroTerms(), tb = b.nonzeroTerms();
    const std::size_t n = a.orders_.size();
    for (const auto& [ia, ea] : ta) {
      for (const auto& [ib, eb] : tb) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = ea[k] + eb[k] <= a.orders_[k];
        if (!ok) continue;
        r.coeffs_[ia + ib] += a.coeffs_[ia] * b.coeffs_[ib];
      }
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.orders_ == b.orders_ && a.coeffs_ == b.coeffs_;
  }

  // x_i d/dx_i
  TruncatedSeries eulerDerivative(std::size_t var) const {
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < size_; ++i) {
      if (detail::coeffIsZero(r.coeffs_[i])) continue;
      int e = static_cast<int>((i / strides_[var]) % (static_cast<std::size_t>(orders_[var]) + 1));
      r.coeffs_[i] = e == 0 ? R(Rational(0)) : r.coeffs_[i] * Rational(e);
    }
    return r;
  }

  // Same series viewed with new (smaller or equal) orders.
  TruncatedSeries truncate(const std::vector<int>& newOrders) const {
    TruncatedSeries r(vars_, newOrders);
    for (std::size_t i = 0; i < r.size_; ++i) {
      Exponent e = r.exponentOf(i);
      r.coeffs_[i] = coeff(e);
    }
    return r;
  }

  // Re-express in another variable list. Variables not present here get
  // exponent 0; variables dropped must carry only exponent 0 terms unless
  // dropDependence is set, in which case those terms are discarded.
  TruncatedSeries embed(const std::vector<std::string>& newVars, const std::vector<int>& newOrders,
                        bool dropDependence = false) const {
    TruncatedSeries r(newVars, newOrders);
    std::vector<int> map(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(newVars.begin(), newVars.end(), vars_[i]);
      if (it != newVars.end()) map[i] = static_cast<int>(it - newVars.begin());
    }
    for (std::size_t i = 0; i < size_; ++i) {
      if (detail::coeffIsZero(coeffs_[i])) continue;
      Exponent e = exponentOf(i);
      Exponent ne(newVars.size(), 0);
      bool keep = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (map[k] < 0) {
          if (e[k] != 0) {
            if (!dropDependence) throw Error(ErrorCode::InvalidArgument, "embedding drops variable " + vars_[k]);
            keep = false;
          }
        } else {
          ne[map[k]] = e[k];
        }
      }
      if (keep && r.inBox(ne)) r.coeffs_[r.indexOf(ne)] += coeffs_[i];
    }
    return r;
  }

  // Coefficient of var^power as a series in the remaining variables.
  TruncatedSeries slice(std::size_t var, int power) const {
    std::vector<std::string> nv;
    std::vector<int> no;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != var) { nv.push_back(vars_[i]); no.push_back(orders_[i]); }
    TruncatedSeries r(nv, no);
    if (power < 0 || power > orders_[var]) return r;
    for (std::size_t i = 0; i < size_; ++i) {
      if (detail::coeffIsZero(coeffs_[i])) continue;
      Exponent e = exponentOf(i);
      if (e[var] != power) continue;
      e.erase(e.begin() + static_cast<long>(var));
      r.coeffs_[r.indexOf(e)] = coeffs_[i];
    }
    return r;
  }

  std::vector<std::pair<std::size_t, Exponent>> nonzeroTerms() const {
    std::vector<std::pair<std::size_t, Exponent>> t;
    for (std::size_t i = 0; i < size_; ++i)
      if (!detail::coeffIsZero(coeffs_[i])) t.emplace_back(i, exponentOf(i));
    return t;
  }

  void requireSameShape(const TruncatedSeries& o) const {
    if (vars_ != o.vars_ || orders_ != o.orders_)
      throw Error(ErrorCode::InvalidArgument, "series shape mismatch");
  }

 private:
  std::vector<std::string> vars_;
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  std::vector<R> coeffs_;
};

template <Coefficient R>
bool isZero(const TruncatedSeries<R>& s) { return s.isZero(); }

// Multiplicative inverse; the constant term must be invertible in R.
template <Coefficient R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& f) {
  if (isZero(f.constantTerm())) throw Error(ErrorCode::NonUnitConstantTerm, "series inverse needs a unit constant term");
  R c0inv;
  try {
    c0inv = inverse(f.constantTerm());
  } catch (const Error&) {
    throw Error(ErrorCode::NonUnitConstantTerm, "constant term is not a unit");
  }
  TruncatedSeries<R> g = f.zeroLike();
  g.at(0) = c0inv;
  auto tf = f.nonzeroTerms();
  const auto& orders = f.orders();
  for (std::size_t i = 1; i < f.size(); ++i) {
    auto e = f.exponentOf(i);
    R acc(Rational(0));
    for (const auto& [j, ej] : tf) {
      if (j == 0) continue;
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k) ok = ej[k] <= e[k];
      if (!ok) continue;
      const R& gg = g.at(i - j);
      if (!isZero(gg)) acc += f.at(j) * gg;
    }
    (void)orders;
    if (!isZero(acc)) g.at(i) = -(acc * c0inv);
  }
  return g;
}

// Total-degree Euler operator sum_i x_i d/dx_i
template <Coefficient R>
TruncatedSeries<R> gradedDerivative(const TruncatedSeries<R>& f) {
  TruncatedSeries<R> r = f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (isZero(r.at(i))) continue;
    int d = f.totalDegree(i);
    r.at(i) = d == 0 ? R(Rational(0)) : r.at(i) * Rational(d);
  }
  return r;
}

template <Coefficient R>
TruncatedSeries<R> log(const TruncatedSeries<R>& f) {
  if (!(f.constantTerm() == R(Rational(1)))) throw Error(ErrorCode::BadConstantTerm, "log needs constant term 1");
  TruncatedSeries<R> g = gradedDerivative(f) * invert(f);
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!isZero(g.at(i))) g.at(i) = g.at(i) * Rational(1, f.totalDegree(i));
  return g;
}

template <Coefficient R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& g) {
  if (!isZero(g.constantTerm())) throw Error(ErrorCode::NonzeroConstantTerm, "exp needs zero constant term");
  // D f = f D g with D the graded Euler operator
  TruncatedSeries<R> dg = gradedDerivative(g);
  auto tg = dg.nonzeroTerms();
  TruncatedSeries<R> f = g.zeroLike();
  f.at(0) = R(Rational(1));
  for (std::size_t i = 1; i < f.size(); ++i) {
    auto e = f.exponentOf(i);
    R acc(Rational(0));
    for (const auto& [j, ej] : tg) {
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k) ok = ej[k] <= e[k];
      if (!ok) continue;
      const R& ff = f.at(i - j);
      if (!isZero(ff)) acc += dg.at(j) * ff;
    }
    if (!isZero(acc)) f.at(i) = acc * Rational(1, f.totalDegree(i));
  }
  return f;
}

// f^a for f with constant term 1 and rational a.
template <Coefficient R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& f, const Rational& a) {
  if (a.isZero()) return f.constantLike(R(Rational(1)));
  if (a.isInteger()) {
    long n = a.toLong();
    if (n > 0) {
      TruncatedSeries<R> r = f.constantLike(R(Rational(1))), b = f;
      for (long m = n; m; m >>= 1) {
        if (m & 1) r = r * b;
        if (m > 1) b = b * b;
      }
      return r;
    }
    return pow(invert(f), Rational(-n));
  }
  if (!(f.constantTerm() == R(Rational(1)))) throw Error(ErrorCode::BadConstantTerm, "fractional power needs constant term 1");
  TruncatedSeries<R> l = log(f);
  l *= R(a);
  return exp(l);
}

// Sum_j coeffs[j] * g^j via Horner; g must have zero constant term unless
// coeffs is a finite polynomial.
template <Coefficient R>
TruncatedSeries<R> composePolynomial(const std::vector<R>& coeffs, const TruncatedSeries<R>& g) {
  TruncatedSeries<R> r = g.zeroLike();
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    r = r * g;
    r.at(0) += coeffs[j];
  }
  return r;
}

// f(g) for univariate f and any g with zero constant term.
template <Coefficient R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  if (f.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "compose expects a univariate outer series");
  if (!isZero(g.constantTerm())) throw Error(ErrorCode::NonzeroConstantTerm, "inner series must have zero constant term");
  int maxDeg = 0;
  for (int o : g.orders()) maxDeg += o;
  std::vector<R> c;
  for (int j = 0; j <= std::min(maxDeg, f.orders()[0]); ++j) c.push_back(f.coeff({j}));
  if (maxDeg > f.orders()[0]) {
    // the inner series could reach degrees the outer truncation does not know
    int minInner = maxDeg + 1;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (!isZero(g.at(i))) minInner = std::min(minInner, g.totalDegree(i));
    if (static_cast<long>(minInner) * (f.orders()[0] + 1) <= maxDeg)
      throw Error(ErrorCode::TruncationTooSmall, "outer series truncated too early for composition");
  }
  return composePolynomial(c, g);
}

// Simultaneous substitution of every variable of f by a series in a common
// target shape. Substituted series must have zero constant term.
template <Coefficient R>
TruncatedSeries<R> substitute(const TruncatedSeries<R>& f, const std::vector<TruncatedSeries<R>>& images) {
  if (images.size() != f.nvars()) throw Error(ErrorCode::InvalidArgument, "substitute needs one image per variable");
  if (images.empty()) return f;
  int maxDeg = 0;
  for (int o : images[0].orders()) maxDeg += o;
  std::vector<std::vector<TruncatedSeries<R>>> powers(images.size());
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (!isZero(images[v].constantTerm())) throw Error(ErrorCode::NonzeroConstantTerm, "substituted series must have zero constant term");
    int need = std::min(f.orders()[v], maxDeg);
    powers[v].push_back(images[v].constantLike(R(Rational(1))));
    for (int p = 1; p <= need; ++p) powers[v].push_back(powers[v].back() * images[v]);
  }
  TruncatedSeries<R> r = images[0].zeroLike();
  f.forEachTerm([&](const std::vector<int>& e, const R& c) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > maxDeg) return;
    TruncatedSeries<R> m = images[0].constantLike(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) m = m * powers[v][e[v]];
    r += m;
  });
  return r;
}

// Compositional inverse of a univariate f = c x + ... with c a unit.
template <Coefficient R>
TruncatedSeries<R> compositionalInverse(const TruncatedSeries<R>& f) {
  if (f.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "compositional inverse needs a univariate series");
  if (!isZero(f.constantTerm())) throw Error(ErrorCode::ConstantTermPresent, "series has a constant term");
  int n = f.orders()[0];
  if (n == 0) return f.zeroLike();
  R c = f.coeff({1});
  R cinv;
  try {
    if (isZero(c)) throw Error(ErrorCode::NonUnitLinearTerm, "zero linear term");
    cinv = inverse(c);
  } catch (const Error&) {
    throw Error(ErrorCode::NonUnitLinearTerm, "linear coefficient is not a unit");
  }
  TruncatedSeries<R> x = f.variableLike(0);
  TruncatedSeries<R> h = f;  // nonlinear part
  h.setCoeff({1}, R(Rational(0)));
  // g = (x - h(g)) / c, one new correct order per step
  TruncatedSeries<R> g = x * cinv;
  for (int it = 1; it < n; ++it) g = (x - compose(h, g)) * cinv;
  return g;
}

}  // namespace hilb
