#include "hilb/ring/unipoly.hpp"

#include <sstream>

namespace hilb {

Rational UniPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.zero() || b.zero()) return UniPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(UniPoly a, const Rational& s) {
  if (s.isZero()) return UniPoly();
  for (auto& c : a.c_) c *= s;
  return a;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  int db = b.degree();
  if (r.degree() < db) { q = UniPoly(); return; }
  std::vector<Rational> qc(r.degree() - db + 1);
  Rational inv = b.lead().inverse();
  for (int i = r.degree(); i >= db; --i) {
    Rational f = r.coeff(i) * inv;
    if (f.isZero()) continue;
    qc[i - db] = f;
    for (int j = 0; j <= db; ++j) r.c_[i - db + j] -= f * b.c_[j];
  }
  r.trim();
  q = UniPoly(std::move(qc));
}

UniPoly UniPoly::monic() const {
  if (zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::toString(const std::string& var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.isZero()) continue;
    bool neg = c.sign() < 0;
    std::string mag = c.abs().toString();
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (i == 0) os << mag;
    else {
      if (mag != "1") os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

UniRatFunc::UniRatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in Q(c)");
  reduce();
}

void UniRatFunc::reduce() {
  if (num_.zero()) { den_ = UniPoly(Rational(1)); return; }
  if (den_.degree() > 0) {
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      UniPoly q, r;
      UniPoly::divmod(num_, g, q, r);
      num_ = q;
      UniPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  Rational l = den_.lead();
  if (!l.isOne()) {
    Rational inv = l.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational UniRatFunc::constantValue() const {
  if (!isConstant()) throw Error(ErrorCode::NonConstantResult, "expected constant, got " + toString());
  return num_.coeff(0);
}

UniRatFunc UniRatFunc::inverse() const {
  if (zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(c)");
  return UniRatFunc(den_, num_);
}

Rational UniRatFunc::eval(const Rational& x) const { return num_.eval(x) / den_.eval(x); }

UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b) {
  if (a.den_ == b.den_) return UniRatFunc(a.num_ + b.num_, a.den_);
  return UniRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b) {
  if (a.den_ == b.den_) return UniRatFunc(a.num_ - b.num_, a.den_);
  return UniRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b) {
  if (a.zero() || b.zero()) return UniRatFunc();
  return UniRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::string UniRatFunc::toString() const {
  if (den_.degree() == 0) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

}  // namespace hilb
