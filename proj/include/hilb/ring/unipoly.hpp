#pragma once

#include <string>
#include <vector>

#include "hilb/ring/rational.hpp"

namespace hilb {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// Trailing zeros are stripped so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) { if (!c.isZero()) c_.push_back(c); }
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UniPoly x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { for (auto& c : a.c_) c = -c; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws on zero divisor.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0,0) = 0
  UniPoly monic() const;

  std::string toString(const std::string& var = "c") const;

 private:
  void trim() { while (!c_.empty() && c_.back().isZero()) c_.pop_back(); }
  std::vector<Rational> c_;
};

// Element of Q(c): reduced fraction with monic denominator.
class UniRatFunc {
 public:
  UniRatFunc() : den_(Rational(1)) {}
  UniRatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
  UniRatFunc(UniPoly num, UniPoly den);
  static UniRatFunc c() { return UniRatFunc(UniPoly::x(), UniPoly(Rational(1))); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool isConstant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constantValue() const;  // requires isConstant()
  UniRatFunc inverse() const;
  Rational eval(const Rational& x) const;

  UniRatFunc& operator+=(const UniRatFunc& o) { return *this = *this + o; }
  UniRatFunc& operator-=(const UniRatFunc& o) { return *this = *this - o; }
  UniRatFunc& operator*=(const UniRatFunc& o) { return *this = *this * o; }
  friend UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator-(const UniRatFunc& a) { UniRatFunc r = a; r.num_ = -r.num_; return r; }
  friend UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator*(const UniRatFunc& a, const Rational& s) { UniRatFunc r = a; if (s.isZero()) return UniRatFunc(); r.num_ = r.num_ * s; return r; }
  friend UniRatFunc operator/(const UniRatFunc& a, const UniRatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string toString() const;

 private:
  void reduce();
  UniPoly num_, den_;
};

inline bool isZero(const UniRatFunc& f) { return f.zero(); }
inline UniRatFunc inverse(const UniRatFunc& f) { return f.inverse(); }
inline std::string str(const UniRatFunc& f) { return f.toString(); }

}  // namespace hilb
