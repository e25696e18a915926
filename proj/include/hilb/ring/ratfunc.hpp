#pragma once

#include <compare>
#include <map>
#include <string>

#include "hilb/ring/multipoly.hpp"
#include "hilb/ring/unipoly.hpp"

namespace hilb {

// Cyclotomic polynomial Phi_d as a dense integer polynomial.
const UniPoly& cyclotomic(int d);

// Phi_d(q^a t^b) with gcd(a, b) = 1 and (a, b) lexicographically positive.
struct CycloPrime {
  int a = 1, b = 0, d = 1;
  auto operator<=>(const CycloPrime&) const = default;
};

// Element of Q(q, t) whose denominator is a product of the primes
// Phi_d(q^a t^b). Numerators are Laurent polynomials. The representation
// num / prod P^m with num coprime to every listed P is unique, so equality
// is structural.
class RationalFunction {
 public:
  using Poly = MultiPoly<Rational>;
  using Den = std::map<CycloPrime, int>;

  RationalFunction() : num_(vars()) {}
  RationalFunction(const Rational& c) : num_(vars(), c) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)) {}
  RationalFunction(Poly num, Den den);

  static const std::vector<std::string>& vars();
  static RationalFunction monomial(const Rational& c, int qe, int te);
  static RationalFunction q() { return monomial(Rational(1), 1, 0); }
  static RationalFunction t() { return monomial(Rational(1), 0, 1); }
  static Poly polyMonomial(const Rational& c, int qe, int te);
  // 1 - q^a t^b, and its inverse in factored form
  static RationalFunction oneMinus(int a, int b);
  static RationalFunction oneMinusInverse(int a, int b);
  static Poly primePoly(const CycloPrime& p);

  const Poly& numPoly() const { return num_; }
  const Den& den() const { return den_; }
  Poly denPoly() const;
  bool zero() const { return num_.zero(); }
  bool isPolynomial() const { return den_.empty(); }
  bool isConstant() const;
  Rational constantValue() const;

  RationalFunction inverse() const;
  RationalFunction adams(int n) const;
  Rational evaluate(const Rational& qv, const Rational& tv) const;

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, false); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, true); }
  friend RationalFunction operator-(const RationalFunction& a) { RationalFunction r = a; r.num_ = -r.num_; return r; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
    if (s.isZero()) return RationalFunction();
    RationalFunction r = a;
    r.num_ *= s;
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string toString() const;

 private:
  static RationalFunction combine(const RationalFunction& a, const RationalFunction& b, bool subtract);
  void reduceAgainst(const Den& primes);
  Poly num_;
  Den den_;
};

// Divide f exactly by Phi_d(q^a t^b); returns false if not divisible.
bool dividePrime(const MultiPoly<Rational>& f, const CycloPrime& p, MultiPoly<Rational>& quotient);

inline bool isZero(const RationalFunction& f) { return f.zero(); }
inline RationalFunction inverse(const RationalFunction& f) { return f.inverse(); }
inline std::string str(const RationalFunction& f) { return f.toString(); }

}  // namespace hilb
