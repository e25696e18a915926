#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "hilb/errors.hpp"

namespace hilb {

// Exact rational number. Always stored in lowest terms with a positive
// denominator (GMP canonical form).
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational fromString(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  long toLong() const;  // requires isInteger() and fits

  std::string toString() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), Canonical{}); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), Canonical{}); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), Canonical{}); }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_), Canonical{}); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

 private:
  // already canonical
  struct Canonical {};
  Rational(mpq_class&& v, Canonical) : v_(std::move(v)) {}
  mpq_class v_;
};

inline bool isZero(const Rational& r) { return r.isZero(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }
inline std::string str(const Rational& r) { return r.toString(); }

Rational pow(const Rational& x, long n);
mpz_class factorial(long n);
// Generalized binomial x(x-1)...(x-k+1)/k!, zero for k < 0.
Rational binomial(const Rational& x, long k);
inline Rational binomial(long n, long k) { return binomial(Rational(n), k); }
// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(long n);

}  // namespace hilb

template <>
struct std::hash<hilb::Rational> {
  size_t operator()(const hilb::Rational& r) const noexcept {
    return std::hash<std::string>()(r.toString());
  }
};
