#pragma once

#include <algorithm>
#include <vector>

#include "hilb/ring/series.hpp"

namespace hilb {

// Univariate Laurent series sum_{e >= low} c_e s^e known through s^precision().
template <Coefficient R>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // coefficients for exponents low, low+1, ...
  LaurentSeries(int low, std::vector<R> coeffs) : low_(low), c_(std::move(coeffs)) { normalize(); }
  static LaurentSeries zero(int precision) {
    LaurentSeries s;
    s.low_ = precision + 1;
    return s;
  }

  int lowestExponent() const { return low_; }
  int precision() const { return low_ + static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  bool hasPole() const { return !c_.empty() && low_ < 0; }
  R coeff(int e) const {
    if (e > precision()) throw Error(ErrorCode::TruncationTooSmall, "coefficient beyond precision");
    if (e < low_) return R(Rational(0));
    return c_[static_cast<std::size_t>(e - low_)];
  }
  R constantTerm() const { return coeff(0); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.isZero() || b.isZero()) {
      int p = std::min(a.precision() + b.low_, b.precision() + a.low_);
      return zero(p);
    }
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<R> r(n, R(Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LaurentSeries(a.low_ + b.low_, std::move(r));
  }
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, true); }
  friend LaurentSeries operator*(LaurentSeries a, const R& s) {
    for (auto& c : a.c_) c = c * s;
    a.normalize();
    return a;
  }

  LaurentSeries inverse() const {
    if (isZero()) throw Error(ErrorCode::NonUnitConstantTerm, "inverse of zero Laurent series");
    R c0inv = hilb::inverse(c_[0]);
    std::vector<R> g(c_.size(), R(Rational(0)));
    g[0] = c0inv;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      R acc(Rational(0));
      for (std::size_t j = 1; j <= i; ++j) acc += c_[j] * g[i - j];
      g[i] = -(acc * c0inv);
    }
    return LaurentSeries(-low_, std::move(g));
  }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

 private:
  static LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b, bool sub) {
    int lo = std::min(a.low_, b.low_);
    int hi = std::min(a.precision(), b.precision());
    if (hi < lo) return zero(hi);
    std::vector<R> r(static_cast<std::size_t>(hi - lo + 1), R(Rational(0)));
    for (int e = lo; e <= hi; ++e) {
      R x = a.coeff(e), y = b.coeff(e);
      r[static_cast<std::size_t>(e - lo)] = sub ? x - y : x + y;
    }
    return LaurentSeries(lo, std::move(r));
  }
  void normalize() {
    std::size_t k = 0;
    while (k < c_.size() && detail::coeffIsZero(c_[k])) ++k;
    if (k) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      low_ += static_cast<int>(k);
    }
  }
  int low_ = 0;
  std::vector<R> c_;
};

}  // namespace hilb
