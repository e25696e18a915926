#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilb/ring/rational.hpp"

namespace hilb {

using Exponent = std::vector<int>;

// Sparse Laurent polynomial over R in named variables. Exponents may be
// negative. Zero coefficients are never stored.
template <class R>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, R>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MultiPoly(std::vector<std::string> vars, const R& c) : vars_(std::move(vars)) {
    if (!isZero(c)) terms_.emplace(Exponent(vars_.size(), 0), c);
  }

  static MultiPoly monomial(std::vector<std::string> vars, Exponent e, const R& c) {
    MultiPoly p(std::move(vars));
    if (!isZero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i) {
    Exponent e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(std::move(vars), std::move(e), R(Rational(1)));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool zero() const { return terms_.empty(); }

  R coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(Rational(0)) : it->second;
  }
  void addTerm(const Exponent& e, const R& c) {
    if (isZero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (isZero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const R& s) {
    if (isZero(s)) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { for (auto& [e, c] : a.terms_) c = -c; return a; }
  friend MultiPoly operator*(MultiPoly a, const R& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    Exponent e(r.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.addTerm(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned n) const {
    MultiPoly r(vars_, R(Rational(1)));
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  // Apply an exponent map e -> f(e) and coefficient map c -> g(c).
  template <class F, class G>
  MultiPoly transform(F expMap, G coeffMap) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.addTerm(expMap(e), coeffMap(c));
    return r;
  }

  std::string toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponents first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = hilb::str(it->second);
      bool unit = true;
      for (int x : it->first) unit = unit && x == 0;
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        int x = it->first[i];
        if (x == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (x != 1) mono += "^" + (x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x));
      }
      bool neg = !c.empty() && c[0] == '-';
      std::string mag = neg ? c.substr(1) : c;
      bool composite = mag.find_first_of("+-") != std::string::npos;
      if (composite) { neg = false; mag = "(" + c + ")"; }
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      if (unit) os << mag;
      else if (mag == "1") os << mono;
      else os << mag << "*" << mono;
      first = false;
    }
    return os.str();
  }

 private:
  void adopt(const MultiPoly& o) {
    if (vars_.empty() && !o.vars_.empty()) vars_ = o.vars_;
  }
  std::vector<std::string> vars_;
  Terms terms_;
};

template <class R>
bool isZero(const MultiPoly<R>& p) { return p.zero(); }
template <class R>
std::string str(const MultiPoly<R>& p) { return p.toString(); }

}  // namespace hilb
