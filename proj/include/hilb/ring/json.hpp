#pragma once

#include <json.hpp>

#include "hilb/ring/ratfunc.hpp"
#include "hilb/ring/series.hpp"
#include "hilb/ring/unipoly.hpp"

namespace hilb {

inline void numDen(const Rational& c, std::string& num, std::string& den) {
  num = c.num().get_str();
  den = c.den().get_str();
}
inline void numDen(const RationalFunction& c, std::string& num, std::string& den) {
  num = c.numPoly().toString();
  den = c.denPoly().toString();
}
inline void numDen(const UniRatFunc& c, std::string& num, std::string& den) {
  num = c.num().toString();
  den = c.den().toString();
}

// {"vars":[..],"orders":[..],"terms":[{"exp":[..],"num":"..","den":".."}]}
// with terms in lexicographic exponent order.
template <Coefficient R>
nlohmann::json toJson(const TruncatedSeries<R>& s) {
  nlohmann::json j;
  j["vars"] = s.vars();
  j["orders"] = s.orders();
  nlohmann::json terms = nlohmann::json::array();
  s.forEachTerm([&](const std::vector<int>& e, const R& c) {
    std::string num, den;
    numDen(c, num, den);
    terms.push_back({{"exp", e}, {"num", num}, {"den", den}});
  });
  j["terms"] = std::move(terms);
  return j;
}

inline TruncatedSeries<Rational> rationalSeriesFromJson(const nlohmann::json& j) {
  try {
    TruncatedSeries<Rational> s(j.at("vars").get<std::vector<std::string>>(), j.at("orders").get<std::vector<int>>());
    for (const auto& t : j.at("terms")) {
      Rational c = Rational::fromString(t.at("num").get<std::string>()) / Rational::fromString(t.at("den").get<std::string>());
      s.setCoeff(t.at("exp").get<std::vector<int>>(), c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace hilb
