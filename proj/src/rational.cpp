#include "hilb/ring/rational.hpp"

#include <mutex>
#include <vector>

namespace hilb {

const char* errorName(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NonUnitLinearTerm: return "NonUnitLinearTerm";
    case ErrorCode::ConstantTermPresent: return "ConstantTermPresent";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::DegenerateSlope: return "DegenerateSlope";
    case ErrorCode::InsufficientCap: return "InsufficientCap";
    case ErrorCode::UnknownSurface: return "UnknownSurface";
    case ErrorCode::BadDivisorData: return "BadDivisorData";
    case ErrorCode::NonConstantResult: return "NonConstantResult";
    case ErrorCode::PoleSurvived: return "PoleSurvived";
    case ErrorCode::SlopeDependence: return "SlopeDependence";
    case ErrorCode::NonIntegerVerlinde: return "NonIntegerVerlinde";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::RankDeficientMatrix: return "RankDeficientMatrix";
    case ErrorCode::NonzeroResidual: return "NonzeroResidual";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::SquareRootObstruction: return "SquareRootObstruction";
    case ErrorCode::RootObstruction: return "RootObstruction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::fromString(std::string_view s) {
  mpq_class v;
  std::string str(s);
  if (str.empty() || v.set_str(str, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + str + "'");
  if (v.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + str + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (isZero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::toLong() const {
  if (!isInteger() || !v_.get_num().fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "not a machine integer: " + toString());
  return v_.get_num().get_si();
}

Rational pow(const Rational& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(num, den));
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  if (x.isInteger() && x.sign() >= 0) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
  }
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (x - Rational(i));
  return r / Rational(factorial(k));
}

Rational bernoulli(long n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j<=m} binom(m+1, j) B_j = 0
  while (static_cast<long>(cache.size()) <= n) {
    long m = static_cast<long>(cache.size());
    Rational s(0);
    for (long j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
    cache.push_back(-s / Rational(m + 1));
  }
  return cache[n];
}

}  // namespace hilb
