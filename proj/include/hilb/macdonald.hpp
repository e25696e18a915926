#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilb/partition.hpp"
#include "hilb/report.hpp"
#include "hilb/ring/ratfunc.hpp"
#include "hilb/ring/series.hpp"

namespace hilb {

using RF = RationalFunction;
using RFSeries = TruncatedSeries<RationalFunction>;

// Symmetric function in the power-sum basis with Q(q,t) coefficients,
// truncated above maxDegree.
class SymFunc {
 public:
  explicit SymFunc(int maxDegree = 0) : maxDegree_(maxDegree) {}
  static SymFunc powerSum(const Partition& rho, int maxDegree, const RF& c = RF(Rational(1)));
  static SymFunc constant(const RF& c, int maxDegree) { return powerSum(Partition(), maxDegree, c); }

  int maxDegree() const { return maxDegree_; }
  const std::map<Partition, RF>& terms() const { return terms_; }
  RF coeff(const Partition& rho) const;
  void addTerm(const Partition& rho, const RF& c);
  SymFunc degreePart(int d) const;
  SymFunc withMaxDegree(int d) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(SymFunc a, const RF& s);
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

 private:
  int maxDegree_;
  std::map<Partition, RF> terms_;
};

// exp of a symmetric function without constant term.
SymFunc symExp(const SymFunc& g);

// Power sums to monomials: p_rho = sum_lambda R[rho][lambda] m_lambda, both
// indexed by partitionsOf(n).
std::vector<std::vector<Rational>> powerToMonomial(int n);
// m_lambda in the power-sum basis.
SymFunc monomialSym(const Partition& lambda);

// Finite signed sum of monomials in auxiliary variables with Q(q,t)
// coefficients. The Adams operation raises every auxiliary variable and q, t
// to the n-th power.
using Alphabet = MultiPoly<RationalFunction>;
Alphabet alphabetAdams(const Alphabet& a, int n);
Alphabet scalarAlphabet(const RF& c);
RFSeries alphabetSeries(const Alphabet& a, const std::vector<int>& orders);

RFSeries plethysticEvaluate(const SymFunc& f, const Alphabet& a, const std::vector<int>& orders);
RF plethysticEvaluateScalar(const SymFunc& f, const RF& c);
RFSeries plethysticExp(const Alphabet& a, const std::vector<int>& orders);

// Modified Macdonald polynomial via the inversion/major-index filling sum.
SymFunc modifiedMacdonald(const Partition& mu);
// Monomial coefficients of modifiedMacdonald, indexed like partitionsOf(|mu|).
std::vector<MultiPoly<Rational>> macdonaldMonomialCoefficients(const Partition& mu);

Report verifyCauchy(int n);
Report verifyGarsiaTesler(const Partition& mu, int degreeCap);
Report verifyKoornwinder(const Partition& mu, const Partition& nu);
Report verifyProductSpecialization(const Partition& mu);
Report verifyOneVariable(const Partition& mu);

}  // namespace hilb
