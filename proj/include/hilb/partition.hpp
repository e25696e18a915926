#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hilb/ring/multipoly.hpp"
#include "hilb/ring/ratfunc.hpp"

namespace hilb {

// Zero-based column, row, arm and leg of a box.
struct BoxStats {
  int c, r, a, l;
  auto operator<=>(const BoxStats&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  std::vector<BoxStats> boxes() const;
  long nStat() const;    // sum_i i * lambda_i
  Rational zee() const;  // z_lambda = prod i^{m_i} m_i!
  std::string toString() const;

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Global weight cap from HILBSERIES_MAX_WEIGHT, or the given default.
int maxWeight(int fallback);

// Partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitionsOf(int n);
std::vector<Partition> partitionsUpTo(int n);

// Box statistic polynomials in (q, t).
MultiPoly<Rational> statN(const Partition& p);
MultiPoly<Rational> statB(const Partition& p);
MultiPoly<Rational> statT(const Partition& p);
MultiPoly<Rational> statD(const Partition& p);
// 1/N_lambda in factored form.
RationalFunction statNInverse(const Partition& p);

}  // namespace hilb
