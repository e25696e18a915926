#include "hilb/closedform.hpp"

#include "hilb/parallel.hpp"

namespace hilb {

Series lagrangeExpLog(const LaurentSeries<Rational>& F, int order) {
  const int m = -F.lowestExponent();
  if (m < 1 || F.isZero()) throw Error(ErrorCode::InvalidArgument, "F must start with y^{-m}, m >= 1");
  if (!(F.coeff(-m) == Rational(1))) throw Error(ErrorCode::InvalidArgument, "F must have leading coefficient 1");
  if (F.precision() < m * (order - 1)) throw Error(ErrorCode::TruncationTooSmall, "F is not known far enough");
  Series l = Series({"u"}, {order});
  LaurentSeries<Rational> p = F;
  for (int n = 1; n <= order; ++n) {
    if (n > 1) p = p * F;
    l.at(static_cast<std::size_t>(n)) = p.coeff(0) / Rational(n);
  }
  return exp(l);
}

namespace {

// 1 + x + ... + x^{r-1} in [x] through x^order
Series geometricBlock(int r, int order, const std::string& var) {
  Series s({var}, {order});
  for (int i = 0; i < r && i <= order; ++i) s.at(static_cast<std::size_t>(i)) = Rational(1);
  return s;
}

}  // namespace

BranchSystem branchPowerSums(int r, int jMax, int yOrder) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "branches need r >= 2");
  const int m = r - 1, S = m * yOrder;
  BranchSystem b;
  b.r = r;
  // f^{1/m} = x (1 + ... + x^{r-1})^{-2/m}
  Series phi = pow(geometricBlock(r, S, "s"), Rational(-2, m)) * Series::variable({"s"}, {S}, 0);
  b.g = compositionalInverse(phi);
  b.powerSums.push_back(Series::constant({"y"}, {yOrder}, Rational(m)));
  Series gj = b.g.constantLike(Rational(1));
  for (int j = 1; j <= jMax; ++j) {
    gj = gj * b.g;
    // sum over the m-th roots of unity keeps exponents divisible by m
    Series p({"y"}, {yOrder});
    for (int t = 0; t <= yOrder; ++t) p.at(static_cast<std::size_t>(t)) = gj.at(static_cast<std::size_t>(m * t)) * Rational(m);
    b.powerSums.push_back(p);
  }
  return b;
}

Series branchProduct(const BranchSystem& b) {
  const int m = b.r - 1;
  if (static_cast<int>(b.powerSums.size()) <= m) throw Error(ErrorCode::TruncationTooSmall, "need power sums P_1..P_{r-1}");
  // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i
  std::vector<Series> e{b.powerSums[0].constantLike(Rational(1))};
  for (int k = 1; k <= m; ++k) {
    Series acc = e[0].zeroLike();
    for (int i = 1; i <= k; ++i) {
      Series t = e[static_cast<std::size_t>(k - i)] * b.powerSums[static_cast<std::size_t>(i)];
      if (i % 2) acc += t;
      else acc -= t;
    }
    e.push_back(acc * Rational(1, k));
  }
  return e.back();
}

Series b3Product(int r, int yOrder) {
  if (r <= 1) return Series::constant({"y"}, {yOrder}, Rational(1));
  const int m = r - 1;
  // 1/f = x^{-m} (1 + ... + x^{r-1})^2
  Series block = geometricBlock(r, m * yOrder + m, "x");
  Series sq = block * block;
  std::vector<Rational> c;
  for (std::size_t i = 0; i < sq.size(); ++i) c.push_back(sq.at(i));
  Series prodOverY = lagrangeExpLog(LaurentSeries<Rational>(-m, c), yOrder);
  Series y = ySeries(yOrder);
  Series one = y.constantLike(Rational(1));
  Series py({"y"}, {yOrder});
  for (int n = 0; n <= yOrder; ++n) py.at(static_cast<std::size_t>(n)) = prodOverY.at(static_cast<std::size_t>(n));
  Series t = pow(one - y, Rational(r)) * py;
  if (!(t.constantTerm() == Rational(1))) throw Error(ErrorCode::SquareRootObstruction, "constant term is not 1");
  return pow(t, Rational(-1, 2));
}

BinomialTriple binomialTriples(int n, int r) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  auto B = [](long x, long j) { return binomial(Rational(x), j); };
  auto sgn = [](long e) { return Rational(e % 2 ? -1 : 1); };
  BinomialTriple t{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i <= n / 2; ++i)
    for (int j = 0; j <= n + 2 * i; ++j) {
      long kk = n + 2 * i - j;
      t.alpha += sgn(j) * B(kk * r + n - 1, 2 * n - 1) * B(2 * n, j);
    }
  for (int k = 1; k < n; ++k) {
    const int l = n - k;
    Rational sum(0);
    for (int i = 0; i <= k - 1; ++i) {
      for (int j = 0; j <= l - 1; ++j) {
        Rational inner(0);
        for (int e = 1; e <= 2 * l; ++e)
          inner += Rational(e) * B(static_cast<long>(r + 1) * l - static_cast<long>(j) * r, 2 * l - e) *
                   B(static_cast<long>(r + 1) * k - static_cast<long>(i) * r, 2 * k + e);
        sum += sgn(i + j) * B(2 * k, i) * B(2 * l, j) * inner;
      }
      for (int j = l; j <= std::min(2 * l, n - i - 1); ++j)
        sum += sgn(i + j) * B(2 * k, i) * B(2 * l, j) * Rational(static_cast<long>(j) * k - static_cast<long>(l) * i) * Rational(r) / Rational(n) *
               B(static_cast<long>(r + 1) * n - static_cast<long>(r) * (i + j) - 1, 2 * n - 1);
    }
    t.beta += sum / Rational(static_cast<long>(k) * l);
  }
  for (int k = 1; k < n; ++k) {
    const int l = n - k;
    Rational sum(0);
    for (int a = 0; a <= std::min(k, l); ++a) {
      Rational left(0), right(0);
      for (int i = 0; i <= k - a; ++i) left += sgn(i) * B(static_cast<long>(r) * (k - a - i) + k - 1, 2 * k - 1) * B(2 * k, i);
      for (int i = 0; i <= a + l; ++i) right += sgn(i) * B(static_cast<long>(r) * (a + l - i) + l - 1, 2 * l - 1) * B(2 * l, i);
      sum += Rational(a) * left * right;
    }
    t.gamma += sum / Rational(static_cast<long>(k) * l);
  }
  return t;
}

Rational b4Exponent(int n, int r) {
  auto t = binomialTriples(n, r);
  Rational R(r);
  return Rational(4) * R * t.alpha - R * R - Rational(3) * pow(R, 2 * n) - Rational(2 * n) * t.beta - Rational(2 * n) * R * R * t.gamma;
}

Series b4Binomial(int r, int yOrder) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be nonnegative");
  auto ex = parallelMap<Rational>(static_cast<std::size_t>(yOrder), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    return b4Exponent(n, r) / Rational(8 * n);
  });
  Series l({"y"}, {yOrder});
  for (int n = 1; n <= yOrder; ++n) l.at(static_cast<std::size_t>(n)) = ex[static_cast<std::size_t>(n - 1)];
  return exp(l);
}

Series b4Conjecture(int r, int yOrder) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be nonnegative");
  if (r <= 1) return Series::constant({"y"}, {yOrder}, Rational(1));
  const int m = r - 1;
  // P_n has y-valuation at least n/m, so P_j for j <= m*yOrder suffices
  const int jMax = 2 * m * yOrder;
  BranchSystem b = branchPowerSums(r, jMax, yOrder);
  const auto& P = b.powerSums;
  Series y = ySeries(yOrder);
  Series one = y.constantLike(Rational(1));
  Series l1 = y.zeroLike(), l2 = y.zeroLike();
  for (int n = 1; 2 * n <= jMax && n <= m * yOrder; ++n) l1 -= P[static_cast<std::size_t>(n)] * P[static_cast<std::size_t>(n)] * Rational(1, n);
  for (int n = 1; 2 * r * n <= jMax; ++n)
    l2 -= (P[static_cast<std::size_t>(r * n)] * P[static_cast<std::size_t>(r * n)] - P[static_cast<std::size_t>(2 * r * n)]) * Rational(1, n);
  const long r2 = static_cast<long>(r) * r;
  Series logRhs = logOneMinus(y * Rational(r2)) * Rational(3) - logOneMinus(y) * Rational(3 * r2) + (l1 + l2) * Rational(2);
  if (!logRhs.constantTerm().isZero()) throw Error(ErrorCode::RootObstruction, "eighth root needs constant term 1");
  Series logG3 = log(b3Product(r, yOrder));
  return exp(logRhs * Rational(1, 8) - logG3 * Rational(r));
}

namespace {

Series pullBackVerlinde(const Series& logB, int r, int yOrder) {
  Series y = ySeries(yOrder);
  Series t = -(y * pow(y.constantLike(Rational(1)) - y, Rational(static_cast<long>(r) * r - 1)));
  return exp(composeUni(logB, t));
}

}  // namespace

Series b3Localization(int r, int yOrder) {
  auto U = extractUniversal(Flavor::Verlinde, r + 1, yOrder, 0);
  return pullBackVerlinde(U.logG[3], r, yOrder);
}

Series b4Localization(int r, int yOrder) {
  auto U = extractUniversal(Flavor::Verlinde, r + 1, yOrder, 0);
  return pullBackVerlinde(U.logG[4], r, yOrder);
}

Report verifyBConjecture(int r, int order) {
  Report rep("b-conjecture", {{"r", r}, {"order", order}});
  Series a = b4Binomial(r, order), b = b4Conjecture(r, order);
  for (int n = 0; n <= order; ++n)
    rep.expectEqual(a.at(static_cast<std::size_t>(n)), b.at(static_cast<std::size_t>(n)), "y^" + std::to_string(n) + " binomial vs product");
  return rep;
}

}  // namespace hilb
