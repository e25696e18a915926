#include "hilb/partition.hpp"

#include <cstdlib>
#include <functional>
#include <map>

namespace hilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "parts must be positive and weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<BoxStats> Partition::boxes() const {
  Partition conj = conjugate();
  std::vector<BoxStats> out;
  out.reserve(static_cast<std::size_t>(weight_));
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[r]; ++c) out.push_back({c, r, parts_[r] - c - 1, conj.part(c) - r - 1});
  return out;
}

long Partition::nStat() const {
  long s = 0;
  for (int i = 0; i < length(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

Rational Partition::zee() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  mpz_class z = 1;
  for (const auto& [part, m] : mult) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return Rational(z);
}

std::string Partition::toString() const {
  std::string s = "[";
  for (int i = 0; i < length(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + "]";
}

int maxWeight(int fallback) {
  if (const char* env = std::getenv("HILBSERIES_MAX_WEIGHT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return fallback;
}

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) { out.emplace_back(cur); return; }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitionsUpTo(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitionsOf(k)) out.push_back(std::move(p));
  return out;
}

namespace {
using Poly = MultiPoly<Rational>;
Poly mono(long c, int a, int b) { return RationalFunction::polyMonomial(Rational(c), a, b); }
}  // namespace

MultiPoly<Rational> statN(const Partition& p) {
  Poly r = mono(1, 0, 0);
  for (const auto& b : p.boxes()) {
    r *= mono(1, b.a + 1, 0) - mono(1, 0, b.l);
    r *= mono(1, b.a, 0) - mono(1, 0, b.l + 1);
  }
  return r;
}

MultiPoly<Rational> statB(const Partition& p) {
  Poly r(RationalFunction::vars());
  for (const auto& b : p.boxes()) r.addTerm({b.c, b.r}, Rational(1));
  return r;
}

MultiPoly<Rational> statT(const Partition& p) {
  return mono(1, static_cast<int>(p.conjugate().nStat()), static_cast<int>(p.nStat()));
}

MultiPoly<Rational> statD(const Partition& p) {
  return mono(-1, 0, 0) + (mono(1, 0, 0) - mono(1, 1, 0)) * (mono(1, 0, 0) - mono(1, 0, 1)) * statB(p);
}

RationalFunction statNInverse(const Partition& p) {
  // q^{a+1} - t^l = -t^l (1 - q^{a+1} t^{-l}); q^a - t^{l+1} = q^a (1 - q^{-a} t^{l+1})
  RationalFunction r(Rational(1));
  int qe = 0, te = 0;
  for (const auto& b : p.boxes()) {
    r *= RationalFunction::oneMinusInverse(b.a + 1, -b.l);
    r *= RationalFunction::oneMinusInverse(-b.a, b.l + 1);
    te -= b.l;
    qe -= b.a;
    r = -r;
  }
  return r * RationalFunction::monomial(Rational(1), qe, te);
}

}  // namespace hilb
