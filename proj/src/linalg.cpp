#include "hilb/linalg.hpp"

#include <utility>

#include "hilb/parallel.hpp"

namespace hilb {

namespace {
int jobCount = 1;
}

int jobs() { return jobCount; }
void setJobs(int n) { jobCount = n < 1 ? 1 : n; }

int matrixRank(Matrix a) {
  int rank = 0;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && a[piv][col].isZero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    const auto& p = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (a[r][col].isZero()) continue;
      Rational f = a[r][col] / p[col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> solveSquare(Matrix a, std::vector<Rational> b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].isZero()) ++piv;
    if (piv == n) throw Error(ErrorCode::RankDeficientMatrix, "singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].isZero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(Rational(1));
    Rational den(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly(std::vector<Rational>{-xs[j], Rational(1)});
      den *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / den);
  }
  return result;
}

}  // namespace hilb
