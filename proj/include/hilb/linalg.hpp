#pragma once

#include <vector>

#include "hilb/ring/rational.hpp"
#include "hilb/ring/unipoly.hpp"

namespace hilb {

using Matrix = std::vector<std::vector<Rational>>;

// Rank by exact Gaussian elimination.
int matrixRank(Matrix a);

// Solves a x = b for square invertible a; RankDeficientMatrix otherwise.
std::vector<Rational> solveSquare(Matrix a, std::vector<Rational> b);

// Polynomial through the points (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace hilb
