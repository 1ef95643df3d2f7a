#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanet/matrix.hpp"
#include "jordanet/unipoly.hpp"

namespace jordanet {

using QVector = std::vector<Rational>;

struct RowReduction {
  std::size_t rank = 0;
  // Reduced row echelon form; the first `rank` rows span the row space.
  QMatrix rref;
  std::vector<std::size_t> pivots;
  // Right kernel basis, one vector per row (cols - rank rows). Each vector
  // has a 1 in one free column and zeros in the other free columns.
  QMatrix kernel;
};

RowReduction rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
QMatrix kernel(const QMatrix& m);
// Row vectors y with y * m = 0.
QMatrix left_kernel(const QMatrix& m);
// Some x with m * x = b, or nullopt.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

Rational det(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
QMatrix adjugate(const QMatrix& m);

// Laplace expansion along rows with memoization over column subsets.
MPoly det_laplace(const PolyMatrix& m);
// Fraction-free Gaussian elimination with exact polynomial division.
MPoly det_bareiss(const PolyMatrix& m);
inline MPoly det(const PolyMatrix& m) { return det_laplace(m); }
PolyMatrix adjugate(const PolyMatrix& m);

// det(var * 1 - m), by Faddeev-LeVerrier.
UniPoly charpoly(const PolyMatrix& m, const std::string& var = "lambda");
UniPoly charpoly(const QMatrix& m, const std::string& var = "lambda");
UniPoly minpoly(const QMatrix& m, const std::string& var = "lambda");

// Evaluates a univariate polynomial with constant coefficients at a matrix.
QMatrix evaluate_at(const UniPoly& p, const QMatrix& m);

}  // namespace jordanet
