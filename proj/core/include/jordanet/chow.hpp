#pragma once

#include <string>
#include <vector>

#include "jordanet/spaces.hpp"

namespace jordanet {

// Rows are the pairs (i, j), i <= j, of S^n; columns are the monomials of
// degree n - 1 in the generic-element variables, graded-lex with the first
// variable largest. Entry = coefficient of the column monomial in entry
// (i, j) of adj(sum_k vars[k] * basis_k).
template <class T>
struct ChowMatrixOf {
  std::size_t n = 0;
  std::vector<std::string> vars;
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  std::vector<MPoly::Exponents> columns;
  Matrix<T> values;
};

using ChowMatrix = ChowMatrixOf<Rational>;
using SymbolicChowMatrix = ChowMatrixOf<MPoly>;

// Monomials of the given degree in vars, graded-lex descending.
std::vector<MPoly::Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);
std::string monomial_to_string(const std::vector<std::string>& vars, const MPoly::Exponents& e);

ChowMatrix chow_matrix(const MatSpace& l);
ChowMatrix chow_matrix(const MatSpace& l, const std::vector<std::string>& vars);
// Chow matrix of the generic element sum_k vars[k] * basis[k] with symbolic
// basis entries; the vars must not occur in the basis entries.
SymbolicChowMatrix chow_matrix(const std::vector<PolyMatrix>& basis, const std::vector<std::string>& vars);

// Generic symmetric n x n matrix of variables <prefix>ij, i <= j (1-based).
PolyMatrix generic_symmetric(std::size_t n, const std::string& prefix);

// Throw NOT_REGULAR for singular spaces.
std::size_t chow_rank(const MatSpace& l);
// Left-kernel basis in reduced echelon form, each row scaled to a primitive
// integer vector, rendered as linear forms in z11, z12, ...
std::vector<MPoly> chow_kernel_forms(const MatSpace& l);

// If every (k+1)-minor of the Chow matrix vanishes, i.e. chow_rank <= k.
bool chow_minors_vanish(const MatSpace& l, std::size_t k);

// Rank of the vectorized adjugates of `trials` seeded integer points of L
// with nonzero determinant.
std::size_t sampled_reciprocal_span(const MatSpace& l, int trials, std::uint64_t seed = 0);

// Determinant of the 6 x 6 Chow matrix of the generic net span{X, Y, Z} in
// S^3, in the 18 entries x11..x33, y11..y33, z11..z33. When the environment
// variable JORDANET_CACHE_DIR names a directory, the result is stored there
// and reused on later calls.
MPoly chow_det_generic_n3();
// The same polynomial evaluated at a net in S^3 (basis X, Y, Z).
Rational evaluate_generic_n3(const MPoly& det, const MatSpace& l);

}  // namespace jordanet
