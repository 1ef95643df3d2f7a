#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordanet/linalg.hpp"
#include "jordanet/random.hpp"

namespace jordanet {

// Coordinates on S^n: the entries (i, j) with i <= j, in lexicographic
// order (11, 12, ..., 1n, 22, ...).
std::size_t sym_dim(std::size_t n);
std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t n);
QVector vectorize(const QMatrix& m);
QMatrix unvectorize(std::size_t n, const QVector& v);
// trace(A * B) for symmetric A, B.
Rational trace_pairing(const QMatrix& a, const QMatrix& b);

// An m-dimensional subspace of S^n with an ordered basis.
class MatSpace {
 public:
  // Validates symmetry and linear independence; m = 0 is allowed.
  static MatSpace make(std::size_t n, std::vector<QMatrix> basis);
  // Spans the given matrices, dropping dependent ones (first occurrences kept).
  static MatSpace span(std::size_t n, const std::vector<QMatrix>& generators);
  static MatSpace full(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  // m x sym_dim(n), row k = vectorize(basis[k]).
  const QMatrix& coordinates() const { return coords_; }

  QMatrix element(const QVector& c) const;

 private:
  MatSpace(std::size_t n, std::vector<QMatrix> basis, QMatrix coords)
      : n_(n), basis_(std::move(basis)), coords_(std::move(coords)) {}

  std::size_t n_ = 0;
  std::vector<QMatrix> basis_;
  QMatrix coords_;
};

// Variables t1..tm.
std::vector<std::string> generic_variables(std::size_t m, const std::string& prefix = "t");
PolyMatrix generic_element(const MatSpace& l, const std::vector<std::string>& vars);
PolyMatrix generic_element(const MatSpace& l);
MPoly generic_det(const MatSpace& l);
bool is_regular(const MatSpace& l);

struct InvertibleElement {
  QMatrix matrix;
  QVector coords;
};

// Identity if it lies in L, otherwise the first invertible element in a
// sweep of integer coordinate tuples by increasing max-norm. Throws
// NOT_REGULAR when generic_det vanishes.
InvertibleElement find_invertible(const MatSpace& l);

std::optional<QVector> contains(const MatSpace& l, const QMatrix& m);
// Reduction of m modulo L in coordinates: zero iff m lies in L.
QMatrix residue(const MatSpace& l, const QMatrix& m);
bool same_space(const MatSpace& a, const MatSpace& b);
bool is_subspace(const MatSpace& a, const MatSpace& b);

MatSpace orth_complement(const MatSpace& l);

// Basis B_k -> P^T B_k P. Throws SINGULAR_P.
MatSpace congruence_transform(const MatSpace& l, const QMatrix& p);
// Random invertible P with entries in [-3, 3].
QMatrix random_invertible(std::size_t n, Rng& rng, int bound = 3);
MatSpace sample_congruent(const MatSpace& l, Rng& rng);
MatSpace sample_congruent(const MatSpace& l, std::uint64_t seed);
// Random m-dimensional subspace with integer basis entries in [-bound, bound].
MatSpace random_space(std::size_t n, std::size_t m, Rng& rng, int bound = 2);

struct PluckerVector {
  std::size_t n = 0;  // number of columns of the coordinate matrix
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> index;  // increasing m-subsets, lex order
  QVector value;

  Rational at(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  // Variable names "p" followed by the digits of each index; only defined
  // when all indices are below 10.
  std::map<std::string, Rational> assignment() const;
};

PluckerVector plucker(const MatSpace& l);
bool proportional(const QVector& a, const QVector& b);

// One-parameter family of subspaces with basis entries polynomial in `param`.
struct ParametricBasis {
  std::size_t n = 0;
  std::vector<PolyMatrix> basis;
  std::string param = "t";

  MatSpace at(const Rational& value) const;
};

// Limit as param -> 0, by valuation-normalized row reduction.
MatSpace grassmann_limit(const ParametricBasis& family);

// Family obtained by substituting linear forms in the quadric variables.
// Each basis matrix B is read as the quadric v^T B v in `coords`; the
// substitution replaces coords[k] by substitution[k], an expression in the
// coords, the parameter, and the imaginary unit `i` (i^2 = -1). The result
// must be free of i.
ParametricBasis substitution_family(const MatSpace& base, const std::vector<std::string>& coords,
                                    const std::vector<MPoly>& substitution, const std::string& param = "t");

}  // namespace jordanet
