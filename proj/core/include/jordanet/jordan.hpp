#pragma once

#include <optional>
#include <vector>

#include "jordanet/spaces.hpp"

namespace jordanet {

// X •_U Y = (X U^-1 Y + Y U^-1 X) / 2. Throws SINGULAR_U.
QMatrix jordan_product(const QMatrix& x, const QMatrix& y, const QMatrix& u);
// Same product with U^-1 supplied.
QMatrix jordan_product_with_inverse(const QMatrix& x, const QMatrix& y, const QMatrix& u_inverse);

struct ClosureWitness {
  std::size_t i = 0;  // 0-based basis indices
  std::size_t j = 0;
  QMatrix product;
  QMatrix residue;
};

struct JordanTest {
  bool is_jordan = false;
  QMatrix u;
  std::optional<ClosureWitness> witness;
};

// Checks basis_i • basis_j in L for all i <= j. U defaults to
// find_invertible(L); a supplied U must lie in L and be invertible.
JordanTest is_jordan(const MatSpace& l, const std::optional<QMatrix>& u = std::nullopt);

struct Closure {
  MatSpace space;
  std::size_t rounds = 0;
};

// Smallest subspace containing L and closed under •_U.
Closure jordan_closure(const MatSpace& l, const QMatrix& u);

class JordanStructure {
 public:
  // Throws NOT_JORDAN when L is not closed under •_U.
  static JordanStructure build(const MatSpace& l, const QMatrix& u);

  const MatSpace& space() const { return space_; }
  const QMatrix& unit() const { return u_; }
  const QVector& unit_coords() const { return unit_coords_; }
  std::size_t dim() const { return space_.dim(); }
  // Coordinates of basis_i • basis_j.
  const QVector& constants(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

  QVector multiply(const QVector& x, const QVector& y) const;
  // Matrix of y -> x • y in basis coordinates (column j = x • basis_j).
  QMatrix multiplication_operator(const QVector& x) const;
  QVector power(const QVector& x, unsigned k) const;

 private:
  JordanStructure(MatSpace space, QMatrix u, QVector unit_coords, std::vector<QVector> c)
      : space_(std::move(space)), u_(std::move(u)), unit_coords_(std::move(unit_coords)), c_(std::move(c)) {}

  MatSpace space_;
  QMatrix u_;
  QVector unit_coords_;
  std::vector<QVector> c_;
};

// Checks the Jordan identity (X^2 • Y) • X = X^2 • (Y • X) and the unit law
// on `pairs` random elements; returns false on the first violation.
bool verify_jordan_axioms(const JordanStructure& a, Rng& rng, int pairs = 20);

struct RadicalReport {
  std::vector<QVector> basis;  // coordinate vectors
  bool ideal_ok = false;
  bool nilpotent_ok = false;
};

// Kernel of the trace form T(x, y) = trace(L_{x•y}). Throws
// IDEAL_CHECK_FAILED or NILPOTENCY_CHECK_FAILED if the kernel is not a
// nilpotent ideal.
RadicalReport radical(const JordanStructure& a);
bool is_associative(const JordanStructure& a);
std::size_t rad_square_dim(const JordanStructure& a, const RadicalReport& rad);

struct PeircePiece {
  std::size_t i = 0;  // 0-based, i <= j
  std::size_t j = 0;
  std::vector<QMatrix> basis;
};

// Joint eigenspace decomposition relative to orthogonal idempotents
// summing to the unit. Throws NOT_ORTHOGONAL_IDEMPOTENTS.
std::vector<PeircePiece> peirce(const JordanStructure& a, const std::vector<QMatrix>& idempotents);

struct ReciprocalCheck {
  bool holds = true;
  std::size_t tested = 0;
  std::optional<QMatrix> failing_point;
};

// For `trials` seeded integer points X in L with det X != 0, checks
// U X^-1 U in L (equivalently X^-1 in U^-1 L U^-1).
ReciprocalCheck check_reciprocal_identity(const MatSpace& l, const QMatrix& u, int trials, Rng& rng);

}  // namespace jordanet
