#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanet/mpoly.hpp"

namespace jordanet {

// Polynomial in one main variable whose coefficients are polynomials in the
// remaining variables. coeffs()[k] multiplies var^k; the list is trimmed so
// the leading coefficient is nonzero (empty list = zero polynomial).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::string var, std::vector<MPoly> coeffs);

  static UniPoly from_mpoly(const MPoly& p, const std::string& var);
  MPoly to_mpoly() const;

  const std::string& var() const { return var_; }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }
  // Returns MPoly::kDegreeOfZero for the zero polynomial.
  int degree() const { return coeffs_.empty() ? MPoly::kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const MPoly& leading() const { return coeffs_.back(); }
  MPoly coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : MPoly(); }

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const MPoly& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::string to_string() const { return to_mpoly().to_string(); }

 private:
  void trim();

  std::string var_;
  std::vector<MPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// Exact quotient a / b in the polynomial ring, or nullopt when b does not
// divide a. b must be nonzero.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Associate with integer coefficients of content 1 and positive leading
// coefficient (graded-lex leading term).
MPoly normalize_associate(const MPoly& p);

// Greatest common divisor in Q[vars], normalized by normalize_associate.
// Computed recursively through the univariate subresultant algorithm in the
// first occurring variable.
MPoly gcd(const MPoly& a, const MPoly& b);

// lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);

// Exact quotient in R[var]; nullopt when the division leaves a remainder or
// a leading-coefficient division is inexact in R.
std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b);

// GCD of the coefficients (normalized); zero for the zero polynomial.
MPoly content(const UniPoly& p);
// p / content(p), with leading coefficient normalized to be positive.
UniPoly primitive_part(const UniPoly& p);

// GCD over the fraction field of the coefficient ring via the subresultant
// pseudo-remainder sequence, returned primitive.
UniPoly subresultant_gcd(const UniPoly& p, const UniPoly& q);

struct SquarefreeFactor {
  UniPoly factor;
  unsigned multiplicity;
};

struct SquarefreeDecomposition {
  // p == content * prod(factor^multiplicity).
  MPoly content;
  // Primitive, squarefree, pairwise coprime, sorted by multiplicity.
  std::vector<SquarefreeFactor> factors;
};

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

}  // namespace jordanet
