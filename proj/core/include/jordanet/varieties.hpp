#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanet/spaces.hpp"

namespace jordanet {

enum class CertificateKind { CertifiedEmpty, Unknown, SolutionsExist };
std::string_view to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::Unknown;
  unsigned degree = 0;
  std::size_t rows = 0;     // multiples x^a * f_i of degree D
  std::size_t columns = 0;  // monomials of degree D
  std::size_t rank = 0;
  std::optional<QVector> witness;  // a common projective zero, when found
};

// Degree-D Macaulay matrix test for the homogeneous system in `vars`.
// CERTIFIED_EMPTY iff the multiples span every degree-D monomial; otherwise
// a small integer sweep looks for a common zero (SOLUTIONS_EXIST), else
// UNKNOWN. Throws NOT_HOMOGENEOUS.
Certificate macaulay_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars, unsigned degree);
// The first certifying degree in [min_degree, max_degree], or the last result.
Certificate macaulay_sweep(const std::vector<MPoly>& polys, const std::vector<std::string>& vars,
                           unsigned min_degree = 2, unsigned max_degree = 6);

// Nonzero 2x2 minors of generic_element(L) in t1..tm, deduplicated.
std::vector<MPoly> rank_one_system(const MatSpace& l);

struct RankOneCount {
  bool all = false;
  std::size_t count = 0;
};

// Distinct projective points of a pencil with rank <= 1, counted over C.
RankOneCount rank_one_pencil(const MatSpace& l);

// Gcd of all nonzero 2x2 minors as a binary form in t1, t2 (zero when all
// minors vanish).
MPoly rank_one_gcd(const MatSpace& l);

// Values of the polynomial catalog `id` at L. Pencil cubics take a pencil
// span{1_3, X} in S^3; net quadrics a net span{1_3, X, Y} in S^3; Plucker
// catalogs a net in S^4. Throws CONVENTION_MISMATCH when L does not fit.
std::vector<Rational> catalog_eval(const std::string& id, const MatSpace& l);
// Pencil cubics at a traceless X; net quadrics are not defined on a point.
std::vector<Rational> catalog_eval(const std::string& id, const QMatrix& x);
std::vector<Rational> catalog_eval(const std::string& id, const PluckerVector& p);

struct MinRankBounds {
  std::size_t upper = 0;
  std::size_t lower = 1;
  QMatrix upper_witness;
  Certificate certificate;  // rank-one emptiness attempt
  bool exact() const { return upper == lower; }
};

// Upper bound from basis elements, radical elements (when L is Jordan) and
// `trials` seeded integer combinations; lower bound 2 when the rank-one
// system is certified empty.
MinRankBounds min_rank_bounds(const MatSpace& l, int trials, std::uint64_t seed = 0);

}  // namespace jordanet
