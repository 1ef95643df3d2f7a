#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanet/jordan.hpp"
#include "jordanet/varieties.hpp"

namespace jordanet {

// Eigenvalue multiplicities of U^-1 X for the generic element X of L,
// descending: each squarefree factor of degree d and multiplicity k of the
// characteristic polynomial contributes d entries k.
std::vector<unsigned> generic_multiplicity_partition(const MatSpace& l, const QMatrix& u);

struct InvariantVector {
  std::size_t dim_rad = 0;
  bool associative = false;
  std::size_t rad_square_dim = 0;
  std::vector<unsigned> partition;
  std::optional<RankOneCount> rad_rank_one;  // only when dim_rad == 2

  bool operator==(const InvariantVector& o) const;
  std::string to_string() const;
};

// Requires a Jordan space; U defaults to find_invertible(L).
InvariantVector invariant_vector(const MatSpace& l, const std::optional<QMatrix>& u = std::nullopt);

struct PencilClass {
  enum class Kind { NotJordan, Diagonalizable, Nilpotent };
  Kind kind = Kind::NotJordan;
  std::size_t i = 0;  // V_i: eigenvalue multiplicities i <= n - i
  std::string label() const;
};

// Throws NOT_REGULAR.
PencilClass classify_pencil(const MatSpace& l);

// "1", "2" for dimension 2; "1a", "1b", "2a", "2b", "3a", "3b" for
// dimension 3. Throws UNSUPPORTED_DIM.
std::string classify_abstract(const JordanStructure& a);

struct NetTableRow {
  std::string label;
  InvariantVector invariants;
};

// Invariant vectors of the eight canonical Jordan nets in S^4.
const std::vector<NetTableRow>& net_table();
// Recomputes the table from the catalog; throws UNRECOGNIZED if any row
// disagrees or two rows coincide.
void verify_net_table();

// One of 1a, 1b, 2a1, 2a2, 2b, 3a, 3b1, 3b2. Throws NOT_JORDAN, or
// UNRECOGNIZED for an invariant vector outside the table.
std::string classify_net_S4(const MatSpace& l);

// (k1, k2, k3) for a net of type 1(a), nullopt otherwise. Throws NOT_JORDAN.
std::optional<std::vector<unsigned>> classify_type1_partition(const MatSpace& l);

enum class CopencilClass { NotJordan, ClassL1, ClassL2 };
std::string_view to_string(CopencilClass c);
CopencilClass classify_copencil_S3(const MatSpace& l);

// Number of components by partition count, and the same number read off
// the generating function t^3/((1-t)(1-t^2)(1-t^3)) + t^2/(1-t^2).
std::size_t ejo_component_count(std::size_t n);
std::size_t ejo_series_coefficient(std::size_t n);

}  // namespace jordanet
