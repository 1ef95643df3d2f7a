#include "jordanet/classify.hpp"

#include <algorithm>
#include <sstream>

#include "jordanet/catalog.hpp"

namespace jordanet {

namespace {

QMatrix unit_for(const MatSpace& l, const std::optional<QMatrix>& u) {
  return u ? *u : find_invertible(l).matrix;
}

JordanStructure jordan_structure(const MatSpace& l, const QMatrix& u) {
  const auto test = is_jordan(l, u);
  if (!test.is_jordan) throw Error(ErrorCode::NotJordan, "space is not closed under the Jordan product");
  return JordanStructure::build(l, u);
}

InvariantVector row(std::size_t rad, bool assoc, std::size_t rad2, std::vector<unsigned> partition,
                    std::optional<std::size_t> rank_one = std::nullopt) {
  InvariantVector v{rad, assoc, rad2, std::move(partition), std::nullopt};
  if (rank_one) v.rad_rank_one = RankOneCount{false, *rank_one};
  return v;
}

}  // namespace

std::vector<unsigned> generic_multiplicity_partition(const MatSpace& l, const QMatrix& u) {
  const auto inv = inverse(u);
  if (!inv) throw Error(ErrorCode::SingularU, "unit matrix U is singular");
  const UniPoly cp = charpoly(to_poly(*inv) * generic_element(l));
  std::vector<unsigned> out;
  for (const auto& f : squarefree_decomposition(cp).factors) {
    for (int k = 0; k < f.factor.degree(); ++k) out.push_back(f.multiplicity);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool InvariantVector::operator==(const InvariantVector& o) const {
  const auto same_rank_one = [](const std::optional<RankOneCount>& a, const std::optional<RankOneCount>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->all == b->all && a->count == b->count);
  };
  return dim_rad == o.dim_rad && associative == o.associative && rad_square_dim == o.rad_square_dim &&
         partition == o.partition && same_rank_one(rad_rank_one, o.rad_rank_one);
}

std::string InvariantVector::to_string() const {
  std::ostringstream os;
  os << "(dim_rad=" << dim_rad << ", associative=" << (associative ? "true" : "false")
     << ", rad_square_dim=" << rad_square_dim << ", partition={";
  for (std::size_t k = 0; k < partition.size(); ++k) os << (k ? "," : "") << partition[k];
  os << "}";
  if (rad_rank_one) {
    os << ", rad_rank_one=";
    if (rad_rank_one->all) {
      os << "ALL";
    } else {
      os << rad_rank_one->count;
    }
  }
  os << ")";
  return os.str();
}

InvariantVector invariant_vector(const MatSpace& l, const std::optional<QMatrix>& u) {
  const QMatrix unit = unit_for(l, u);
  const auto a = jordan_structure(l, unit);
  const auto rad = radical(a);
  InvariantVector v;
  v.dim_rad = rad.basis.size();
  v.associative = is_associative(a);
  v.rad_square_dim = rad_square_dim(a, rad);
  v.partition = generic_multiplicity_partition(l, unit);
  if (v.dim_rad == 2) {
    const auto pencil = MatSpace::make(l.n(), {l.element(rad.basis[0]), l.element(rad.basis[1])});
    v.rad_rank_one = rank_one_pencil(pencil);
  }
  return v;
}

std::string PencilClass::label() const {
  switch (kind) {
    case Kind::NotJordan: return "NOT_JORDAN";
    case Kind::Diagonalizable: return "V" + std::to_string(i);
    case Kind::Nilpotent: return "NILPOTENT";
  }
  return "NOT_JORDAN";
}

PencilClass classify_pencil(const MatSpace& l) {
  if (l.dim() != 2) throw Error(ErrorCode::UnsupportedDim, "expected a pencil");
  const QMatrix u = find_invertible(l).matrix;
  PencilClass c;
  if (!is_jordan(l, u).is_jordan) return c;
  const auto a = JordanStructure::build(l, u);
  if (!radical(a).basis.empty()) {
    c.kind = PencilClass::Kind::Nilpotent;
    return c;
  }
  const auto p = generic_multiplicity_partition(l, u);
  c.kind = PencilClass::Kind::Diagonalizable;
  c.i = p.size() == 2 ? std::min(p[0], p[1]) : 0;
  return c;
}

std::string classify_abstract(const JordanStructure& a) {
  const auto rad = radical(a);
  const std::size_t r = rad.basis.size();
  if (a.dim() == 2) return r == 0 ? "1" : "2";
  if (a.dim() != 3) throw Error(ErrorCode::UnsupportedDim, "abstract classification covers dimensions 2 and 3");
  const bool assoc = is_associative(a);
  if (r == 0) return assoc ? "1a" : "1b";
  if (r == 1) return assoc ? "2a" : "2b";
  return rad_square_dim(a, rad) == 1 ? "3a" : "3b";
}

const std::vector<NetTableRow>& net_table() {
  static const std::vector<NetTableRow> table = {
      {"1a", row(0, true, 0, {2, 1, 1})},     {"1b", row(0, false, 0, {2, 2})},
      {"2a1", row(1, true, 0, {2, 2})},       {"2a2", row(1, true, 0, {3, 1})},
      {"2b", row(1, false, 0, {2, 2})},       {"3a", row(2, true, 1, {4}, 1)},
      {"3b1", row(2, true, 0, {4}, 2)},       {"3b2", row(2, true, 0, {4}, 1)},
  };
  return table;
}

void verify_net_table() {
  const auto& table = net_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto computed = invariant_vector(catalog_space("thm51/" + table[i].label).space);
    if (!(computed == table[i].invariants)) {
      throw Error(ErrorCode::Unrecognized, "canonical net " + table[i].label + " has invariants " + computed.to_string() +
                                               ", table says " + table[i].invariants.to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (table[i].invariants == table[j].invariants) {
        throw Error(ErrorCode::Unrecognized, "types " + table[j].label + " and " + table[i].label + " share invariants");
      }
    }
  }
}

std::string classify_net_S4(const MatSpace& l) {
  if (l.n() != 4 || l.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a net in S^4");
  const auto v = invariant_vector(l);
  for (const auto& r : net_table()) {
    if (r.invariants == v) return r.label;
  }
  throw Error(ErrorCode::Unrecognized, "invariant vector " + v.to_string() + " is not in the table");
}

std::optional<std::vector<unsigned>> classify_type1_partition(const MatSpace& l) {
  if (l.dim() != 3) throw Error(ErrorCode::UnsupportedDim, "expected a net");
  const QMatrix u = find_invertible(l).matrix;
  const auto a = jordan_structure(l, u);
  if (!radical(a).basis.empty() || !is_associative(a)) return std::nullopt;
  auto p = generic_multiplicity_partition(l, u);
  if (p.size() != 3) return std::nullopt;
  return p;
}

std::string_view to_string(CopencilClass c) {
  switch (c) {
    case CopencilClass::NotJordan: return "NOT_JORDAN";
    case CopencilClass::ClassL1: return "CLASS_L1";
    case CopencilClass::ClassL2: return "CLASS_L2";
  }
  return "NOT_JORDAN";
}

CopencilClass classify_copencil_S3(const MatSpace& l) {
  if (l.n() != 3 || l.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "expected a copencil in S^3");
  if (!is_regular(l)) return CopencilClass::NotJordan;
  const QMatrix u = find_invertible(l).matrix;
  if (!is_jordan(l, u).is_jordan) return CopencilClass::NotJordan;
  const auto a = JordanStructure::build(l, u);
  return radical(a).basis.empty() ? CopencilClass::ClassL1 : CopencilClass::ClassL2;
}

std::size_t ejo_component_count(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k3 = 1; 3 * k3 <= n; ++k3) {
    for (std::size_t k2 = k3; k3 + 2 * k2 <= n; ++k2) ++count;
  }
  return count + (n % 2 == 0 ? 1 : 0);
}

std::size_t ejo_series_coefficient(std::size_t n) {
  // Power series products truncated at degree n.
  std::vector<long> s(n + 1, 0);
  if (n >= 3) s[3] = 1;
  for (std::size_t step : {1, 2, 3}) {
    for (std::size_t k = step; k <= n; ++k) s[k] += s[k - step];
  }
  std::vector<long> t(n + 1, 0);
  if (n >= 2) t[2] = 1;
  for (std::size_t k = 2; k <= n; ++k) t[k] += t[k - 2];
  return static_cast<std::size_t>(s[n] + t[n]);
}

}  // namespace jordanet
