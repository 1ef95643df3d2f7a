#include "jordanet/jordan.hpp"

namespace jordanet {

namespace {

QMatrix require_inverse(const QMatrix& u) {
  auto inv = inverse(u);
  if (!inv) throw Error(ErrorCode::SingularU, "unit matrix U is singular");
  return *inv;
}

// Coordinates of members of L read off the pivot columns of its
// coordinate matrix.
class Coordinates {
 public:
  explicit Coordinates(const MatSpace& l) : n_(l.n()) {
    const RowReduction red = rref(l.coordinates());
    pivots_ = red.pivots;
    QMatrix sub(l.dim(), l.dim());
    for (std::size_t k = 0; k < l.dim(); ++k) {
      for (std::size_t c = 0; c < l.dim(); ++c) sub(k, c) = l.coordinates()(k, pivots_[c]);
    }
    inverse_ = l.dim() == 0 ? QMatrix() : *inverse(sub);
  }

  // Assumes membership; callers check with residue() when it matters.
  QVector of(const QMatrix& m) const {
    const std::size_t d = pivots_.size();
    QVector out(d, 0);
    for (std::size_t c = 0; c < d; ++c) {
      const auto& [i, j] = pair_of(pivots_[c]);
      const Rational& v = m(i, j);
      if (v == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += v * inverse_(c, k);
    }
    return out;
  }

 private:
  std::pair<std::size_t, std::size_t> pair_of(std::size_t index) const {
    if (pairs_.empty()) pairs_ = sym_pairs(n_);
    return pairs_[index];
  }

  std::size_t n_;
  std::vector<std::size_t> pivots_;
  QMatrix inverse_;
  mutable std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

QVector add(QVector a, const QVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t vector_rank(const std::vector<QVector>& vs, std::size_t width) {
  if (vs.empty()) return 0;
  QMatrix m(vs.size(), width);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) m(r, c) = vs[r][c];
  }
  return rank(m);
}

QVector random_coords(std::size_t m, Rng& rng) {
  QVector v(m);
  for (auto& x : v) x = rng.uniform(-3, 3);
  return v;
}

}  // namespace

QMatrix jordan_product_with_inverse(const QMatrix& x, const QMatrix& y, const QMatrix& u_inverse) {
  const QMatrix a = x * u_inverse * y;
  QMatrix s = a + a.transpose();
  return make_rational(1, 2) * s;
}

QMatrix jordan_product(const QMatrix& x, const QMatrix& y, const QMatrix& u) {
  return jordan_product_with_inverse(x, y, require_inverse(u));
}

JordanTest is_jordan(const MatSpace& l, const std::optional<QMatrix>& u) {
  JordanTest out;
  if (u) {
    if (!contains(l, *u)) throw Error(ErrorCode::UNotInSpace, "U does not lie in the space");
    out.u = *u;
  } else {
    out.u = find_invertible(l).matrix;
  }
  const QMatrix u_inv = require_inverse(out.u);
  const auto& b = l.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      QMatrix p = jordan_product_with_inverse(b[i], b[j], u_inv);
      QMatrix r = residue(l, p);
      if (!r.is_zero()) {
        out.witness = ClosureWitness{i, j, std::move(p), std::move(r)};
        return out;
      }
    }
  }
  out.is_jordan = true;
  return out;
}

Closure jordan_closure(const MatSpace& l, const QMatrix& u) {
  if (!contains(l, u)) throw Error(ErrorCode::UNotInSpace, "U does not lie in the space");
  const QMatrix u_inv = require_inverse(u);
  Closure out{l, 0};
  const std::size_t cap = sym_dim(l.n());
  for (;;) {
    std::vector<QMatrix> gens = out.space.basis();
    const auto& b = out.space.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i; j < b.size(); ++j) gens.push_back(jordan_product_with_inverse(b[i], b[j], u_inv));
    }
    MatSpace next = MatSpace::span(l.n(), gens);
    if (next.dim() == out.space.dim()) return out;
    out.space = std::move(next);
    if (++out.rounds > cap) throw Error(ErrorCode::ClosureDidNotConverge, "closure exceeded the round limit");
  }
}

JordanStructure JordanStructure::build(const MatSpace& l, const QMatrix& u) {
  const auto unit = contains(l, u);
  if (!unit) throw Error(ErrorCode::UNotInSpace, "U does not lie in the space");
  const QMatrix u_inv = require_inverse(u);
  const Coordinates coords(l);
  const std::size_t m = l.dim();
  std::vector<QVector> c(m * m);
  const auto& b = l.basis();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const QMatrix p = jordan_product_with_inverse(b[i], b[j], u_inv);
      if (!residue(l, p).is_zero()) {
        throw Error(ErrorCode::NotJordan, "product of basis elements " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " leaves the space");
      }
      c[i * m + j] = coords.of(p);
      c[j * m + i] = c[i * m + j];
    }
  }
  return JordanStructure(l, u, *unit, std::move(c));
}

QVector JordanStructure::multiply(const QVector& x, const QVector& y) const {
  const std::size_t m = dim();
  QVector out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      const QVector& cij = constants(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        if (cij[k] != 0) out[k] += f * cij[k];
      }
    }
  }
  return out;
}

QMatrix JordanStructure::multiplication_operator(const QVector& x) const {
  const std::size_t m = dim();
  QMatrix op(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    QVector e(m, 0);
    e[j] = 1;
    const QVector col = multiply(x, e);
    for (std::size_t k = 0; k < m; ++k) op(k, j) = col[k];
  }
  return op;
}

QVector JordanStructure::power(const QVector& x, unsigned k) const {
  if (k == 0) return unit_coords_;
  QVector p = x;
  for (unsigned e = 1; e < k; ++e) p = multiply(x, p);
  return p;
}

bool verify_jordan_axioms(const JordanStructure& a, Rng& rng, int pairs) {
  for (int t = 0; t < pairs; ++t) {
    const QVector x = random_coords(a.dim(), rng);
    const QVector y = random_coords(a.dim(), rng);
    const QVector x2 = a.multiply(x, x);
    if (a.multiply(x2, a.multiply(x, y)) != a.multiply(x, a.multiply(x2, y))) return false;
    if (a.multiply(a.unit_coords(), x) != x) return false;
  }
  return true;
}

RadicalReport radical(const JordanStructure& a) {
  const std::size_t m = a.dim();
  QVector tau(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) tau[k] += a.constants(k, j)[j];
  }
  QMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const QVector& cij = a.constants(i, j);
      for (std::size_t k = 0; k < m; ++k) gram(i, j) += cij[k] * tau[k];
    }
  }
  RadicalReport report;
  const QMatrix ker = kernel(gram);
  for (std::size_t r = 0; r < ker.rows(); ++r) report.basis.push_back(primitive_integer_vector(ker.row(r)));

  const std::size_t k = report.basis.size();
  report.ideal_ok = true;
  for (const auto& r : report.basis) {
    for (std::size_t j = 0; j < m && report.ideal_ok; ++j) {
      QVector e(m, 0);
      e[j] = 1;
      std::vector<QVector> probe = report.basis;
      probe.push_back(a.multiply(r, e));
      if (vector_rank(probe, m) != k) report.ideal_ok = false;
    }
  }
  if (!report.ideal_ok) throw Error(ErrorCode::IdealCheckFailed, "trace-form kernel is not an ideal");
  report.nilpotent_ok = true;
  for (const auto& r : report.basis) {
    if (!is_zero_vector(a.power(r, static_cast<unsigned>(k + 1)))) report.nilpotent_ok = false;
  }
  if (!report.nilpotent_ok) throw Error(ErrorCode::NilpotencyCheckFailed, "trace-form kernel has a non-nilpotent element");
  return report;
}

bool is_associative(const JordanStructure& a) {
  const std::size_t m = a.dim();
  std::vector<QVector> e(m, QVector(m, 0));
  for (std::size_t k = 0; k < m; ++k) e[k][k] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (a.multiply(a.constants(i, j), e[k]) != a.multiply(e[i], a.constants(j, k))) return false;
      }
    }
  }
  return true;
}

std::size_t rad_square_dim(const JordanStructure& a, const RadicalReport& rad) {
  std::vector<QVector> products;
  for (std::size_t p = 0; p < rad.basis.size(); ++p) {
    for (std::size_t q = p; q < rad.basis.size(); ++q) products.push_back(a.multiply(rad.basis[p], rad.basis[q]));
  }
  return vector_rank(products, a.dim());
}

std::vector<PeircePiece> peirce(const JordanStructure& a, const std::vector<QMatrix>& idempotents) {
  const std::size_t m = a.dim();
  const std::size_t d = idempotents.size();
  std::vector<QVector> x;
  QVector total(m, 0);
  for (const auto& e : idempotents) {
    auto c = contains(a.space(), e);
    if (!c) throw Error(ErrorCode::NotOrthogonalIdempotents, "idempotent does not lie in the algebra");
    x.push_back(*c);
    total = add(total, *c);
  }
  if (total != a.unit_coords()) throw Error(ErrorCode::NotOrthogonalIdempotents, "idempotents do not sum to the unit");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const QVector p = a.multiply(x[i], x[j]);
      if (i == j ? p != x[i] : !is_zero_vector(p)) {
        throw Error(ErrorCode::NotOrthogonalIdempotents, "idempotents are not orthogonal idempotents");
      }
    }
  }
  std::vector<QMatrix> ops;
  for (const auto& xi : x) ops.push_back(a.multiplication_operator(xi));
  const QMatrix id = QMatrix::identity(m);
  const Rational half = make_rational(1, 2);

  std::vector<PeircePiece> out;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      // Stack the eigen-conditions and take the common kernel.
      std::vector<QMatrix> conditions;
      if (i == j) {
        conditions.push_back(ops[i] - id);
      } else {
        conditions.push_back(ops[i] - half * id);
        conditions.push_back(ops[j] - half * id);
      }
      QMatrix stacked(conditions.size() * m, m);
      for (std::size_t c = 0; c < conditions.size(); ++c) {
        for (std::size_t r = 0; r < m; ++r) {
          for (std::size_t k = 0; k < m; ++k) stacked(c * m + r, k) = conditions[c](r, k);
        }
      }
      const QMatrix ker = kernel(stacked);
      PeircePiece piece{i, j, {}};
      for (std::size_t r = 0; r < ker.rows(); ++r) piece.basis.push_back(a.space().element(primitive_integer_vector(ker.row(r))));
      out.push_back(std::move(piece));
    }
  }
  return out;
}

ReciprocalCheck check_reciprocal_identity(const MatSpace& l, const QMatrix& u, int trials, Rng& rng) {
  if (!contains(l, u)) throw Error(ErrorCode::UNotInSpace, "U does not lie in the space");
  require_inverse(u);
  ReciprocalCheck out;
  int attempts = 0;
  while (static_cast<int>(out.tested) < trials) {
    if (++attempts > 200 * std::max(trials, 1)) break;
    const QVector c = random_coords(l.dim(), rng);
    const QMatrix x = l.element(c);
    const auto x_inv = inverse(x);
    if (!x_inv) continue;
    ++out.tested;
    if (!contains(l, u * *x_inv * u)) {
      out.holds = false;
      out.failing_point = x;
      return out;
    }
  }
  if (out.tested == 0) throw Error(ErrorCode::NotRegular, "no invertible sample point found");
  return out;
}

}  // namespace jordanet
