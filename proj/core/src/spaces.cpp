#include "jordanet/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace jordanet {

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(sym_dim(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

QVector vectorize(const QMatrix& m) {
  QVector v;
  v.reserve(sym_dim(m.rows()));
  for (const auto& [i, j] : sym_pairs(m.rows())) v.push_back(m(i, j));
  return v;
}

QMatrix unvectorize(std::size_t n, const QVector& v) {
  if (v.size() != sym_dim(n)) throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong length");
  QMatrix m(n, n);
  std::size_t k = 0;
  for (const auto& [i, j] : sym_pairs(n)) {
    m(i, j) = v[k];
    m(j, i) = v[k];
    ++k;
  }
  return m;
}

Rational trace_pairing(const QMatrix& a, const QMatrix& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
  }
  return s;
}

MatSpace MatSpace::make(std::size_t n, std::vector<QMatrix> basis) {
  QMatrix coords(basis.size(), sym_dim(n));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const QMatrix& b = basis[k];
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "basis matrix " + std::to_string(k + 1) + " is not " +
                                                    std::to_string(n) + "x" + std::to_string(n));
    }
    if (!b.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "basis matrix " + std::to_string(k + 1) + " is not symmetric");
    const QVector v = vectorize(b);
    for (std::size_t c = 0; c < v.size(); ++c) coords(k, c) = v[c];
  }
  if (rank(coords) != basis.size()) throw Error(ErrorCode::DependentBasis, "basis matrices are linearly dependent");
  return MatSpace(n, std::move(basis), std::move(coords));
}

MatSpace MatSpace::span(std::size_t n, const std::vector<QMatrix>& generators) {
  std::vector<QMatrix> kept;
  std::size_t r = 0;
  for (const auto& g : generators) {
    kept.push_back(g);
    QMatrix coords(kept.size(), sym_dim(n));
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const QVector v = vectorize(kept[k]);
      for (std::size_t c = 0; c < v.size(); ++c) coords(k, c) = v[c];
    }
    const std::size_t next = rank(coords);
    if (next == r) {
      kept.pop_back();
    } else {
      r = next;
    }
  }
  return make(n, std::move(kept));
}

MatSpace MatSpace::full(std::size_t n) {
  std::vector<QMatrix> basis;
  for (const auto& [i, j] : sym_pairs(n)) basis.push_back(sym_unit(n, i, j));
  return make(n, std::move(basis));
}

QMatrix MatSpace::element(const QVector& c) const {
  if (c.size() != basis_.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate count does not match dimension");
  QMatrix m(n_, n_);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) m += c[k] * basis_[k];
  }
  return m;
}

std::vector<std::string> generic_variables(std::size_t m, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= m; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

PolyMatrix generic_element(const MatSpace& l, const std::vector<std::string>& vars) {
  if (vars.size() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "one variable per basis element required");
  const std::size_t n = l.n();
  PolyMatrix g(n, n);
  for (std::size_t k = 0; k < l.dim(); ++k) {
    const MPoly t = MPoly::variable(vars[k]);
    const QMatrix& b = l.basis()[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) != 0) g(i, j) += t * b(i, j);
      }
    }
  }
  return g;
}

PolyMatrix generic_element(const MatSpace& l) { return generic_element(l, generic_variables(l.dim())); }

MPoly generic_det(const MatSpace& l) { return det_laplace(generic_element(l)); }

namespace {

// Calls visit(tuple) for every integer tuple with max-norm exactly k, in a
// fixed order (entries ranked 0, 1, -1, 2, -2, ...); stops when visit
// returns true.
bool sweep_norm(std::size_t m, int k, const std::function<bool(const QVector&)>& visit) {
  std::vector<int> digits = {0};
  for (int d = 1; d <= k; ++d) {
    digits.push_back(d);
    digits.push_back(-d);
  }
  std::vector<std::size_t> idx(m, 0);
  QVector tuple(m);
  for (;;) {
    bool on_shell = false;
    for (std::size_t p = 0; p < m; ++p) {
      const int d = digits[idx[p]];
      tuple[p] = d;
      if (std::abs(d) == k) on_shell = true;
    }
    if (on_shell && visit(tuple)) return true;
    std::size_t p = m;
    while (p > 0) {
      --p;
      if (++idx[p] < digits.size()) break;
      idx[p] = 0;
      if (p == 0) return false;
    }
    if (m == 0) return false;
  }
}

}  // namespace

bool is_regular(const MatSpace& l) {
  try {
    find_invertible(l);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotRegular) return false;
    throw;
  }
}

InvertibleElement find_invertible(const MatSpace& l) {
  const std::size_t n = l.n(), m = l.dim();
  if (m == 0) throw Error(ErrorCode::NotRegular, "the zero space contains no invertible matrix");
  if (auto c = contains(l, QMatrix::identity(n))) return {QMatrix::identity(n), *c};
  // A nonzero polynomial of degree n cannot vanish on all of S^m when
  // |S| > n, so max-norm ceil(n/2) suffices.
  const int bound = static_cast<int>((n + 1) / 2);
  double work = 1;
  for (std::size_t k = 0; k < m; ++k) work *= 2 * bound + 1;
  if (work > 20000 && generic_det(l).is_zero()) {
    throw Error(ErrorCode::NotRegular, "generic determinant vanishes identically");
  }
  InvertibleElement found;
  for (int k = 1; k <= bound; ++k) {
    const bool hit = sweep_norm(m, k, [&](const QVector& c) {
      QMatrix x = l.element(c);
      if (det(x) == 0) return false;
      found = {std::move(x), c};
      return true;
    });
    if (hit) return found;
  }
  throw Error(ErrorCode::NotRegular, "generic determinant vanishes identically");
}

std::optional<QVector> contains(const MatSpace& l, const QMatrix& m) {
  if (m.rows() != l.n() || m.cols() != l.n()) throw Error(ErrorCode::DimensionMismatch, "matrix size does not match space");
  if (!m.is_symmetric()) return std::nullopt;
  if (l.dim() == 0) {
    if (m.is_zero()) return QVector{};
    return std::nullopt;
  }
  return solve(l.coordinates().transpose(), vectorize(m));
}

QMatrix residue(const MatSpace& l, const QMatrix& m) {
  QVector v = vectorize(m);
  const RowReduction red = rref(l.coordinates());
  for (std::size_t r = 0; r < red.rank; ++r) {
    const std::size_t c = red.pivots[r];
    if (v[c] == 0) continue;
    const Rational f = v[c];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * red.rref(r, j);
  }
  return unvectorize(l.n(), v);
}

bool is_subspace(const MatSpace& a, const MatSpace& b) {
  if (a.n() != b.n()) return false;
  for (const auto& x : a.basis()) {
    if (!contains(b, x)) return false;
  }
  return true;
}

bool same_space(const MatSpace& a, const MatSpace& b) { return a.dim() == b.dim() && is_subspace(a, b); }

MatSpace orth_complement(const MatSpace& l) {
  const std::size_t n = l.n();
  const auto pairs = sym_pairs(n);
  QMatrix weighted(l.dim(), pairs.size());
  for (std::size_t k = 0; k < l.dim(); ++k) {
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      weighted(k, c) = l.coordinates()(k, c) * (pairs[c].first == pairs[c].second ? 1 : 2);
    }
  }
  const QMatrix ker = kernel(weighted);
  std::vector<QMatrix> basis;
  for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(unvectorize(n, primitive_integer_vector(ker.row(r))));
  return MatSpace::make(n, std::move(basis));
}

MatSpace congruence_transform(const MatSpace& l, const QMatrix& p) {
  if (p.rows() != l.n() || p.cols() != l.n()) throw Error(ErrorCode::DimensionMismatch, "P has the wrong size");
  if (det(p) == 0) throw Error(ErrorCode::SingularP, "congruence matrix is singular");
  const QMatrix pt = p.transpose();
  std::vector<QMatrix> basis;
  basis.reserve(l.dim());
  for (const auto& b : l.basis()) basis.push_back(pt * b * p);
  return MatSpace::make(l.n(), std::move(basis));
}

QMatrix random_invertible(std::size_t n, Rng& rng, int bound) {
  for (;;) {
    QMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = rng.uniform(-bound, bound);
    }
    if (det(p) != 0) return p;
  }
}

MatSpace sample_congruent(const MatSpace& l, Rng& rng) { return congruence_transform(l, random_invertible(l.n(), rng)); }

MatSpace sample_congruent(const MatSpace& l, std::uint64_t seed) {
  Rng rng(seed);
  return sample_congruent(l, rng);
}

MatSpace random_space(std::size_t n, std::size_t m, Rng& rng, int bound) {
  if (m > sym_dim(n)) throw Error(ErrorCode::DimensionMismatch, "dimension exceeds that of S^n");
  for (;;) {
    std::vector<QMatrix> basis;
    for (std::size_t k = 0; k < m; ++k) {
      QVector v(sym_dim(n));
      for (auto& x : v) x = rng.uniform(-bound, bound);
      basis.push_back(unvectorize(n, v));
    }
    try {
      return MatSpace::make(n, std::move(basis));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DependentBasis) throw;
    }
  }
}

Rational PluckerVector::at(const std::vector<std::size_t>& idx) const {
  const auto it = std::lower_bound(index.begin(), index.end(), idx);
  if (it == index.end() || *it != idx) throw Error(ErrorCode::DimensionMismatch, "index is not an increasing subset");
  return value[static_cast<std::size_t>(it - index.begin())];
}

bool PluckerVector::is_zero() const {
  return std::all_of(value.begin(), value.end(), [](const Rational& v) { return v == 0; });
}

std::map<std::string, Rational> PluckerVector::assignment() const {
  if (n > 10) throw Error(ErrorCode::UnsupportedDim, "single-digit Plucker names need at most 10 columns");
  std::map<std::string, Rational> out;
  for (std::size_t k = 0; k < index.size(); ++k) {
    std::string name = "p";
    for (auto i : index[k]) name += static_cast<char>('0' + i);
    out.emplace(std::move(name), value[k]);
  }
  return out;
}

PluckerVector plucker(const MatSpace& l) {
  PluckerVector p;
  const QMatrix& a = l.coordinates();
  p.n = a.cols();
  p.m = a.rows();
  std::vector<std::size_t> idx(p.m);
  for (std::size_t k = 0; k < p.m; ++k) idx[k] = k;
  if (p.m > p.n) return p;
  for (;;) {
    QMatrix sub(p.m, p.m);
    for (std::size_t r = 0; r < p.m; ++r) {
      for (std::size_t c = 0; c < p.m; ++c) sub(r, c) = a(r, idx[c]);
    }
    p.index.push_back(idx);
    p.value.push_back(det(sub));
    // Next increasing subset.
    std::size_t k = p.m;
    while (k > 0 && idx[k - 1] == p.n - p.m + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < p.m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

bool proportional(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  Rational ratio = 0;
  bool have = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] == 0) != (b[k] == 0)) return false;
    if (a[k] == 0) continue;
    if (!have) {
      ratio = a[k] / b[k];
      have = true;
    } else if (a[k] != ratio * b[k]) {
      return false;
    }
  }
  return have;
}

MatSpace ParametricBasis::at(const Rational& value) const {
  std::vector<QMatrix> mats;
  for (const auto& b : basis) mats.push_back(evaluate(b, {{param, value}}));
  return MatSpace::make(n, std::move(mats));
}

namespace {

using Series = std::vector<Rational>;  // coefficient of param^k at index k
using SeriesRow = std::vector<Series>;

Series to_series(const MPoly& p, const std::string& param) {
  const UniPoly u = UniPoly::from_mpoly(p, param);
  Series s;
  for (const auto& c : u.coeffs()) s.push_back(c.constant_value());
  return s;
}

std::size_t valuation(const SeriesRow& row) {
  std::size_t v = SIZE_MAX;
  for (const auto& s : row) {
    for (std::size_t k = 0; k < s.size() && k < v; ++k) {
      if (s[k] != 0) {
        v = k;
        break;
      }
    }
  }
  return v;
}

}  // namespace

MatSpace grassmann_limit(const ParametricBasis& family) {
  const std::size_t m = family.basis.size();
  const std::size_t n = family.n;
  const auto pairs = sym_pairs(n);
  std::vector<SeriesRow> rows(m);
  std::size_t max_degree = 0;
  for (std::size_t k = 0; k < m; ++k) {
    for (const auto& [i, j] : pairs) {
      rows[k].push_back(to_series(family.basis[k](i, j), family.param));
      max_degree = std::max(max_degree, rows[k].back().size());
    }
  }

  // Generic rank: a nonzero m x m minor has degree at most m * max_degree
  // in the parameter, so it cannot vanish at that many + 1 points.
  bool generic = false;
  for (std::size_t s = 1; s <= m * max_degree + 1 && !generic; ++s) {
    QMatrix at(m, pairs.size());
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t c = 0; c < pairs.size(); ++c) {
        Rational v = 0, pw = 1;
        for (const auto& coeff : rows[k][c]) {
          v += coeff * pw;
          pw *= static_cast<long>(s);
        }
        at(k, c) = v;
      }
    }
    generic = rank(at) == m;
  }
  if (!generic) throw Error(ErrorCode::NotGenericRank, "family does not have rank " + std::to_string(m));

  for (int iteration = 0; iteration < 10000; ++iteration) {
    for (auto& row : rows) {
      const std::size_t v = valuation(row);
      if (v == 0) continue;
      for (auto& s : row) s.erase(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(v, s.size())));
    }
    QMatrix lead(m, pairs.size());
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t c = 0; c < pairs.size(); ++c) lead(k, c) = rows[k][c].empty() ? Rational(0) : rows[k][c][0];
    }
    const QMatrix relations = left_kernel(lead);
    if (relations.rows() == 0) {
      std::vector<QMatrix> basis;
      for (std::size_t k = 0; k < m; ++k) basis.push_back(unvectorize(n, lead.row(k)));
      return MatSpace::make(n, std::move(basis));
    }
    // Replace one row in the support of a relation by the combination; the
    // combination vanishes at 0 and the next pass divides it by t^v.
    const QVector c = relations.row(0);
    std::size_t r = 0;
    while (c[r] == 0) ++r;
    SeriesRow combo(pairs.size());
    for (std::size_t k = 0; k < m; ++k) {
      if (c[k] == 0) continue;
      for (std::size_t col = 0; col < pairs.size(); ++col) {
        Series& dst = combo[col];
        const Series& src = rows[k][col];
        if (dst.size() < src.size()) dst.resize(src.size(), Rational(0));
        for (std::size_t d = 0; d < src.size(); ++d) dst[d] += c[k] * src[d];
      }
    }
    rows[r] = std::move(combo);
  }
  throw Error(ErrorCode::NotGenericRank, "limit computation did not terminate");
}

ParametricBasis substitution_family(const MatSpace& base, const std::vector<std::string>& coords,
                                    const std::vector<MPoly>& substitution, const std::string& param) {
  const std::size_t n = base.n();
  if (coords.size() != n || substitution.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one expression per quadric variable");
  }
  std::map<std::string, MPoly> assignment;
  std::vector<MPoly> v;
  for (std::size_t k = 0; k < n; ++k) {
    assignment.emplace(coords[k], substitution[k]);
    v.push_back(MPoly::variable(coords[k]));
  }
  ParametricBasis family;
  family.n = n;
  family.param = param;
  for (const auto& b : base.basis()) {
    MPoly q;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) != 0) q += v[i] * v[j] * b(i, j);
      }
    }
    const MPoly image = q.substitute(assignment);
    // Reduce powers of the imaginary unit.
    MPoly real;
    for (const auto& [e, cof] : image.collect({"i"})) {
      if (e[0] % 2 == 1) {
        if (!cof.is_zero()) {
          throw Error(ErrorCode::DimensionMismatch, "substituted family is not defined over the rationals");
        }
        continue;
      }
      real += (e[0] % 4 == 0) ? cof : -cof;
    }
    PolyMatrix mat(n, n);
    for (const auto& [e, cof] : real.collect(coords)) {
      std::vector<std::size_t> hit;
      for (std::size_t k = 0; k < n; ++k) {
        for (unsigned r = 0; r < e[k]; ++r) hit.push_back(k);
      }
      if (hit.size() != 2) throw Error(ErrorCode::NotHomogeneous, "substitution is not linear in the quadric variables");
      if (hit[0] == hit[1]) {
        mat(hit[0], hit[0]) += cof;
      } else {
        const MPoly half = cof * make_rational(1, 2);
        mat(hit[0], hit[1]) += half;
        mat(hit[1], hit[0]) += half;
      }
    }
    family.basis.push_back(std::move(mat));
  }
  return family;
}

}  // namespace jordanet
