#include "jordanet/linalg.hpp"

#include <bit>
#include <cstdint>

namespace jordanet {

RowReduction rref(const QMatrix& m) {
  RowReduction out;
  QMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(a);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  out.kernel = QMatrix(cols - r, cols);
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.kernel(k, f) = 1;
    for (std::size_t i = 0; i < r; ++i) out.kernel(k, out.pivots[i]) = -out.rref(i, f);
    ++k;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

QMatrix kernel(const QMatrix& m) { return rref(m).kernel; }

QMatrix left_kernel(const QMatrix& m) { return rref(m.transpose()).kernel; }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowReduction red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.rref(i, m.cols());
  return x;
}

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowReduction red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.rref(i, n + j);
  }
  return inv;
}

namespace {

template <class T>
Matrix<T> minor_of(const Matrix<T>& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  Matrix<T> out(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

VarListPtr entry_variables(const PolyMatrix& m) {
  VarListPtr vars = MPoly().variables_ptr();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) vars = merge_variables(vars, m(i, j).variables_ptr());
  }
  return vars;
}

}  // namespace

QMatrix adjugate(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return QMatrix::identity(1);
  const Rational d = det(m);
  if (d != 0) return d * *inverse(m);
  QMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = det(minor_of(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : Rational(-c);
    }
  }
  return adj;
}

MPoly det_laplace(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MPoly(1);
  if (n > 24) throw Error(ErrorCode::UnsupportedDim, "Laplace expansion limited to 24 columns");
  const VarListPtr vars = entry_variables(m);
  PolyMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).over(vars);
  }
  // minors[mask] = determinant of the bottom popcount(mask) rows restricted
  // to the columns in mask.
  std::vector<MPoly> minors(std::size_t{1} << n);
  for (std::size_t j = 0; j < n; ++j) minors[std::size_t{1} << j] = a(n - 1, j);
  for (std::size_t size = 2; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      PolyAccumulator acc(vars);
      std::size_t position = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const MPoly& entry = a(row, j);
        const MPoly& rest = minors[mask ^ (1u << j)];
        if (!entry.is_zero() && !rest.is_zero()) {
          acc.add_product(entry, rest, (position % 2 == 0) ? Rational(1) : Rational(-1));
        }
        ++position;
      }
      minors[mask] = acc.finish();
    }
    // Minors of the previous size are no longer needed.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == size - 1) minors[mask] = MPoly();
    }
  }
  return minors[(std::size_t{1} << n) - 1];
}

MPoly det_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MPoly(1);
  PolyMatrix a = m;
  MPoly previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return MPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = divide_exact(num, previous);
        if (!q) throw Error(ErrorCode::DimensionMismatch, "Bareiss step lost exactness");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MPoly();
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return PolyMatrix::identity(1);
  PolyMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly c = det_laplace(minor_of(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

UniPoly charpoly(const PolyMatrix& m, const std::string& var) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<MPoly> c(n + 1);
  c[n] = MPoly(1);
  PolyMatrix mk(n, n);
  const PolyMatrix id = PolyMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const PolyMatrix am = m * mk;
    c[n - k] = am.trace() * Rational(Rational(-1) / static_cast<long>(k));
  }
  return UniPoly(var, std::move(c));
}

UniPoly charpoly(const QMatrix& m, const std::string& var) { return charpoly(to_poly(m), var); }

UniPoly minpoly(const QMatrix& m, const std::string& var) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<QVector> powers;
  QMatrix p = QMatrix::identity(n);
  auto flatten = [n](const QMatrix& a) {
    QVector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    }
    return v;
  };
  powers.push_back(flatten(p));
  for (std::size_t k = 1;; ++k) {
    p = p * m;
    const QVector target = flatten(p);
    QMatrix cols(n * n, powers.size());
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t c = 0; c < powers.size(); ++c) cols(r, c) = powers[c][r];
    }
    if (auto x = solve(cols, target)) {
      std::vector<MPoly> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = MPoly(Rational(-(*x)[i]));
      coeffs[k] = MPoly(1);
      return UniPoly(var, std::move(coeffs));
    }
    powers.push_back(target);
  }
}

QMatrix evaluate_at(const UniPoly& p, const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * m + p.coeffs()[k].constant_value() * QMatrix::identity(n);
  }
  return acc;
}

}  // namespace jordanet
