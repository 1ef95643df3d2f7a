#include "jordanet/varieties.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "jordanet/catalog.hpp"
#include "jordanet/chow.hpp"
#include "jordanet/jordan.hpp"

namespace jordanet {

namespace {

using Exponents = MPoly::Exponents;

struct HomogeneousForm {
  unsigned degree = 0;
  std::vector<std::pair<Exponents, Rational>> terms;
};

HomogeneousForm as_form(const MPoly& p, const std::vector<std::string>& vars) {
  if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "polynomial " + p.to_string() + " is not homogeneous");
  HomogeneousForm f;
  f.degree = static_cast<unsigned>(std::max(p.total_degree(), 0));
  for (const auto& [e, c] : p.collect(vars)) {
    if (!c.is_constant()) throw Error(ErrorCode::DimensionMismatch, "polynomial " + p.to_string() + " has extra variables");
    f.terms.emplace_back(e, c.constant_value());
  }
  return f;
}

bool all_vanish(const std::vector<MPoly>& polys, const std::vector<std::string>& vars, const QVector& point) {
  std::map<std::string, Rational> a;
  for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = point[k];
  for (const auto& p : polys) {
    if (p.evaluate(a) != 0) return false;
  }
  return true;
}

// Projective integer points with coordinates in [-2, 2], first nonzero
// coordinate positive.
std::optional<QVector> sweep_zero(const std::vector<MPoly>& polys, const std::vector<std::string>& vars) {
  const std::size_t m = vars.size();
  if (m == 0 || m > 6) return std::nullopt;
  QVector point(m, 0);
  std::optional<QVector> found;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t k, bool leading_set) {
    if (found) return;
    if (k == m) {
      if (leading_set && all_vanish(polys, vars, point)) found = point;
      return;
    }
    for (int v = leading_set ? -2 : 0; v <= 2; ++v) {
      point[k] = v;
      rec(k + 1, leading_set || v != 0);
      if (found) return;
    }
    point[k] = 0;
  };
  rec(0, false);
  return found;
}

std::map<std::string, Rational> sym_assignment(const std::string& prefix, const QMatrix& x) {
  std::map<std::string, Rational> a;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = i; j < x.cols(); ++j) a[prefix + std::to_string(i + 1) + std::to_string(j + 1)] = x(i, j);
  }
  return a;
}

QMatrix traceless(const QMatrix& x) {
  const Rational shift = x.trace() / Rational(static_cast<long>(x.rows()));
  return x - shift * QMatrix::identity(x.rows());
}

std::vector<Rational> eval_all(const PolyCatalog& cat, const std::map<std::string, Rational>& a) {
  std::vector<Rational> out;
  for (const auto& p : cat.polys) out.push_back(p.evaluate(a));
  return out;
}

[[noreturn]] void mismatch(const std::string& id, const std::string& what) {
  throw Error(ErrorCode::ConventionMismatch, "catalog " + id + ": " + what);
}

// Complement of span{1_n} in L, taken from the basis.
std::vector<QMatrix> unit_complement(const MatSpace& l) {
  std::vector<QMatrix> gens{QMatrix::identity(l.n())};
  std::vector<QMatrix> out;
  for (const auto& b : l.basis()) {
    gens.push_back(b);
    if (MatSpace::span(l.n(), gens).dim() == gens.size()) {
      out.push_back(b);
    } else {
      gens.pop_back();
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::CertifiedEmpty: return "CERTIFIED_EMPTY";
    case CertificateKind::Unknown: return "UNKNOWN";
    case CertificateKind::SolutionsExist: return "SOLUTIONS_EXIST";
  }
  return "UNKNOWN";
}

Certificate macaulay_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars, unsigned degree) {
  std::vector<HomogeneousForm> forms;
  std::vector<MPoly> nonzero;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    forms.push_back(as_form(p, vars));
    nonzero.push_back(p);
  }
  Certificate cert;
  cert.degree = degree;
  const auto columns = monomials_of_degree(vars.size(), degree);
  cert.columns = columns.size();
  std::map<Exponents, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;
  std::vector<QVector> rows;
  for (const auto& f : forms) {
    if (f.degree > degree) continue;
    for (const auto& shift : monomials_of_degree(vars.size(), degree - f.degree)) {
      QVector row(columns.size(), 0);
      for (const auto& [e, c] : f.terms) {
        Exponents sum = e;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += shift[k];
        row[column_of.at(sum)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  cert.rows = rows.size();
  if (!rows.empty()) {
    QMatrix m(rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = rows[r][c];
    }
    cert.rank = rank(m);
  }
  if (cert.columns > 0 && cert.rank == cert.columns) {
    cert.kind = CertificateKind::CertifiedEmpty;
    return cert;
  }
  cert.witness = sweep_zero(nonzero, vars);
  cert.kind = cert.witness ? CertificateKind::SolutionsExist : CertificateKind::Unknown;
  return cert;
}

Certificate macaulay_sweep(const std::vector<MPoly>& polys, const std::vector<std::string>& vars, unsigned min_degree,
                           unsigned max_degree) {
  Certificate last;
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    last = macaulay_emptiness(polys, vars, d);
    if (last.kind != CertificateKind::Unknown) return last;
  }
  return last;
}

std::vector<MPoly> rank_one_system(const MatSpace& l) {
  const PolyMatrix g = generic_element(l);
  const std::size_t n = l.n();
  std::set<std::string> seen;
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t q = j + 1; q < n; ++q) {
          MPoly minor = g(i, j) * g(k, q) - g(i, q) * g(k, j);
          if (minor.is_zero()) continue;
          if (seen.insert(normalize_associate(minor).to_string()).second) out.push_back(minor);
        }
      }
    }
  }
  return out;
}

MPoly rank_one_gcd(const MatSpace& l) {
  if (l.dim() != 2) throw Error(ErrorCode::UnsupportedDim, "rank-one point count needs a pencil");
  MPoly g;
  for (const auto& m : rank_one_system(l)) g = g.is_zero() ? normalize_associate(m) : gcd(g, m);
  return g;
}

RankOneCount rank_one_pencil(const MatSpace& l) {
  const MPoly g = rank_one_gcd(l);
  RankOneCount out;
  if (g.is_zero()) {
    out.all = true;
    return out;
  }
  if (g.is_constant()) return out;
  const UniPoly u = UniPoly::from_mpoly(g, "t1");
  const auto sf = squarefree_decomposition(u);
  for (const auto& f : sf.factors) out.count += static_cast<std::size_t>(std::max(f.factor.degree(), 0));
  // A factor t2 is the root (1 : 0), which is invisible in t1.
  if (sf.content.degree_in("t2") > 0) ++out.count;
  return out;
}

std::vector<Rational> catalog_eval(const std::string& id, const MatSpace& l) {
  const PolyCatalog& cat = poly_catalog(id);
  if (id == "pencil_cubics" || id == "net_quadrics") {
    const std::size_t m = id == "pencil_cubics" ? 2 : 3;
    if (l.n() != 3 || l.dim() != m) mismatch(id, "expected a space of dimension " + std::to_string(m) + " in S^3");
    if (!contains(l, QMatrix::identity(3))) mismatch(id, "space must contain the identity");
    const auto rest = unit_complement(l);
    auto a = sym_assignment("x", traceless(rest[0]));
    if (m == 3) {
      const auto b = sym_assignment("y", traceless(rest[1]));
      a.insert(b.begin(), b.end());
    }
    return eval_all(cat, a);
  }
  if (id.rfind("plucker_", 0) == 0) {
    if (l.n() != 4 || l.dim() != 3) mismatch(id, "expected a net in S^4");
    return catalog_eval(id, plucker(l));
  }
  mismatch(id, "no space convention");
}

std::vector<Rational> catalog_eval(const std::string& id, const QMatrix& x) {
  const PolyCatalog& cat = poly_catalog(id);
  if (id != "pencil_cubics") mismatch(id, "not defined on a single matrix");
  if (x.rows() != 3 || !x.is_symmetric() || x.trace() != 0) mismatch(id, "expected a traceless symmetric 3x3 matrix");
  return eval_all(cat, sym_assignment("x", x));
}

std::vector<Rational> catalog_eval(const std::string& id, const PluckerVector& p) {
  const PolyCatalog& cat = poly_catalog(id);
  if (id.rfind("plucker_", 0) != 0) mismatch(id, "not a Plucker catalog");
  if (p.n != 10 || p.m != 3) mismatch(id, "expected Plucker coordinates of a net in S^4");
  return eval_all(cat, p.assignment());
}

MinRankBounds min_rank_bounds(const MatSpace& l, int trials, std::uint64_t seed) {
  MinRankBounds b;
  b.upper = l.n() + 1;
  const auto offer = [&](const QMatrix& x) {
    if (x.is_zero()) return;
    const std::size_t r = rank(x);
    if (r < b.upper) {
      b.upper = r;
      b.upper_witness = x;
    }
  };
  for (const auto& x : l.basis()) offer(x);
  if (is_regular(l)) {
    const QMatrix u = find_invertible(l).matrix;
    if (is_jordan(l, u).is_jordan) {
      const auto a = JordanStructure::build(l, u);
      for (const auto& r : radical(a).basis) offer(l.element(r));
    }
  }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    QVector c(l.dim());
    for (auto& v : c) v = rng.uniform(-3, 3);
    offer(l.element(c));
  }
  if (b.upper <= 1) {
    b.lower = b.upper;
    return b;
  }
  b.certificate = macaulay_sweep(rank_one_system(l), generic_variables(l.dim()));
  if (b.certificate.kind == CertificateKind::CertifiedEmpty) b.lower = 2;
  if (b.certificate.kind == CertificateKind::SolutionsExist) {
    b.upper = 1;
    b.lower = 1;
    b.upper_witness = l.element(*b.certificate.witness);
  }
  return b;
}

}  // namespace jordanet
