#include "jordanet/chow.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jordanet/catalog.hpp"

namespace jordanet {

namespace {

void monomials_rec(std::size_t nvars, unsigned degree, std::size_t k, MPoly::Exponents& cur,
                   std::vector<MPoly::Exponents>& out) {
  if (k + 1 == nvars) {
    cur[k] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    cur[k] = e;
    monomials_rec(nvars, degree - e, k + 1, cur, out);
  }
  cur[k] = 0;
}

// Coefficient extraction shared by the numeric and symbolic builders.
template <class T, class Convert>
ChowMatrixOf<T> assemble(std::size_t n, const std::vector<std::string>& vars, const PolyMatrix& adj, Convert convert) {
  ChowMatrixOf<T> c;
  c.n = n;
  c.vars = vars;
  c.rows = sym_pairs(n);
  c.columns = monomials_of_degree(vars.size(), static_cast<unsigned>(n - 1));
  c.values = Matrix<T>(c.rows.size(), c.columns.size());
  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    const auto groups = adj(c.rows[r].first, c.rows[r].second).collect(vars);
    for (std::size_t col = 0; col < c.columns.size(); ++col) {
      auto it = groups.find(c.columns[col]);
      if (it != groups.end()) c.values(r, col) = convert(it->second);
    }
  }
  return c;
}

void require_regular(const MatSpace& l) {
  if (!is_regular(l)) throw Error(ErrorCode::NotRegular, "space contains no invertible matrix");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<MPoly::Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<MPoly::Exponents> out;
  if (nvars == 0) return out;
  MPoly::Exponents cur(nvars, 0);
  monomials_rec(nvars, degree, 0, cur, out);
  return out;
}

std::string monomial_to_string(const std::vector<std::string>& vars, const MPoly::Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

ChowMatrix chow_matrix(const MatSpace& l, const std::vector<std::string>& vars) {
  const PolyMatrix adj = adjugate(generic_element(l, vars));
  return assemble<Rational>(l.n(), vars, adj, [](const MPoly& p) { return p.constant_value(); });
}

ChowMatrix chow_matrix(const MatSpace& l) { return chow_matrix(l, generic_variables(l.dim())); }

SymbolicChowMatrix chow_matrix(const std::vector<PolyMatrix>& basis, const std::vector<std::string>& vars) {
  const std::size_t n = basis.front().rows();
  PolyMatrix g(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) g += MPoly::variable(vars[k]) * basis[k];
  return assemble<MPoly>(n, vars, adjugate(g), [](const MPoly& p) { return p; });
}

PolyMatrix generic_symmetric(std::size_t n, const std::string& prefix) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = m(j, i) = MPoly::variable(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return m;
}

std::size_t chow_rank(const MatSpace& l) {
  require_regular(l);
  return rank(chow_matrix(l).values);
}

std::vector<MPoly> chow_kernel_forms(const MatSpace& l) {
  require_regular(l);
  const QMatrix k = left_kernel(chow_matrix(l).values);
  std::vector<MPoly> out;
  if (k.rows() == 0) return out;
  const RowReduction red = rref(k);
  const auto pairs = sym_pairs(l.n());
  for (std::size_t r = 0; r < red.rank; ++r) {
    const QVector v = primitive_integer_vector(red.rref.row(r));
    MPoly form;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      form += v[c] * MPoly::variable("z" + std::to_string(pairs[c].first + 1) + std::to_string(pairs[c].second + 1));
    }
    out.push_back(form);
  }
  return out;
}

bool chow_minors_vanish(const MatSpace& l, std::size_t k) { return rank(chow_matrix(l).values) <= k; }

std::size_t sampled_reciprocal_span(const MatSpace& l, int trials, std::uint64_t seed) {
  require_regular(l);
  Rng rng(seed);
  std::vector<QVector> rows;
  int attempts = 0;
  while (static_cast<int>(rows.size()) < trials) {
    if (++attempts > 100 * trials + 1000) break;
    QVector c(l.dim());
    for (auto& x : c) x = rng.uniform(-5, 5);
    const QMatrix m = l.element(c);
    if (det(m) == 0) continue;
    rows.push_back(vectorize(adjugate(m)));
  }
  QMatrix a(rows.size(), sym_dim(l.n()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) a(r, c) = rows[r][c];
  }
  return rank(a);
}

MPoly chow_det_generic_n3() {
  const std::string key = "chow-det generic n=3 basis x,y,z entries <p>ij columns grlex(x,y,z) laplace v1";
  std::filesystem::path cache;
  if (const char* dir = std::getenv("JORDANET_CACHE_DIR"); dir && *dir) {
    char name[40];
    std::snprintf(name, sizeof name, "chow_n3_%016llx.txt", static_cast<unsigned long long>(fnv1a(key)));
    cache = std::filesystem::path(dir) / name;
    std::error_code ec;
    if (std::filesystem::exists(cache, ec)) {
      try {
        return MPoly::parse(read_file(cache));
      } catch (const Error&) {
        // Unreadable cache entries are recomputed and overwritten.
      }
    }
  }
  const auto c = chow_matrix({generic_symmetric(3, "x"), generic_symmetric(3, "y"), generic_symmetric(3, "z")},
                             {"x", "y", "z"});
  MPoly d = det_laplace(c.values);
  if (!cache.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache.parent_path(), ec);
    const auto tmp = cache.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << d.to_string() << "\n";
    }
    std::filesystem::rename(tmp, cache, ec);
  }
  return d;
}

Rational evaluate_generic_n3(const MPoly& det, const MatSpace& l) {
  if (l.n() != 3 || l.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a net in S^3");
  std::map<std::string, Rational> a;
  const char prefixes[] = {'x', 'y', 'z'};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j) {
        a[prefixes[k] + std::to_string(i + 1) + std::to_string(j + 1)] = l.basis()[k](i, j);
      }
    }
  }
  return det.evaluate(a);
}

}  // namespace jordanet
