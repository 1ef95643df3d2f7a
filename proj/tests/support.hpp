#pragma once

#include <string>
#include <vector>

#include "jordanet/catalog.hpp"
#include "jordanet/io.hpp"
#include "jordanet/linalg.hpp"
#include "jordanet/spaces.hpp"

namespace jordanet::testing {

inline MPoly P(const char* s) { return MPoly::parse(s); }

inline QMatrix Q(std::vector<std::vector<Rational>> rows) { return QMatrix::from_rows(rows); }

inline PolyMatrix PM(const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<MPoly>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const char* s : row) r.back().push_back(P(s));
  }
  return PolyMatrix::from_rows(r);
}

// Space spanned by the coefficient matrices of a matrix of linear forms.
inline MatSpace net(std::size_t n, const std::vector<std::string>& vars,
                    const std::vector<std::vector<std::string>>& rows) {
  nlohmann::json j{{"n", n}, {"vars", vars}, {"matrix", rows}};
  return space_from_json(j);
}

inline const MatSpace& cat(const std::string& id) { return catalog_space(id).space; }

inline QMatrix diag(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

const std::vector<std::string> kNetLabels = {"1a", "1b", "2a1", "2a2", "2b", "3a", "3b1", "3b2"};

}  // namespace jordanet::testing
