#include "jordanet/io.hpp"

#include <fstream>
#include <sstream>

#include "jordanet/catalog.hpp"
#include "jordanet/error.hpp"

namespace jordanet {

namespace {

std::string entry_text(const nlohmann::json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw Error(ErrorCode::ParseError, "matrix entries must be strings or integers, got " + e.dump());
}

std::size_t read_n(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw Error(ErrorCode::ParseError, "missing or invalid \"n\"");
  }
  return static_cast<std::size_t>(j["n"].get<long long>());
}

void check_square(const nlohmann::json& m, std::size_t n) {
  if (!m.is_array() || m.size() != n) throw Error(ErrorCode::ParseError, "matrix must have n rows");
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::ParseError, "matrix rows must have n entries");
  }
}

}  // namespace

PolyMatrix symbolic_matrix(const nlohmann::json& matrix) {
  if (!matrix.is_array() || matrix.empty()) throw Error(ErrorCode::ParseError, "matrix must be a nonempty array");
  const std::size_t n = matrix.size();
  check_square(matrix, n);
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MPoly::parse(entry_text(matrix[i][j]));
  }
  return m;
}

MatSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "space must be a JSON object");
  const std::size_t n = read_n(j);
  std::vector<QMatrix> basis;
  if (j.contains("basis")) {
    const auto& b = j["basis"];
    if (!b.is_array()) throw Error(ErrorCode::ParseError, "\"basis\" must be an array");
    for (const auto& mj : b) {
      check_square(mj, n);
      QMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_rational(entry_text(mj[r][c]));
      }
      basis.push_back(std::move(m));
    }
  } else if (j.contains("vars") && j.contains("matrix")) {
    const auto vars = j["vars"].get<std::vector<std::string>>();
    check_square(j["matrix"], n);
    const PolyMatrix g = symbolic_matrix(j["matrix"]);
    std::map<std::string, Rational> zero;
    for (const auto& v : vars) zero[v] = 0;
    for (const auto& v : vars) {
      QMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const MPoly& e = g(r, c);
          for (const auto& s : e.support()) {
            if (!zero.count(s)) throw Error(ErrorCode::ParseError, "unknown variable '" + s + "'");
          }
          if (!e.is_zero() && (e.total_degree() != 1 || !e.is_homogeneous())) {
            throw Error(ErrorCode::ParseError, "entries must be linear forms in vars, got " + e.to_string());
          }
          m(r, c) = e.derivative(v).evaluate(zero);
        }
      }
      basis.push_back(std::move(m));
    }
  } else {
    throw Error(ErrorCode::ParseError, "expected \"basis\" or \"vars\" and \"matrix\"");
  }
  return MatSpace::make(n, std::move(basis));
}

MatSpace parse_space(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    return space_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

MatSpace load_space(const std::string& source) {
  constexpr std::string_view scheme = "catalog://";
  if (source.rfind(scheme, 0) == 0) return catalog_space(source.substr(scheme.size())).space;
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_space(ss.str());
}

nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const MatSpace& l) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : l.basis()) basis.push_back(to_json(b));
  return {{"n", l.n()}, {"basis", basis}};
}

}  // namespace jordanet
