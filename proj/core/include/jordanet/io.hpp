#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jordanet/spaces.hpp"

namespace jordanet {

// Accepts either {"n": int, "basis": [matrix, ...]} with rational entries
// (strings "p/q" or integers), or {"n": int, "vars": [...], "matrix": [[...]]}
// where the matrix entries are linear forms in vars and basis k is the
// coefficient matrix of vars[k]. Throws PARSE_ERROR.
MatSpace space_from_json(const nlohmann::json& j);
MatSpace parse_space(std::string_view json_text);

// Reads a file path or a catalog://id reference.
MatSpace load_space(const std::string& source);

nlohmann::json to_json(const QMatrix& m);
nlohmann::json to_json(const MatSpace& l);

// Generic element of a catalog-style space written with named variables.
PolyMatrix symbolic_matrix(const nlohmann::json& matrix);

}  // namespace jordanet
