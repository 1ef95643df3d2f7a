#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jordanet/spaces.hpp"

namespace jordanet {

struct CatalogEntry {
  std::string id;
  std::string kind;  // "space" or "family"
  std::string file;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

struct CatalogSpace {
  std::string id;
  std::string description;
  std::vector<std::string> vars;
  PolyMatrix matrix;  // generic element in vars
  MatSpace space;
};

// Degeneration: substitute the quadric variables of the base net, then take
// the limit as param -> 0.
struct DegenerationFamily {
  std::string id;
  std::string description;
  std::string base;
  std::string target;
  std::vector<std::string> coords;
  std::vector<MPoly> substitution;
  std::string param;

  ParametricBasis basis() const;
};

// Throws UNKNOWN_ID.
const CatalogSpace& catalog_space(const std::string& id);
const DegenerationFamily& degeneration(const std::string& id);
std::vector<DegenerationFamily> degenerations();

using CanonicalObject = std::variant<MatSpace, ParametricBasis>;
CanonicalObject canonical(const std::string& id);

struct PolyCatalog {
  std::string id;
  std::string header;
  std::vector<MPoly> polys;
};

// Ids are the file stems under polys/, e.g. "pencil_cubics".
const PolyCatalog& poly_catalog(const std::string& id);
std::vector<std::string> poly_catalog_ids();

// Raw embedded file content by relative path; throws UNKNOWN_ID.
std::string_view embedded_file(std::string_view path);
std::vector<std::string> embedded_paths();

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

}  // namespace jordanet
