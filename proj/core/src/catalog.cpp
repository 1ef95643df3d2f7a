#include "jordanet/catalog.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "embedded_data.hpp"
#include "jordanet/error.hpp"
#include "jordanet/io.hpp"

namespace jordanet {

namespace {

struct Store {
  std::vector<CatalogEntry> entries;
  std::map<std::string, CatalogSpace> spaces;
  std::map<std::string, DegenerationFamily> families;
  std::map<std::string, PolyCatalog> polys;
};

PolyCatalog read_poly_catalog(const std::string& id, std::string_view content) {
  PolyCatalog cat;
  cat.id = id;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (cat.header.empty()) cat.header = line.substr(line.find_first_not_of("# "));
      continue;
    }
    cat.polys.push_back(MPoly::parse(line));
  }
  return cat;
}

Store build_store() {
  Store s;
  const auto manifest = nlohmann::json::parse(embedded_file("catalog/manifest.json"));
  for (const auto& e : manifest.at("entries")) {
    CatalogEntry ce{e.at("id"), e.at("kind"), e.at("file"), e.at("description")};
    const auto j = nlohmann::json::parse(embedded_file(ce.file));
    if (j.at("id") != ce.id) throw Error(ErrorCode::ParseError, "manifest id mismatch for " + ce.file);
    if (ce.kind == "space") {
      CatalogSpace cs{ce.id, ce.description, j.at("vars").get<std::vector<std::string>>(),
                      symbolic_matrix(j.at("matrix")), space_from_json(j)};
      s.spaces.emplace(ce.id, std::move(cs));
    } else {
      DegenerationFamily f;
      f.id = ce.id;
      f.description = ce.description;
      f.base = j.at("base");
      f.target = j.at("target");
      f.coords = j.at("coords").get<std::vector<std::string>>();
      for (const auto& p : j.at("substitution")) f.substitution.push_back(MPoly::parse(p.get<std::string>()));
      f.param = j.at("param");
      s.families.emplace(ce.id, std::move(f));
    }
    s.entries.push_back(std::move(ce));
  }
  for (const auto& f : detail::embedded_files()) {
    constexpr std::string_view dir = "polys/";
    if (f.path.substr(0, dir.size()) != dir) continue;
    std::string stem(f.path.substr(dir.size()));
    stem = stem.substr(0, stem.rfind('.'));
    s.polys.emplace(stem, read_poly_catalog(stem, f.content));
  }
  return s;
}

const Store& store() {
  static const Store s = build_store();
  return s;
}

}  // namespace

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view embedded_file(std::string_view path) {
  for (const auto& f : detail::embedded_files()) {
    if (f.path == path) return f.content;
  }
  throw Error(ErrorCode::UnknownId, "no embedded file '" + std::string(path) + "'");
}

std::vector<std::string> embedded_paths() {
  std::vector<std::string> out;
  for (const auto& f : detail::embedded_files()) out.emplace_back(f.path);
  return out;
}

const std::vector<CatalogEntry>& catalog_entries() { return store().entries; }

const CatalogSpace& catalog_space(const std::string& id) {
  const auto& m = store().spaces;
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorCode::UnknownId, "no catalog space '" + id + "'");
  return it->second;
}

const DegenerationFamily& degeneration(const std::string& id) {
  const auto& m = store().families;
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorCode::UnknownId, "no degeneration family '" + id + "'");
  return it->second;
}

std::vector<DegenerationFamily> degenerations() {
  std::vector<DegenerationFamily> out;
  for (const auto& e : store().entries) {
    if (e.kind == "family") out.push_back(degeneration(e.id));
  }
  return out;
}

ParametricBasis DegenerationFamily::basis() const {
  return substitution_family(catalog_space(base).space, coords, substitution, param);
}

CanonicalObject canonical(const std::string& id) {
  const auto& s = store();
  if (auto it = s.spaces.find(id); it != s.spaces.end()) return it->second.space;
  if (auto it = s.families.find(id); it != s.families.end()) return it->second.basis();
  throw Error(ErrorCode::UnknownId, "no catalog entry '" + id + "'");
}

const PolyCatalog& poly_catalog(const std::string& id) {
  const auto& m = store().polys;
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorCode::UnknownId, "no polynomial catalog '" + id + "'");
  return it->second;
}

std::vector<std::string> poly_catalog_ids() {
  std::vector<std::string> out;
  for (const auto& [id, c] : store().polys) out.push_back(id);
  return out;
}

}  // namespace jordanet
