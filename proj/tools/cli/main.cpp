#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jordanet/catalog.hpp"
#include "jordanet/chow.hpp"
#include "jordanet/classify.hpp"
#include "jordanet/error.hpp"
#include "jordanet/io.hpp"
#include "jordanet/jordan.hpp"
#include "jordanet/varieties.hpp"
#include "verify/suite.hpp"

using namespace jordanet;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Flags {
  std::string source;
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
  int trials = 20;
  unsigned degree = 0;
  bool closure = false;
  bool rank = false;
  bool kernel = false;
  bool det_stats = false;
  bool generic_n3 = false;
  std::vector<std::string> subset;
};

ojson convert(const nlohmann::json& j) { return ojson::parse(j.dump()); }

ojson matrix_json(const QMatrix& m) { return convert(to_json(m)); }

std::string read_source(const std::string& source) {
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

bool is_catalog_ref(const std::string& s) { return s.rfind("catalog://", 0) == 0; }

std::string render(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print(const ojson& report, bool json) {
  if (json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report["operation"].get<std::string>() << " " << render(report["input"]) << "\n";
  for (const auto& [key, value] : report["results"].items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << key << ":\n";
      for (const auto& row : value) std::cout << "  " << row.dump() << "\n";
    } else {
      std::cout << key << ": " << render(value) << "\n";
    }
  }
  if (report.contains("seconds")) std::cout << "seconds: " << report["seconds"].get<double>() << "\n";
}

ojson maybe_net_class(const MatSpace& l) {
  if (l.n() != 4 || l.dim() != 3) return nullptr;
  try {
    return classify_net_S4(l);
  } catch (const Error& e) {
    return std::string(to_string(e.code()));
  }
}

ojson analyze(const Flags& f) {
  const MatSpace l = load_space(f.source);
  ojson r;
  r["n"] = l.n();
  r["dim"] = l.dim();
  const bool regular = is_regular(l);
  r["regular"] = regular;
  if (!regular) return r;
  const QMatrix u = find_invertible(l).matrix;
  r["unit"] = matrix_json(u);
  const auto test = is_jordan(l, u);
  r["is_jordan"] = test.is_jordan;
  if (test.witness) {
    r["witness"] = {{"i", test.witness->i + 1}, {"j", test.witness->j + 1}, {"product", matrix_json(test.witness->product)}};
  }
  if (f.closure || !test.is_jordan) {
    const auto c = jordan_closure(l, u);
    r["closure_dim"] = c.space.dim();
  }
  Rng rng(f.seed);
  const auto rec = check_reciprocal_identity(l, u, f.trials, rng);
  r["reciprocal_identity"] = {{"holds", rec.holds}, {"tested", rec.tested}};
  if (test.is_jordan) {
    const auto a = JordanStructure::build(l, u);
    r["radical_dim"] = radical(a).basis.size();
    if (l.dim() >= 2 && l.dim() <= 3) r["label"] = classify_abstract(a);
    if (l.n() == 4 && l.dim() == 3) {
      r["invariants"] = invariant_vector(l, u).to_string();
      r["net_class"] = maybe_net_class(l);
    }
  }
  return r;
}

ojson chow(const Flags& f) {
  ojson r;
  if (f.generic_n3) {
    const MPoly d = chow_det_generic_n3();
    r["generic_n3"] = true;
    r["degree"] = d.total_degree();
    r["terms"] = d.term_count();
    if (!f.source.empty()) r["value"] = to_string(evaluate_generic_n3(d, load_space(f.source)));
    return r;
  }
  const MatSpace l = load_space(f.source);
  const bool all = !f.rank && !f.kernel && !f.det_stats;
  const auto m = chow_matrix(l);
  r["rows"] = m.values.rows();
  r["columns"] = m.values.cols();
  if (f.rank || all) r["rank"] = chow_rank(l);
  if (f.kernel || all) {
    ojson forms = ojson::array();
    for (const auto& p : chow_kernel_forms(l)) forms.push_back(p.to_string());
    r["kernel"] = forms;
  }
  if (f.det_stats) {
    if (!m.values.is_square()) throw Error(ErrorCode::DimensionMismatch, "Chow matrix is not square");
    r["det"] = to_string(det(m.values));
  }
  return r;
}

ojson pencil(const Flags& f) {
  const MatSpace l = load_space(f.source);
  if (l.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a pencil");
  ojson r;
  r["n"] = l.n();
  r["class"] = classify_pencil(l).label();
  const auto c = rank_one_pencil(l);
  r["rank_one_points"] = c.all ? ojson("ALL") : ojson(c.count);
  if (l.n() == 3) {
    try {
      ojson vals = ojson::array();
      for (const auto& v : catalog_eval("pencil_cubics", l)) vals.push_back(to_string(v));
      r["cubics"] = vals;
    } catch (const Error&) {
      // not of the form span{1_3, X}
    }
  }
  return r;
}

ojson copencil(const Flags& f) {
  const MatSpace l = load_space(f.source);
  ojson r;
  r["class"] = std::string(to_string(classify_copencil_S3(l)));
  const auto test = is_jordan(l);
  if (test.is_jordan) {
    const auto a = JordanStructure::build(l, find_invertible(l).matrix);
    r["radical_dim"] = radical(a).basis.size();
    r["separation"] = "radical dimension (derived, verified on canonical forms only)";
  } else if (test.witness) {
    r["witness"] = {{"i", test.witness->i + 1}, {"j", test.witness->j + 1}};
  }
  return r;
}

ojson plucker_cmd(const Flags& f) {
  const MatSpace l = load_space(f.source);
  const auto p = plucker(l);
  ojson r;
  ojson coords = ojson::object();
  for (std::size_t k = 0; k < p.index.size(); ++k) {
    if (p.value[k] == 0) continue;
    std::string name = "p";
    for (auto i : p.index[k]) name += (p.n > 10 ? "_" : "") + std::to_string(i);
    coords[name] = to_string(p.value[k]);
  }
  r["nonzero"] = coords;
  if (l.n() == 4 && l.dim() == 3) {
    ojson certs = ojson::object();
    for (const auto& id : poly_catalog_ids()) {
      if (id.rfind("plucker_", 0) != 0) continue;
      bool zero = true;
      for (const auto& v : catalog_eval(id, p)) zero = zero && v == 0;
      certs[id] = zero ? "vanishes" : "nonzero";
    }
    r["certificates"] = certs;
  }
  return r;
}

ParametricBasis load_family(const std::string& source) {
  if (is_catalog_ref(source)) return degeneration(source.substr(10)).basis();
  const auto j = parse_json(read_source(source));
  try {
    ParametricBasis b;
    b.n = j.at("n").get<std::size_t>();
    b.param = j.value("param", std::string("t"));
    for (const auto& m : j.at("basis")) {
      PolyMatrix pm(b.n, b.n);
      if (m.size() != b.n) throw Error(ErrorCode::ParseError, "basis matrix has wrong size");
      for (std::size_t r = 0; r < b.n; ++r) {
        if (m.at(r).size() != b.n) throw Error(ErrorCode::ParseError, "basis matrix has wrong size");
        for (std::size_t c = 0; c < b.n; ++c) {
          const auto& e = m.at(r).at(c);
          pm(r, c) = e.is_string() ? MPoly::parse(e.get<std::string>()) : MPoly(e.get<long>());
        }
      }
      b.basis.push_back(pm);
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ojson limit(const Flags& f) {
  const auto family = load_family(f.source);
  const MatSpace l = grassmann_limit(family);
  ojson r;
  ojson basis = ojson::array();
  for (const auto& b : l.basis()) basis.push_back(matrix_json(b));
  r["limit_basis"] = basis;
  if (is_catalog_ref(f.source)) r["expected"] = degeneration(f.source.substr(10)).target;
  const auto nc = maybe_net_class(l);
  if (!nc.is_null()) r["net_class"] = nc;
  return r;
}

ojson certificate_json(const Certificate& c) {
  ojson r;
  r["result"] = std::string(to_string(c.kind));
  r["degree"] = c.degree;
  r["rows"] = c.rows;
  r["columns"] = c.columns;
  r["rank"] = c.rank;
  return r;
}

ojson emptiness(const Flags& f) {
  std::vector<MPoly> polys;
  std::vector<std::string> vars;
  std::optional<MatSpace> space;
  if (!is_catalog_ref(f.source)) {
    const auto j = parse_json(read_source(f.source));
    if (j.is_object() && j.contains("polys")) {
      try {
        vars = j.at("vars").get<std::vector<std::string>>();
        for (const auto& p : j.at("polys")) polys.push_back(MPoly::parse(p.get<std::string>()));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
      }
    } else {
      space = space_from_json(j);
    }
  } else {
    space = load_space(f.source);
  }
  if (space) {
    polys = rank_one_system(*space);
    vars = generic_variables(space->dim());
  }
  ojson r;
  const Certificate c = f.degree ? macaulay_emptiness(polys, vars, f.degree) : macaulay_sweep(polys, vars, 2, 6);
  r["system"] = {{"equations", polys.size()}, {"variables", vars}};
  r["certificate"] = certificate_json(c);
  if (space) {
    const auto b = min_rank_bounds(*space, f.trials, f.seed);
    r["min_rank"] = {{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact()}, {"witness", matrix_json(b.upper_witness)}};
  }
  return r;
}

int run_verification(const Flags& f, ojson& results) {
  verify::Options o;
  o.seed = f.seed;
  o.subset = f.subset;
  const auto out = verify::run(o);
  if (out.empty()) throw Error(ErrorCode::UnknownId, "subset selects no checks");
  ojson checks = ojson::array();
  bool ok = true;
  for (const auto& c : out) {
    ojson row;
    row["number"] = c.number;
    row["group"] = c.group;
    row["title"] = c.title;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    if (f.timing) row["seconds"] = c.seconds;
    checks.push_back(row);
    ok = ok && c.passed;
  }
  results["checks"] = checks;
  results["passed"] = ok;
  return ok ? kExitOk : kExitVerifyFailed;
}

void print_verify(const ojson& report) {
  for (const auto& c : report["results"]["checks"]) {
    std::cout << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " [" << c["number"].get<int>() << "] "
              << c["group"].get<std::string>() << ": " << c["title"].get<std::string>() << "\n";
    if (!c["detail"].get<std::string>().empty()) std::cout << "    " << c["detail"].get<std::string>() << "\n";
  }
  if (report.contains("seconds")) std::cout << "seconds: " << report["seconds"].get<double>() << "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownId:
      return kExitParse;
    default:
      return kExitPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Jordan spaces of symmetric matrices"};
  app.require_subcommand(1);
  Flags f;

  const auto common = [&](CLI::App* sub, bool source_required) {
    auto* opt = sub->add_option("source", f.source, "space file or catalog://id");
    if (source_required) opt->required();
    sub->add_flag("--json", f.json, "emit JSON");
    sub->add_flag("--timing", f.timing, "include wall-clock time");
    sub->add_option("--seed", f.seed, "PRNG seed")->default_val(0);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Jordan test, closure, radical and labels");
  common(analyze_cmd, true);
  analyze_cmd->add_flag("--closure", f.closure, "report the Jordan closure dimension");
  analyze_cmd->add_option("--trials", f.trials, "reciprocal identity samples");

  auto* chow_cmd = app.add_subcommand("chow", "Chow matrix rank, kernel and determinant");
  common(chow_cmd, false);
  chow_cmd->add_flag("--rank", f.rank, "Chow rank");
  chow_cmd->add_flag("--kernel", f.kernel, "normalized kernel forms");
  chow_cmd->add_flag("--det-stats", f.det_stats, "determinant of a square Chow matrix");
  chow_cmd->add_flag("--generic-n3", f.generic_n3, "generic Chow determinant for nets in S^3");

  auto* pencil_cmd = app.add_subcommand("pencil", "classify a pencil");
  common(pencil_cmd, true);
  auto* copencil_cmd = app.add_subcommand("copencil", "classify a copencil in S^3");
  common(copencil_cmd, true);
  auto* plucker_cmd_ = app.add_subcommand("plucker", "Plucker coordinates and quadric certificates");
  common(plucker_cmd_, true);
  auto* limit_cmd = app.add_subcommand("limit", "Grassmannian limit of a one-parameter family");
  common(limit_cmd, true);

  auto* emptiness_cmd = app.add_subcommand("emptiness", "Macaulay emptiness certificate");
  common(emptiness_cmd, true);
  emptiness_cmd->add_option("--degree", f.degree, "fixed Macaulay degree (default: sweep 2..6)");
  emptiness_cmd->add_option("--trials", f.trials, "samples for the rank upper bound");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in verification suite");
  verify_cmd->add_flag("--json", f.json, "emit JSON");
  verify_cmd->add_flag("--timing", f.timing, "include wall-clock time");
  verify_cmd->add_option("--seed", f.seed, "PRNG seed")->default_val(0);
  verify_cmd->add_option("--subset", f.subset, "groups or check numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  ojson report;
  report["operation"] = sub->get_name();
  report["input"] = sub == verify_cmd ? ojson(f.subset) : ojson(f.source);
  report["seed"] = f.seed;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    ojson results;
    if (sub == analyze_cmd) results = analyze(f);
    else if (sub == chow_cmd) {
      if (f.source.empty() && !f.generic_n3) throw Error(ErrorCode::ParseError, "chow needs a source or --generic-n3");
      results = chow(f);
    } else if (sub == pencil_cmd) results = pencil(f);
    else if (sub == copencil_cmd) results = copencil(f);
    else if (sub == plucker_cmd_) results = plucker_cmd(f);
    else if (sub == limit_cmd) results = limit(f);
    else if (sub == emptiness_cmd) results = emptiness(f);
    else code = run_verification(f, results);
    report["results"] = results;
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    report["results"] = ojson::object();
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  report["exit_code"] = code;
  if (f.timing) {
    const std::chrono::duration<double> s = std::chrono::steady_clock::now() - start;
    report["seconds"] = s.count();
  }
  if (report.contains("error") && !f.json) {
    std::cerr << "error: " << report["error"]["message"].get<std::string>() << "\n";
  } else if (sub == verify_cmd && !f.json) {
    print_verify(report);
  } else {
    print(report, f.json);
  }
  return code;
}
