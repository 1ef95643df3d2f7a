#include "jordanet/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "jordanet/error.hpp"

namespace jordanet {

namespace {

const VarListPtr& empty_vars() {
  static const VarListPtr empty = std::make_shared<const VarList>();
  return empty;
}

unsigned degree_of(const MPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void canonicalize(std::vector<MPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MPoly::Term& x, const MPoly::Term& y) { return grlex_greater(x.exponents, y.exponents); });
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const MPoly::Term& t) { return t.coeff == 0; });
  terms = std::move(out);
}

bool same_vars(const VarListPtr& a, const VarListPtr& b) { return a == b || *a == *b; }

}  // namespace

bool grlex_greater(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string_view ra = a.substr(i, ei - i), rb = b.substr(j, ej - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

VarListPtr make_variables(VarList names) {
  std::sort(names.begin(), names.end(), [](const std::string& x, const std::string& y) { return natural_less(x, y); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) return empty_vars();
  return std::make_shared<const VarList>(std::move(names));
}

VarListPtr merge_variables(const VarListPtr& a, const VarListPtr& b) {
  if (same_vars(a, b) || b->empty()) return a;
  if (a->empty()) return b;
  auto less = [](const std::string& x, const std::string& y) { return natural_less(x, y); };
  if (std::includes(a->begin(), a->end(), b->begin(), b->end(), less)) return a;
  if (std::includes(b->begin(), b->end(), a->begin(), a->end(), less)) return b;
  VarList merged;
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(merged), less);
  return std::make_shared<const VarList>(std::move(merged));
}

std::size_t ExponentsHash::operator()(const MPoly::Exponents& e) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : e) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

MPoly::MPoly() : vars_(empty_vars()) {}

MPoly::MPoly(const Rational& c) : vars_(empty_vars()) {
  if (c != 0) terms_.push_back({{}, c});
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly MPoly::variable(const std::string& name) {
  return MPoly(std::make_shared<const VarList>(VarList{name}), {{{1u}, Rational(1)}});
}

MPoly MPoly::from_terms(VarListPtr vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != vars->size()) {
      throw Error(ErrorCode::DimensionMismatch, "exponent vector length does not match variable count");
    }
  }
  canonicalize(terms);
  return MPoly(std::move(vars), std::move(terms));
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0); }

Rational MPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::DimensionMismatch, "polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<int>(degree_of(terms_.front().exponents));
}

unsigned MPoly::degree_in(std::string_view var) const {
  const auto it = std::find(vars_->begin(), vars_->end(), var);
  if (it == vars_->end()) return 0;
  const auto k = static_cast<std::size_t>(it - vars_->begin());
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[k]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.front().exponents);
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return degree_of(t.exponents) == d; });
}

VarList MPoly::support() const {
  VarList out;
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    if (std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.exponents[k] > 0; })) {
      out.push_back((*vars_)[k]);
    }
  }
  return out;
}

bool MPoly::depends_on(std::string_view var) const { return degree_in(var) > 0; }

Rational MPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents target(vars_->size(), 0);
  for (const auto& [name, e] : monomial) {
    if (e == 0) continue;
    const auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) return 0;
    target[static_cast<std::size_t>(it - vars_->begin())] = e;
  }
  for (const auto& t : terms_) {
    if (t.exponents == target) return t.coeff;
  }
  return 0;
}

MPoly MPoly::over(const VarListPtr& vars) const {
  if (same_vars(vars_, vars)) return MPoly(vars, terms_);
  std::vector<std::size_t> position(vars_->size());
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    const auto it = std::find(vars->begin(), vars->end(), (*vars_)[k]);
    if (it == vars->end()) {
      throw Error(ErrorCode::DimensionMismatch, "variable " + (*vars_)[k] + " missing from target variable list");
    }
    position[k] = static_cast<std::size_t>(it - vars->begin());
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(vars->size(), 0);
    for (std::size_t k = 0; k < t.exponents.size(); ++k) e[position[k]] = t.exponents[k];
    terms.push_back({std::move(e), t.coeff});
  }
  // Both lists are naturally sorted, so the relative order of terms survives;
  // sort anyway in case a caller built an unsorted list.
  canonicalize(terms);
  return MPoly(vars, std::move(terms));
}

MPoly MPoly::compacted() const {
  std::vector<std::size_t> used;
  VarList names;
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    if (std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.exponents[k] > 0; })) {
      used.push_back(k);
      names.push_back((*vars_)[k]);
    }
  }
  if (used.size() == vars_->size()) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e;
    e.reserve(used.size());
    for (auto k : used) e.push_back(t.exponents[k]);
    terms.push_back({std::move(e), t.coeff});
  }
  return MPoly(make_variables(std::move(names)), std::move(terms));
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.is_zero()) return *this;
  const VarListPtr vars = merge_variables(vars_, other.vars_);
  const MPoly a = over(vars);
  const MPoly b = other.over(vars);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].exponents, b.terms_[j].exponents))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exponents, a.terms_[i].exponents)) {
      out.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.push_back({a.terms_[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  vars_ = vars;
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) { return *this += -other; }

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(merge_variables(a.vars_, b.vars_), {});
  const VarListPtr vars = merge_variables(a.vars_, b.vars_);
  PolyAccumulator acc(vars);
  acc.add_product(a.over(vars), b.over(vars), Rational(1));
  return acc.finish();
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (same_vars(a.vars_, b.vars_)) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (a.terms_[k].exponents != b.terms_[k].exponents || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    }
    return true;
  }
  return (a - b).is_zero();
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(Rational(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& assignment) const {
  std::vector<int> assigned(vars_->size(), -1);
  std::vector<const MPoly*> values;
  VarList kept;
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    const auto it = assignment.find((*vars_)[k]);
    if (it != assignment.end()) {
      assigned[k] = static_cast<int>(values.size());
      values.push_back(&it->second);
    } else {
      kept.push_back((*vars_)[k]);
    }
  }
  if (values.empty()) return *this;
  VarListPtr result_vars = make_variables(kept);
  for (const auto* v : values) result_vars = merge_variables(result_vars, v->vars_);

  // Powers of each substituted value, built on demand.
  std::vector<std::vector<MPoly>> powers(values.size());
  auto power_of = [&](std::size_t idx, unsigned e) -> const MPoly& {
    auto& cache = powers[idx];
    if (cache.empty()) cache.push_back(MPoly(Rational(1)).over(result_vars));
    while (cache.size() <= e) cache.push_back((cache.back() * *values[idx]).over(result_vars));
    return cache[e];
  };

  std::vector<std::size_t> kept_position(vars_->size(), 0);
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    if (assigned[k] < 0) {
      kept_position[k] = static_cast<std::size_t>(
          std::find(result_vars->begin(), result_vars->end(), (*vars_)[k]) - result_vars->begin());
    }
  }

  PolyAccumulator acc(result_vars);
  for (const auto& t : terms_) {
    Exponents e(result_vars->size(), 0);
    MPoly factor = MPoly(Rational(1)).over(result_vars);
    bool first = true;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (assigned[k] < 0) {
        e[kept_position[k]] = t.exponents[k];
      } else {
        const MPoly& pw = power_of(static_cast<std::size_t>(assigned[k]), t.exponents[k]);
        factor = first ? pw : (factor * pw).over(result_vars);
        first = false;
      }
    }
    MPoly mono(result_vars, {{std::move(e), t.coeff}});
    acc.add_product(mono, factor, Rational(1));
  }
  return acc.finish();
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<const Rational*> values(vars_->size(), nullptr);
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    const auto it = assignment.find((*vars_)[k]);
    if (it != assignment.end()) values[k] = &it->second;
  }
  std::vector<std::vector<Rational>> powers(vars_->size());
  Rational total = 0;
  Rational term;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      if (values[k] == nullptr) {
        throw Error(ErrorCode::DimensionMismatch, "no value assigned to variable " + (*vars_)[k]);
      }
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * *values[k]);
      term *= cache[e];
    }
    total += term;
  }
  return total;
}

MPoly MPoly::derivative(std::string_view var) const {
  const auto it = std::find(vars_->begin(), vars_->end(), var);
  if (it == vars_->end()) return MPoly(vars_, {});
  const auto k = static_cast<std::size_t>(it - vars_->begin());
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[k] == 0) continue;
    Term d = t;
    d.coeff *= t.exponents[k];
    d.exponents[k] -= 1;
    out.push_back(std::move(d));
  }
  canonicalize(out);
  return MPoly(vars_, std::move(out));
}

std::map<MPoly::Exponents, MPoly> MPoly::collect(const VarList& vars) const {
  std::vector<int> selected(vars_->size(), -1);
  VarList rest;
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    const auto it = std::find(vars.begin(), vars.end(), (*vars_)[k]);
    if (it != vars.end()) {
      selected[k] = static_cast<int>(it - vars.begin());
    } else {
      rest.push_back((*vars_)[k]);
    }
  }
  const VarListPtr rest_vars = make_variables(rest);
  std::map<Exponents, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Exponents key(vars.size(), 0);
    Exponents cof;
    cof.reserve(rest.size());
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (selected[k] >= 0) {
        key[static_cast<std::size_t>(selected[k])] = t.exponents[k];
      } else {
        cof.push_back(t.exponents[k]);
      }
    }
    groups[key].push_back({std::move(cof), t.coeff});
  }
  std::map<Exponents, MPoly> out;
  for (auto& [key, terms] : groups) out.emplace(key, MPoly::from_terms(rest_vars, std::move(terms)));
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    bool wrote = false;
    const bool constant = degree_of(t.exponents) == 0;
    if (magnitude != 1 || constant) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (wrote) os << '*';
      os << (*vars_)[k];
      if (t.exponents[k] > 1) os << '^' << t.exponents[k];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

void PolyAccumulator::add_product(const MPoly& a, const MPoly& b, const Rational& scale) {
  if (scale == 0) return;
  MPoly::Exponents e(vars_->size());
  Rational c;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ta.exponents[k] + tb.exponents[k];
      c = ta.coeff * tb.coeff;
      if (scale != 1) c *= scale;
      auto [it, inserted] = acc_.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
}

void PolyAccumulator::add(const MPoly& a, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& t : a.terms_) {
    auto [it, inserted] = acc_.try_emplace(t.exponents, t.coeff * scale);
    if (!inserted) it->second += t.coeff * scale;
  }
}

MPoly PolyAccumulator::finish() {
  std::vector<MPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [e, c] : acc_) {
    if (c != 0) terms.push_back({e, std::move(c)});
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(),
            [](const MPoly::Term& x, const MPoly::Term& y) { return grlex_greater(x.exponents, y.exponents); });
  return MPoly(vars_, std::move(terms));
}

}  // namespace jordanet
