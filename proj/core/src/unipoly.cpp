#include "jordanet/unipoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "jordanet/error.hpp"

namespace jordanet {

namespace {

bool divides(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

struct GrlexGreater {
  bool operator()(const MPoly::Exponents& a, const MPoly::Exponents& b) const { return grlex_greater(a, b); }
};

// Coefficientwise exact division of a univariate polynomial by a scalar
// polynomial of the coefficient ring.
UniPoly divide_coeffs(const UniPoly& p, const MPoly& c) {
  std::vector<MPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) {
    auto q = divide_exact(a, c);
    if (!q) throw Error(ErrorCode::DimensionMismatch, "inexact coefficient division by " + c.to_string());
    out.push_back(std::move(*q));
  }
  return UniPoly(p.var(), std::move(out));
}

UniPoly monomial_times(const UniPoly& p, const MPoly& c, std::size_t shift) {
  std::vector<MPoly> out(shift);
  for (const auto& a : p.coeffs()) out.push_back(a * c);
  return UniPoly(p.var(), std::move(out));
}

std::string first_occurring(const MPoly& a, const MPoly& b) {
  const VarListPtr vars = merge_variables(a.variables_ptr(), b.variables_ptr());
  for (const auto& v : *vars) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return {};
}

}  // namespace

UniPoly::UniPoly(std::string var, std::vector<MPoly> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.depends_on(var_)) {
      throw Error(ErrorCode::DimensionMismatch, "coefficient " + c.to_string() + " involves the main variable " + var_);
    }
  }
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_mpoly(const MPoly& p, const std::string& var) {
  const auto groups = p.collect({var});
  std::vector<MPoly> coeffs;
  for (const auto& [e, c] : groups) {
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1);
    coeffs[e[0]] = c;
  }
  return UniPoly(var, std::move(coeffs));
}

MPoly UniPoly::to_mpoly() const {
  MPoly result;
  if (coeffs_.empty()) return result;
  const MPoly x = MPoly::variable(var_);
  // Horner from the top.
  for (std::size_t k = coeffs_.size(); k-- > 0;) result = result * x + coeffs_[k];
  return result;
}

UniPoly UniPoly::derivative() const {
  std::vector<MPoly> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return UniPoly(var_, std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const std::string& var = a.var_.empty() ? b.var_ : a.var_;
  std::vector<MPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(var, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const std::string& var = a.var_.empty() ? b.var_ : a.var_;
  if (a.is_zero() || b.is_zero()) return UniPoly(var, {});
  std::vector<MPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(var, std::move(out));
}

UniPoly operator*(const UniPoly& a, const MPoly& c) { return monomial_times(a, c, 0); }

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  if (!a.coeffs_.empty() && a.var_ != b.var_) return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DimensionMismatch, "division by the zero polynomial");
  if (a.is_zero()) return MPoly();
  const VarListPtr vars = merge_variables(a.variables_ptr(), b.variables_ptr());
  const MPoly divisor = b.over(vars);
  const auto& lead = divisor.leading_term();

  std::map<MPoly::Exponents, Rational, GrlexGreater> rest;
  const MPoly dividend = a.over(vars);
  for (const auto& t : dividend.terms()) rest.emplace(t.exponents, t.coeff);

  std::vector<MPoly::Term> quotient;
  MPoly::Exponents shift(vars->size());
  while (!rest.empty()) {
    const auto top = rest.begin();
    if (!divides(lead.exponents, top->first)) return std::nullopt;
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = top->first[k] - lead.exponents[k];
    const Rational q = top->second / lead.coeff;
    quotient.push_back({shift, q});
    for (const auto& t : divisor.terms()) {
      MPoly::Exponents e(shift.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = shift[k] + t.exponents[k];
      auto [it, inserted] = rest.try_emplace(std::move(e), -q * t.coeff);
      if (!inserted) {
        it->second -= q * t.coeff;
        if (it->second == 0) rest.erase(it);
      }
    }
  }
  return MPoly::from_terms(vars, std::move(quotient));
}

MPoly normalize_associate(const MPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> coeffs;
  coeffs.reserve(p.term_count());
  for (const auto& t : p.terms()) coeffs.push_back(t.coeff);
  Rational scale(denominator_lcm(coeffs), numerator_gcd(coeffs));
  scale.canonicalize();
  if (p.leading_term().coeff < 0) scale = -scale;
  return p * scale;
}

MPoly content(const UniPoly& p) {
  MPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  UniPoly q = divide_coeffs(p, content(p));
  std::vector<Rational> all;
  for (const auto& c : q.coeffs()) {
    for (const auto& t : c.terms()) all.push_back(t.coeff);
  }
  Rational scale(denominator_lcm(all), numerator_gcd(all));
  scale.canonicalize();
  if (q.leading().leading_term().coeff < 0) scale = -scale;
  return q * MPoly(scale);
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DimensionMismatch, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const MPoly& lb = b.leading();
  int e = a.degree() - db + 1;
  UniPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const UniPoly s = monomial_times(b, r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = r * lb - s;
    --e;
  }
  return r * lb.pow(static_cast<unsigned>(e));
}

std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DimensionMismatch, "division by the zero polynomial");
  const std::string& var = b.var();
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return UniPoly(var, {});
    return std::nullopt;
  }
  std::vector<MPoly> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  UniPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto c = divide_exact(r.leading(), b.leading());
    if (!c) return std::nullopt;
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const int before = r.degree();
    r = r - monomial_times(b, *c, shift);
    q[shift] = std::move(*c);
    if (r.degree() >= before) return std::nullopt;
  }
  if (!r.is_zero()) return std::nullopt;
  return UniPoly(var, std::move(q));
}

UniPoly subresultant_gcd(const UniPoly& p, const UniPoly& q) {
  const std::string& var = p.var().empty() ? q.var() : p.var();
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  UniPoly a = primitive_part(p);
  UniPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return UniPoly(var, {MPoly(1)});

  MPoly g(1);
  MPoly h(1);
  for (;;) {
    const int d = a.degree() - b.degree();
    const UniPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return UniPoly(var, {MPoly(1)});
    a = b;
    b = divide_coeffs(r, g * h.pow(static_cast<unsigned>(d)));
    g = a.leading();
    if (d > 0) {
      const MPoly num = g.pow(static_cast<unsigned>(d));
      auto next = divide_exact(num, h.pow(static_cast<unsigned>(d - 1)));
      if (!next) throw Error(ErrorCode::DimensionMismatch, "subresultant sequence lost exactness");
      h = std::move(*next);
    }
  }
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  const std::string v = first_occurring(a, b);
  if (v.empty()) return MPoly(1);
  const UniPoly ua = UniPoly::from_mpoly(a, v);
  const UniPoly ub = UniPoly::from_mpoly(b, v);
  if (ua.degree() == 0) return gcd(a, content(ub));
  if (ub.degree() == 0) return gcd(content(ua), b);
  const MPoly c = gcd(content(ua), content(ub));
  const UniPoly g = subresultant_gcd(ua, ub);
  return normalize_associate(c * g.to_mpoly());
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DimensionMismatch, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  const UniPoly f = primitive_part(p);
  if (f.degree() > 0) {
    // Yun's algorithm over the fraction field; every divisor is primitive,
    // so all quotients stay in the coefficient ring.
    const UniPoly df = f.derivative();
    const UniPoly a0 = subresultant_gcd(f, df);
    UniPoly b = *divide_exact(f, a0);
    UniPoly c = *divide_exact(df, a0);
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
      const UniPoly a = subresultant_gcd(b, d);
      const UniPoly next_b = *divide_exact(b, a);
      c = *divide_exact(d, a);
      d = c - next_b.derivative();
      if (a.degree() > 0) out.factors.push_back({primitive_part(a), i});
      b = next_b;
      ++i;
    }
  }
  UniPoly product(p.var(), {MPoly(1)});
  for (const auto& [factor, mult] : out.factors) {
    for (unsigned k = 0; k < mult; ++k) product = product * factor;
  }
  // p = content * product; the content is a coefficient-ring element.
  auto quotient = divide_exact(p, product);
  if (!quotient || quotient->degree() != 0) {
    throw Error(ErrorCode::DimensionMismatch, "squarefree reconstruction failed for " + p.to_string());
  }
  out.content = quotient->leading();
  return out;
}

}  // namespace jordanet
