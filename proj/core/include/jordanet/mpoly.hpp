#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jordanet/rational.hpp"

namespace jordanet {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

// Variable ordering used everywhere: alphabetical, with embedded digit runs
// compared numerically so that t2 < t10 and x9 < x11.
bool natural_less(std::string_view a, std::string_view b);

// Sparse multivariate polynomial over the rationals.
//
// Terms are kept in graded-lexicographic order, largest first, with the
// variables sorted by natural_less. The variable list may contain variables
// that do not occur in any term; arithmetic merges lists as needed, and
// equality is semantic.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct Term {
    Exponents exponents;
    Rational coeff;
  };

  static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

  MPoly();
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);             // NOLINT(google-explicit-constructor)

  static MPoly variable(const std::string& name);
  static MPoly from_terms(VarListPtr vars, std::vector<Term> terms);
  static MPoly parse(std::string_view text);

  const VarList& variables() const { return *vars_; }
  const VarListPtr& variables_ptr() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws if not constant.
  Rational constant_value() const;

  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree_in(std::string_view var) const;
  bool is_homogeneous() const;
  // Variables occurring with nonzero exponent, in order.
  VarList support() const;
  bool depends_on(std::string_view var) const;

  // Coefficient of the monomial given as variable -> exponent.
  Rational coefficient(const std::map<std::string, unsigned>& monomial) const;
  const Term& leading_term() const { return terms_.front(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned k) const;

  // Substitutes the assigned variables; unassigned ones are kept.
  MPoly substitute(const std::map<std::string, MPoly>& assignment) const;
  // Full evaluation; every occurring variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  MPoly derivative(std::string_view var) const;

  // Groups terms by the exponents of `vars` (in the given order); each value
  // is the cofactor polynomial in the remaining variables.
  std::map<Exponents, MPoly> collect(const VarList& vars) const;

  // Same polynomial expressed over a variable list that contains ours.
  MPoly over(const VarListPtr& vars) const;
  // Drops variables that do not occur.
  MPoly compacted() const;

  std::string to_string() const;

 private:
  friend class PolyAccumulator;
  MPoly(VarListPtr vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

  VarListPtr vars_;
  std::vector<Term> terms_;
};

// Sorted union of two variable lists; returns one of the inputs when it
// already contains the other.
VarListPtr merge_variables(const VarListPtr& a, const VarListPtr& b);
VarListPtr make_variables(VarList names);

// Graded lexicographic comparison of exponent vectors over one variable list.
bool grlex_greater(const MPoly::Exponents& a, const MPoly::Exponents& b);

struct ExponentsHash {
  std::size_t operator()(const MPoly::Exponents& e) const noexcept;
};

// Accumulates sums of scaled products into one polynomial without forming
// the intermediate polynomials; used by determinant expansion.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(VarListPtr vars) : vars_(std::move(vars)) {}

  // Inputs must already be expressed over exactly this accumulator's list.
  void add_product(const MPoly& a, const MPoly& b, const Rational& scale);
  void add(const MPoly& a, const Rational& scale);
  MPoly finish();

 private:
  VarListPtr vars_;
  std::unordered_map<MPoly::Exponents, Rational, ExponentsHash> acc_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace jordanet
