// Text grammar for polynomials:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | identifier | '(' expr ')'
// Whitespace is ignored. MPoly::to_string emits a subset of this grammar,
// so printing and parsing round-trip exactly.

#include <cctype>
#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "jordanet/error.hpp"
#include "jordanet/mpoly.hpp"

namespace jordanet {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  MPoly expr() {
    std::vector<MPoly> parts;
    std::vector<Monomial> monomials;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      if (auto mono = monomial()) {
        if (negate) mono->coeff = -mono->coeff;
        monomials.push_back(std::move(*mono));
      } else {
        MPoly t = term();
        parts.push_back(negate ? -t : t);
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        break;
      }
    }
    if (!monomials.empty()) parts.push_back(from_monomials(monomials));
    return sum(parts, 0, parts.size());
  }

  struct Monomial {
    Rational coeff = 1;
    std::map<std::string, unsigned> powers;
  };

  // Fast path for a term made only of numbers and variable powers; restores
  // the position and returns nullopt otherwise.
  std::optional<Monomial> monomial() {
    const std::size_t start = pos_;
    Monomial m;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        pos_ = start;
        return std::nullopt;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num(digits(), 10);
        Integer den = 1;
        if (accept('/')) den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        unsigned e = 1;
        if (accept('^')) e = exponent();
        Rational p = 1;
        for (unsigned k = 0; k < e; ++k) p *= q;
        m.coeff *= p;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = identifier();
        unsigned e = 1;
        if (accept('^')) e = exponent();
        m.powers[name] += e;
      } else {
        pos_ = start;
        return std::nullopt;
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '+' && text_[pos_] != '-' && text_[pos_] != ')') {
      pos_ = start;
      return std::nullopt;
    }
    return m;
  }

  static MPoly from_monomials(const std::vector<Monomial>& monomials) {
    VarList names;
    for (const auto& m : monomials) {
      for (const auto& [v, e] : m.powers) names.push_back(v);
    }
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::map<std::string, std::size_t> slot;
    for (std::size_t k = 0; k < names.size(); ++k) slot[names[k]] = k;
    std::vector<MPoly::Term> terms;
    terms.reserve(monomials.size());
    for (const auto& m : monomials) {
      MPoly::Exponents e(names.size(), 0);
      for (const auto& [v, p] : m.powers) e[slot[v]] = p;
      terms.push_back({std::move(e), m.coeff});
    }
    return MPoly::from_terms(make_variables(std::move(names)), std::move(terms));
  }

  unsigned exponent() {
    const std::string e = digits();
    if (e.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(e));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Balanced summation keeps long polynomials near-linear to parse.
  static MPoly sum(const std::vector<MPoly>& parts, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return parts[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return sum(parts, lo, mid) + sum(parts, mid, hi);
  }

  MPoly term() {
    MPoly result = factor();
    while (accept('*')) result *= factor();
    return result;
  }

  MPoly factor() {
    MPoly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (accept('/')) {
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return MPoly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace jordanet
