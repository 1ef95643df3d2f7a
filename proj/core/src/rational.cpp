#include "jordanet/rational.hpp"

#include <cctype>

#include "jordanet/error.hpp"

namespace jordanet {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer denominator_lcm(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

Integer numerator_gcd(const std::vector<Rational>& values) {
  Integer g = 0;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  return g;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
  const Integer l = denominator_lcm(v);
  for (auto& x : v) x *= l;
  const Integer g = numerator_gcd(v);
  if (g == 0) return v;
  int sign = 1;
  for (const auto& x : v) {
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  }
  for (auto& x : v) {
    x /= g;
    if (sign < 0) x = -x;
  }
  return v;
}

}  // namespace jordanet
