#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jordanet {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) across arithmetic; construction from text goes through
// parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// a / b in canonical form; b must be nonzero.
inline Rational make_rational(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

// Least common multiple of denominators and gcd of numerators of the nonzero
// entries; used to scale coefficient vectors to primitive integer vectors.
Integer denominator_lcm(const std::vector<Rational>& values);
Integer numerator_gcd(const std::vector<Rational>& values);

// Scales v to integer entries with content 1 and first nonzero entry positive.
// The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace jordanet
