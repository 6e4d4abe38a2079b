#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entcone {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p", "-p" or "p/q"; the result is in lowest terms.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

/// Smallest positive multiple of `v` with integral entries and gcd 1.
/// The zero vector maps to the zero vector.
IntegerVector primitive_integer(std::span<const Rational> v);

/// Divides out the gcd of the entries in place. Returns false for the zero vector.
bool make_primitive(IntegerVector& v);

RationalVector to_rational(std::span<const Integer> v);

bool is_zero(std::span<const Rational> v);
bool is_zero(std::span<const Integer> v);

}  // namespace entcone
