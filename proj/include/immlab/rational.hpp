#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "immlab/error.hpp"

namespace immlab {

// Expression templates are off so that generic code can use `auto` and
// mix Rational with other ring types without surprises.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical text form: "-3" for integers, "p/q" (q > 1, lowest terms) otherwise.
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_string(const Integer& x) { return x.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses the scalar grammar `-?digits` or `-?digits/digits`. Fractions must
/// be in lowest terms with a positive denominator.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!detail::all_digits(num) || (slash != std::string_view::npos && !detail::all_digits(den)))
    throw Error(Errc::schema_error, "malformed scalar \"" + std::string(text) + "\"");

  Integer p{std::string(num)};
  if (negative) p = -p;
  if (slash == std::string_view::npos) return Rational(p);

  Integer q{std::string(den)};
  if (q == 0) throw Error(Errc::schema_error, "zero denominator in \"" + std::string(text) + "\"");
  if (gcd(p, q) != 1)
    throw Error(Errc::schema_error, "non-reduced fraction \"" + std::string(text) + "\"");
  return Rational(p, q);
}

}  // namespace immlab
