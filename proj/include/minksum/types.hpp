#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minksum {

/// Exact rational scalar. Every geometric and solver computation in this
/// library runs on it; there is no floating-point fallback.
/// To build one from a numerator/denominator pair, pass Integer operands:
/// the built-in-int pair constructor sends the denominator through
/// unsigned long, so a negative int denominator wraps instead of negating.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// A point of R^n with exact rational coordinates.
using Point = Vector;

/// Input data violated a contract (bad token, shape mismatch, duplicate point).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that failed to parse; message names the offending line or row.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal guarantee was broken. Always a bug, never a data problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline std::string_view consume_digits(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return s.substr(start, pos - start);
}

inline Integer integer_from_digits(std::string_view digits) {
  return Integer(std::string(digits));
}

}  // namespace detail

/// Parses "p/q", a plain integer, or a finite decimal ("0.25" becomes 1/4).
/// The sign, if any, goes on the leading numerator. Anything else throws.
inline Rational parse_rational(std::string_view token) {
  const auto fail = [&](const char* why) -> void {
    throw ParseError("invalid rational '" + std::string(token) + "': " + why);
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
    negative = (token[pos] == '-');
    ++pos;
  }
  const std::string_view int_digits = detail::consume_digits(token, pos);

  Rational value;
  if (pos == token.size()) {
    if (int_digits.empty()) fail("no digits");
    value = Rational(detail::integer_from_digits(int_digits));
  } else if (token[pos] == '/') {
    ++pos;
    const std::string_view den_digits = detail::consume_digits(token, pos);
    if (pos != token.size()) fail("trailing characters after denominator");
    if (int_digits.empty() || den_digits.empty()) fail("missing numerator or denominator");
    const Integer den = detail::integer_from_digits(den_digits);
    if (den == 0) fail("zero denominator");
    // Constructing from an integer pair reduces to lowest terms.
    value = Rational(detail::integer_from_digits(int_digits), den);
  } else if (token[pos] == '.') {
    ++pos;
    const std::string_view frac_digits = detail::consume_digits(token, pos);
    if (pos != token.size()) fail("trailing characters after decimal part");
    if (int_digits.empty() && frac_digits.empty()) fail("no digits");
    Integer scaled = int_digits.empty() ? Integer(0) : detail::integer_from_digits(int_digits);
    Integer scale = 1;
    for (char d : frac_digits) {
      scaled = scaled * 10 + (d - '0');
      scale *= 10;
    }
    value = Rational(scaled, scale);
  } else {
    fail("unexpected character");
  }
  return negative ? Rational(-value) : value;
}

/// Canonical text form: lowest terms, sign on the numerator, "/q" omitted
/// when the denominator is 1. parse_rational inverts this exactly.
inline std::string format_rational(const Rational& r) { return r.str(); }

inline bool points_equal(const Point& p, const Point& q) {
  if (p.size() != q.size()) return false;
  for (Index t = 0; t < p.size(); ++t) {
    if (p(t) != q(t)) return false;
  }
  return true;
}

/// Coordinate-wise lexicographic order.
inline bool lex_less(const Point& p, const Point& q) {
  const Index common = p.size() < q.size() ? p.size() : q.size();
  for (Index t = 0; t < common; ++t) {
    if (p(t) != q(t)) return p(t) < q(t);
  }
  return p.size() < q.size();
}

}  // namespace minksum
