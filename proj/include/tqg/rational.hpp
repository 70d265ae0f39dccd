/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals and the error types shared by the library.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tqg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Invalid or mismatched parameters (p, s, sign, levels).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// A computed quantity contradicts an internal invariant.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested object needs machinery the library does not implement.
struct OutOfScope : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline long to_long(const Rational& x) {
  if (!is_integer(x)) throw ConsistencyError("expected an integer, got " + x.get_str());
  if (!x.get_num().fits_slong_p()) throw ConsistencyError("integer out of range");
  return x.get_num().get_si();
}

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ParameterError("not a rational: " + text);
  r.canonicalize();
  return r;
}

/// binom(x, k) = x (x-1) ... (x-k+1) / k! for any rational x.
inline Rational generalized_binomial(const Rational& x, int k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  Integer fact(1);
  for (int j = 0; j < k; ++j) {
    num *= x - j;
    fact *= j + 1;
  }
  return num / Rational(fact);
}

inline Rational rational_pow(const Rational& x, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace tqg
