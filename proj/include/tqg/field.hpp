/**
 * @file field.hpp
 * @brief Per-scalar-type hooks used by generic algorithms: coordinates over Q and
 * complex embeddings. The integer `param` is p for Q(q) and ignored for Q.
 */
#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "tqg/cyclo.hpp"
#include "tqg/quad_ext.hpp"
#include "tqg/rational.hpp"

namespace tqg {

using Complex = std::complex<long double>;

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name(int) { return "Q"; }
  static int degree(int) { return 1; }
  /// One embedding per complex-conjugate pair.
  static std::vector<int> embeddings(int) { return {1}; }
  static bool real(int) { return true; }
  static Complex embed(const Rational& x, int) { return Complex(x.get_d(), 0); }
  static Complex embed_basis(int, int, int) { return Complex(1, 0); }
  static Rational from_coords(const std::vector<Rational>& c, int) { return c.at(0); }
};

template <>
struct FieldTraits<Cyclo> {
  static std::string name(int p) { return "Q(q), q^" + std::to_string(2 * p) + "=1 primitive"; }
  static int degree(int p) { return detail::cyclo_data(p)->d; }
  static std::vector<int> embeddings(int p) {
    std::vector<int> ks;
    for (int k = 1; k < p; k += 2)
      if (std::gcd(k, 2 * p) == 1) ks.push_back(k);
    return ks;
  }
  static bool real(int) { return false; }
  static Complex embed(const Cyclo& x, int k) { return x.embed(k); }
  static Complex embed_basis(int j, int k, int p) {
    const long double pi = std::acos(-1.0L);
    long double ang = pi * k * j / static_cast<long double>(p);
    return Complex(std::cos(ang), std::sin(ang));
  }
  static Cyclo from_coords(const std::vector<Rational>& c, int p) { return Cyclo(p, c); }
};

}  // namespace tqg
