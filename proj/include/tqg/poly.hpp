/**
 * @file poly.hpp
 * @brief Univariate polynomials over an exact field, and exact roots in that field.
 *
 * Roots other than 0 are located numerically under every complex embedding,
 * turned into rational coordinates by continued fractions, and accepted only
 * after exact evaluation.
 */
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "tqg/field.hpp"
#include "tqg/linalg.hpp"

namespace tqg {

/// Coefficients, lowest degree first; the zero polynomial is empty.
template <class T>
using Poly = std::vector<T>;

template <class T>
void poly_trim(Poly<T>& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

template <class T>
int poly_degree(const Poly<T>& f) {
  return static_cast<int>(f.size()) - 1;
}

template <class T>
Poly<T> poly_monic(Poly<T> f) {
  poly_trim(f);
  if (f.empty()) return f;
  T inv = T(1) / f.back();
  for (auto& c : f) c = c * inv;
  return f;
}

template <class T>
void poly_divmod(Poly<T> a, const Poly<T>& b, Poly<T>& q, Poly<T>& r) {
  poly_trim(a);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, T(0));
  T lead_inv = T(1) / b.back();
  while (a.size() >= b.size() && !a.empty()) {
    T c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    poly_trim(a);
  }
  r = a;
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly<T> q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& f) {
  Poly<T> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * T(static_cast<long>(i)));
  poly_trim(d);
  return d;
}

template <class T>
T poly_eval(const Poly<T>& f, const T& x) {
  T acc(0);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> r(a.size() + b.size() - 1, T(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

template <class T>
Poly<T> poly_sub(Poly<T> a, const Poly<T>& b) {
  if (a.size() < b.size()) a.resize(b.size(), T(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

/// Monic g = gcd(a, b) together with s, t such that s a + t b = g.
template <class T>
Poly<T> poly_xgcd(Poly<T> a, Poly<T> b, Poly<T>& s, Poly<T>& t) {
  poly_trim(a);
  poly_trim(b);
  Poly<T> s0{T(1)}, s1, t0, t1{T(1)};
  while (!b.empty()) {
    Poly<T> q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    Poly<T> s2 = poly_sub(s0, poly_mul(q, s1)), t2 = poly_sub(t0, poly_mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) throw DivisionByZero("gcd of two zero polynomials");
  T inv = T(1) / a.back();
  for (auto& c : s0) c = c * inv;
  for (auto& c : t0) c = c * inv;
  s = s0;
  t = t0;
  return poly_monic(a);
}

/// f / gcd(f, f'), monic.
template <class T>
Poly<T> squarefree_part(const Poly<T>& f) {
  Poly<T> g = poly_gcd(f, poly_derivative(f));
  Poly<T> q, r;
  poly_divmod(f, g, q, r);
  return poly_monic(q);
}

namespace detail {

inline std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs) {
  // Aberth iteration on a monic polynomial.
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> a(coeffs.size());
  for (int i = 0; i <= n; ++i) a[i] = coeffs[i] / coeffs[n];
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (n - i)));
  radius = 2 * radius + 1e-3L;
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius * 0.7L, 2.0L * std::acos(-1.0L) * (k + 0.25L) / n);
  auto eval = [&](Complex x, Complex& f, Complex& df) {
    f = a[n];
    df = 0;
    for (int i = n - 1; i >= 0; --i) {
      df = df * x + f;
      f = f * x + a[i];
    }
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int k = 0; k < n; ++k) {
      Complex f, df;
      eval(z[k], f, df);
      if (std::abs(f) == 0) continue;
      Complex ratio = f / df;
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

/// Best rational approximation with denominator at most max_den, if close enough.
inline std::optional<Rational> rationalize(long double x, long max_den = 1000000, long double tol = 1e-9L) {
  if (!std::isfinite(x)) return std::nullopt;
  long double y = x;
  Integer h0(0), h1(1), k0(1), k1(0);
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(y);
    if (std::fabs(fl) > 1e15L) break;
    Integer a(static_cast<long>(fl));
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational r(h1, k1);
    r.canonicalize();
    if (std::fabs(static_cast<long double>(r.get_d()) - x) <= tol * std::max(1.0L, std::fabs(x))) return r;
    long double frac = y - fl;
    if (frac < 1e-18L) break;
    y = 1.0L / frac;
  }
  return std::nullopt;
}

/// Solve the small real system A c = b by Gaussian elimination with pivoting.
inline std::optional<std::vector<long double>> solve_real(std::vector<std::vector<long double>> A,
                                                          std::vector<long double> b) {
  int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int best = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[best][c])) best = r;
    if (std::fabs(A[best][c]) < 1e-14L) return std::nullopt;
    std::swap(A[best], A[c]);
    std::swap(b[best], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      long double f = A[r][c] / A[c][c];
      for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int c = 0; c < n; ++c) b[c] /= A[c][c];
  return b;
}

}  // namespace detail

/// Distinct roots of f lying in the base field (param = p for Q(q)).
template <class T>
std::vector<T> roots_in_field(const Poly<T>& f, int param) {
  using Tr = FieldTraits<T>;
  std::vector<T> roots;
  Poly<T> g = squarefree_part(f);
  if (g.size() <= 1) return roots;
  if (is_zero(g[0])) {
    roots.push_back(T(0));
    g.erase(g.begin());
  }
  if (g.size() == 2) {
    roots.push_back(T(0) - g[0] / g[1]);
    return roots;
  }
  if (g.size() <= 1) return roots;

  const int d = Tr::degree(param);
  const std::vector<int> ks = Tr::embeddings(param);
  std::vector<std::vector<Complex>> numeric;
  for (int k : ks) {
    std::vector<Complex> cs;
    for (const auto& c : g) cs.push_back(Tr::embed(c, k));
    numeric.push_back(detail::complex_roots(cs));
  }
  // Linear system mapping coordinates to the embedded values.
  std::vector<std::vector<long double>> A;
  for (int k : ks) {
    std::vector<long double> re(d), im(d);
    for (int j = 0; j < d; ++j) {
      Complex b = Tr::embed_basis(j, k, param);
      re[j] = b.real();
      im[j] = b.imag();
    }
    A.push_back(re);
    if (!Tr::real(param)) A.push_back(im);
  }
  const int n = static_cast<int>(numeric[0].size());
  std::vector<int> choice(ks.size(), 0);
  while (true) {
    std::vector<long double> rhs;
    for (size_t e = 0; e < ks.size(); ++e) {
      Complex z = numeric[e][choice[e]];
      rhs.push_back(z.real());
      if (!Tr::real(param)) rhs.push_back(z.imag());
    }
    bool plausible = true;
    if (Tr::real(param) && std::fabs(numeric[0][choice[0]].imag()) > 1e-6L) plausible = false;
    if (plausible) {
      auto sol = detail::solve_real(A, rhs);
      if (sol) {
        std::vector<Rational> coords;
        for (long double c : *sol) {
          auto r = detail::rationalize(c);
          if (!r) break;
          coords.push_back(*r);
        }
        if (static_cast<int>(coords.size()) == d) {
          T cand = Tr::from_coords(coords, param);
          if (is_zero(poly_eval(g, cand))) {
            bool fresh = true;
            for (const auto& r : roots) fresh = fresh && !(r == cand);
            if (fresh) roots.push_back(cand);
          }
        }
      }
    }
    size_t e = 0;
    while (e < choice.size() && ++choice[e] == n) choice[e++] = 0;
    if (e == choice.size()) break;
  }
  return roots;
}

}  // namespace tqg
