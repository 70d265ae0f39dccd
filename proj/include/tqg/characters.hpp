/**
 * @file characters.hpp
 * @brief Truncated q-series characters: Verma, irreducible Virasoro, Fock, lattice,
 * simple and projective triplet modules. The factor q^{-c/24} is omitted.
 */
#pragma once

#include <string>
#include <vector>

#include "tqg/weights.hpp"

namespace tqg {

/// sum_{d=0}^{cutoff} coeffs[d] q^{offset + d}.
struct QSeries {
  Rational offset;
  std::vector<Rational> coeffs;
  int cutoff = 0;

  static QSeries zero(const Rational& offset, int cutoff) {
    return QSeries{offset, std::vector<Rational>(cutoff + 1, Rational(0)), cutoff};
  }

  /// Coefficient at absolute weight w (0 outside the window).
  Rational at_weight(const Rational& w) const {
    Rational d = w - offset;
    if (!is_integer(d) || d < 0 || d > cutoff) return Rational(0);
    return coeffs[to_long(d)];
  }

  Rational top() const { return offset + cutoff; }

  /// Adds factor * other on this grid; other must sit on the same integer lattice.
  void accumulate(const QSeries& other, const Rational& factor = Rational(1)) {
    Rational shift = other.offset - offset;
    if (!is_integer(shift)) throw ParameterError("series offsets differ by a non-integer");
    long sh = to_long(shift);
    for (int d = 0; d <= other.cutoff; ++d) {
      long k = d + sh;
      if (k < 0 || k > cutoff) continue;
      coeffs[k] += factor * other.coeffs[d];
    }
  }

  bool operator==(const QSeries& o) const {
    return offset == o.offset && cutoff == o.cutoff && coeffs == o.coeffs;
  }
};

/// Restrict both series to their common window and compare coefficient-wise.
inline bool series_agree(const QSeries& a, const QSeries& b) {
  Rational lo = a.offset < b.offset ? a.offset : b.offset;
  Rational hi = a.top() < b.top() ? a.top() : b.top();
  if (!is_integer(a.offset - b.offset)) return false;
  for (Rational w = lo; w <= hi; w += 1)
    if (a.at_weight(w) != b.at_weight(w)) return false;
  return true;
}

inline QSeries series_sum(const QSeries& a, const QSeries& b) {
  Rational lo = a.offset < b.offset ? a.offset : b.offset;
  Rational hi = a.top() < b.top() ? a.top() : b.top();
  QSeries out = QSeries::zero(lo, static_cast<int>(to_long(hi - lo)));
  out.accumulate(a);
  out.accumulate(b);
  return out;
}

inline QSeries series_scale(QSeries a, const Rational& f) {
  for (auto& c : a.coeffs) c *= f;
  return a;
}

/// Partition numbers p(0..n).
inline std::vector<Integer> partition_numbers(int n) {
  std::vector<Integer> pn(n + 1, Integer(0));
  pn[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) pn[k] += pn[k - part];
  return pn;
}

inline QSeries verma_char(const Rational& h, int N) {
  if (N < 0) throw ParameterError("cutoff must be nonnegative");
  QSeries s = QSeries::zero(h, N);
  auto pn = partition_numbers(N);
  for (int d = 0; d <= N; ++d) s.coeffs[d] = Rational(pn[d]);
  return s;
}

inline QSeries fock_char(const Momentum& lam, const ModelParams& mp, int N) {
  return verma_char(weight_of(lam, mp), N);
}

/// ch L_{h_s(n)} = ch M_{h_s(n)} - ch M_{h_s(n+1)}.
inline QSeries irr_char(int p, int s, int n, int N) {
  if (s < 0 || s > p) throw ParameterError("irr_char needs 0 <= s <= p");
  Rational h0 = h_value(p, s, n), h1 = h_value(p, s, n + 1);
  QSeries out = verma_char(h0, N);
  long gap = to_long(h1 - h0);
  if (gap <= N) out.accumulate(verma_char(h1, N - static_cast<int>(gap)), Rational(-1));
  for (const auto& c : out.coeffs)
    if (c < 0) throw ConsistencyError("negative coefficient in an irreducible character");
  return out;
}

/// ch of V_s^{eps}: sum of Fock characters over the orbit, offset = lowest weight.
inline QSeries lattice_char(int p, int s, Sign eps, int N) {
  ModelParams mp(p);
  int t = lattice_orbit(p, s, eps);
  // the lowest weight of the orbit is attained within |n| <= 1
  Rational lo = weight_of(Momentum::lambda(p, t, 0), mp);
  for (long n : {-1L, 1L}) {
    Rational h = weight_of(Momentum::lambda(p, t, n), mp);
    if (h < lo) lo = h;
  }
  QSeries out = QSeries::zero(lo, N);
  for (const auto& lam : orbit_momenta(mp, t, lo + N)) {
    Rational h = weight_of(lam, mp);
    out.accumulate(verma_char(h, static_cast<int>(to_long(lo + N - h))));
  }
  return out;
}

/// ch of the simple module X_s^{eps}; X_p^- is the module built on the weights h_0(n).
inline QSeries wp_simple_char(int p, int s, Sign eps, int N) {
  if (s < 1 || s > p) throw ParameterError("wp_simple_char needs 1 <= s <= p");
  // (family s', first index, index step, multiplicity of the k-th term = first_mult + k)
  int fam = s;
  int first = 0, step = 2;
  long mult0 = 1;
  if (s == p) {
    fam = eps == Sign::plus ? p : 0;
    step = 1;
    mult0 = eps == Sign::plus ? 1 : 2;
  } else if (eps == Sign::minus) {
    first = 1;
    mult0 = 2;
  }
  Rational lo = h_value(p, fam, first);
  QSeries out = QSeries::zero(lo, N);
  for (long k = 0;; ++k) {
    int n = first + static_cast<int>(k) * step;
    Rational h = h_value(p, fam, n);
    if (h > lo + N) break;
    out.accumulate(irr_char(p, fam, n, static_cast<int>(to_long(lo + N - h))), Rational(mult0 + 2 * k));
  }
  return out;
}

/// ch P_s = ch V_s^+ + ch V_s^- (1 <= s <= p-1).
inline QSeries projective_char(int p, int s, int N) {
  if (s < 1 || s > p - 1) throw ParameterError("projective_char needs 1 <= s <= p-1");
  return series_sum(lattice_char(p, s, Sign::plus, N), lattice_char(p, s, Sign::minus, N));
}

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// The exact-sequence identities for one (p, s) at cutoff N.
inline std::vector<IdentityCheck> character_identities(int p, int s, int N) {
  std::vector<IdentityCheck> out;
  auto Xp = wp_simple_char(p, s, Sign::plus, N);
  auto Xm = wp_simple_char(p, s, Sign::minus, N);
  if (s < p) {
    auto Vp = lattice_char(p, s, Sign::plus, N);
    auto Vm = lattice_char(p, s, Sign::minus, N);
    out.push_back({"ch V+ = ch X- + ch X+", series_agree(Vp, series_sum(Xm, Xp))});
    out.push_back({"ch V- = ch X+ + ch X-", series_agree(Vm, series_sum(Xp, Xm))});
    auto P = projective_char(p, s, N);
    out.push_back({"ch P = 2 ch X+ + 2 ch X-",
                   series_agree(P, series_sum(series_scale(Xp, 2), series_scale(Xm, 2)))});
  } else {
    out.push_back({"ch V_p+ = ch X_p+", series_agree(lattice_char(p, p, Sign::plus, N), Xp)});
    out.push_back({"ch V_p- = ch X_p-", series_agree(lattice_char(p, p, Sign::minus, N), Xm)});
  }
  return out;
}

}  // namespace tqg
