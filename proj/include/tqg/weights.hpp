/**
 * @file weights.hpp
 * @brief Lattice data for the free-field realization at level p: the constants
 * alpha_+, alpha_-, alpha_0, momenta in the dual lattice, conformal weights
 * h_lambda and the table h_s(n).
 *
 * Momenta are stored as lambda = r * alpha_-; every lambda in the dual lattice has
 * r in (1/2)Z, and lambda_s(n) has r = (1-s)/2 - n p.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tqg/quad_ext.hpp"
#include "tqg/rational.hpp"

namespace tqg {

struct ModelParams {
  int p = 2;
  QuadExt alpha_plus;
  QuadExt alpha_minus;
  QuadExt alpha_zero;
  Rational central_charge;

  explicit ModelParams(int p_) : p(p_) {
    if (p < 2) throw ParameterError("p must be at least 2");
    alpha_plus = QuadExt::root(p);
    alpha_minus = QuadExt(0, make_rational(-1, p), p);
    alpha_zero = alpha_plus + alpha_minus;
    central_charge = 13 - 6 * (Rational(p) + make_rational(1, p));
    if (alpha_plus * alpha_minus != QuadExt(-2) || alpha_plus != QuadExt(-p) * alpha_minus)
      throw ConsistencyError("lattice constants violate alpha_+ alpha_- = -2");
  }
};

struct OrbitTag {
  int s = 0;
  long n = 0;
};

struct Momentum {
  Rational r;  // lambda = r * alpha_-
  std::optional<OrbitTag> tag;

  static Momentum from_r(const Rational& r) { return Momentum{r, std::nullopt}; }

  /// lambda_s(n) = (1-s)/2 alpha_- + n alpha_+.
  static Momentum lambda(int p, int s, long n) {
    Momentum m;
    m.r = make_rational(1 - s, 2) - Rational(n * p);
    m.tag = OrbitTag{s, n};
    return m;
  }

  QuadExt value(const ModelParams& mp) const { return QuadExt(r) * mp.alpha_minus; }

  Momentum operator+(const Momentum& o) const { return from_r(r + o.r); }
  Momentum operator-(const Momentum& o) const { return from_r(r - o.r); }
  bool operator==(const Momentum& o) const { return r == o.r; }
  bool operator!=(const Momentum& o) const { return r != o.r; }
  bool operator<(const Momentum& o) const { return r < o.r; }

  std::string str() const {
    std::string s = "(" + r.get_str() + ")*alpha_-";
    if (tag) s += " [lambda_" + std::to_string(tag->s) + "(" + std::to_string(tag->n) + ")]";
    return s;
  }
};

/// Momenta of the screening currents and of W^-.
inline Momentum alpha_plus_momentum(int p) { return Momentum::from_r(Rational(-p)); }
inline Momentum alpha_minus_momentum() { return Momentum::from_r(Rational(1)); }

/// Inner product lambda . mu, always rational on the dual lattice.
inline Rational dot(const Momentum& a, const Momentum& b, int p) { return a.r * b.r * make_rational(2, p); }

/// h_mu = (1/2)(mu - alpha_0/2)^2 - alpha_0^2/8, evaluated in Q(sqrt(2p)).
inline Rational weight_of(const Momentum& m, const ModelParams& mp) {
  QuadExt mu = m.value(mp);
  QuadExt half_a0 = mp.alpha_zero * QuadExt(make_rational(1, 2));
  QuadExt d = mu - half_a0;
  QuadExt h = QuadExt(make_rational(1, 2)) * d * d - QuadExt(make_rational(1, 8)) * mp.alpha_zero * mp.alpha_zero;
  return h.rational_value();
}

/// Orbit representative realizing h_s(n), as in the weight table.
inline Momentum h_representative(int p, int s, long n) {
  if (s < 0 || s > p || n < 0) throw ParameterError("h_s(n) needs 0 <= s <= p, n >= 0");
  if (s == p) return Momentum::lambda(p, p, n);
  if (s == 0) return Momentum::lambda(p, 0, -n);
  if (n % 2 == 0) return Momentum::lambda(p, s, -(n / 2));
  return Momentum::lambda(p, s, (n - 1) / 2 + 1);
}

/// h_s(n) from the closed form for each family.
inline Rational h_value(int p, int s, long n) {
  if (s < 0 || s > p || n < 0) throw ParameterError("h_s(n) needs 0 <= s <= p, n >= 0");
  Integer num;
  Integer pm1 = p - 1;
  if (s == p) {
    Integer a = 2 * n * p;
    num = a * a - pm1 * pm1;
  } else if (s == 0) {
    Integer a = (2 * n + 1) * p;
    num = a * a - pm1 * pm1;
  } else {
    long m = n / 2;
    Integer a = (2 * m + 1) * p + (n % 2 == 0 ? -s : s);
    num = a * a - pm1 * pm1;
  }
  Rational h(num, Integer(4 * p));
  h.canonicalize();
  return h;
}

/// Which orbit a lattice module is built from.
enum class Sign { plus, minus };

inline char sign_char(Sign e) { return e == Sign::plus ? '+' : '-'; }

/// Orbit label t with Lambda_t summed in V_s^{eps}: V_s^+ uses Lambda_{-s}, V_s^- uses
/// Lambda_s for s < p; V_p^+ uses Lambda_p and V_p^- uses Lambda_0.
inline int lattice_orbit(int p, int s, Sign eps) {
  if (s < 1 || s > p) throw ParameterError("lattice module needs 1 <= s <= p");
  if (s == p) return eps == Sign::plus ? p : 0;
  return eps == Sign::plus ? -s : s;
}

/// Momenta lambda_t(n) of the orbit with weight at most max_weight, sorted by weight then r.
inline std::vector<Momentum> orbit_momenta(const ModelParams& mp, int t, const Rational& max_weight) {
  std::vector<Momentum> out;
  // weights grow quadratically in |n|; scan outward until both sides exceed the bound
  for (long n = 0;; ++n) {
    bool any = false;
    for (long m : {n, -n - 1}) {
      Momentum lam = Momentum::lambda(mp.p, t, m);
      if (weight_of(lam, mp) <= max_weight) {
        out.push_back(lam);
        any = true;
      }
    }
    if (!any && n > 2) break;
  }
  std::sort(out.begin(), out.end(), [&](const Momentum& a, const Momentum& b) {
    Rational ha = weight_of(a, mp), hb = weight_of(b, mp);
    return ha != hb ? ha < hb : a.r < b.r;
  });
  return out;
}

class WeightTable {
 public:
  WeightTable(int p, int n_max) : p_(p), n_max_(n_max), mp_(p) {
    if (n_max < 1) throw ParameterError("weight table needs n_max >= 1");
    table_.assign(p + 1, std::vector<Rational>(n_max + 1));
    for (int s = 0; s <= p; ++s)
      for (int n = 0; n <= n_max; ++n) table_[s][n] = h_value(p, s, n);
    validate_();
  }

  int p() const { return p_; }
  int n_max() const { return n_max_; }
  const Rational& h(int s, int n) const { return table_.at(s).at(n); }

  /// H_s^+ / H_s^- up to n_max (H_p = H_p^+, H_0 = H_p^-).
  std::vector<Rational> H(int s, Sign eps) const {
    std::vector<Rational> out;
    if (s == p_ || s == 0) {
      if ((s == p_) != (eps == Sign::plus)) return out;
      return table_[s];
    }
    for (int n = eps == Sign::plus ? 0 : 1; n <= n_max_; n += 2) out.push_back(table_[s][n]);
    return out;
  }

  /// The 2p lowest values, ordered h_{p-1}(1) > ... > h_1(1) > h_0(0) > h_1(0) > ... > h_p(0).
  std::vector<Rational> ordered_chain() const {
    std::vector<Rational> out;
    for (int s = p_ - 1; s >= 1; --s) out.push_back(table_[s][1]);
    out.push_back(table_[0][0]);
    for (int s = 1; s <= p_; ++s) out.push_back(table_[s][0]);
    return out;
  }

 private:
  void validate_() const {
    for (int s = 0; s <= p_; ++s)
      for (int n = 0; n <= n_max_; ++n) {
        if (weight_of(h_representative(p_, s, n), mp_) != table_[s][n])
          throw ConsistencyError("h_s(n) disagrees with its orbit representative");
        if (n > 0) {
          Rational gap = table_[s][n] - table_[s][n - 1];
          if (!is_integer(gap) || gap < 1) throw ConsistencyError("h_s(n) gaps must be positive integers");
        }
      }
    auto chain = ordered_chain();
    for (size_t i = 1; i < chain.size(); ++i)
      if (!(chain[i - 1] > chain[i])) throw ConsistencyError("lowest weights violate the expected ordering");
    for (int s = 0; s <= p_; ++s)
      for (int t = s + 1; t <= p_; ++t)
        for (const auto& a : table_[s])
          for (const auto& b : table_[t])
            if (a == b) throw ConsistencyError("weight sets H_s overlap");
  }

  int p_;
  int n_max_;
  ModelParams mp_;
  std::vector<std::vector<Rational>> table_;
};

}  // namespace tqg
