/**
 * @file log_module.hpp
 * @brief The logarithmic modules P_s^+ / P_s^- built on V_s^+ (+) V_s^- in the cases where
 * the deforming screening is single-contour.
 *
 * The deformed modes are L~_n = L_n + E_n with E_n the coefficient of z^{-n-1} of
 * V_{alpha_-}(z), applied only to the quotient summand (V_s^+ for sign +, V_s^- for
 * sign -) and landing in the other summand. L~_0 = L_0 + Q_-.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tqg/triplet.hpp"

namespace tqg {

class LogModuleModel {
 public:
  LogModuleModel(int p, int s, Sign sign, int D) : p_(p), s_(s), sign_(sign), D_(D), fm_(std::make_shared<FockModel>(p)) {
    if (s < 1 || s > p - 1) throw ParameterError("log module needs 1 <= s <= p-1");
    if (D < 1) throw ParameterError("log module truncation must be at least 1");
    int exponent = sign == Sign::plus ? p - s : s;
    if (exponent != 1)
      throw OutOfScope("P_" + std::to_string(s) + "^" + sign_char(sign) + " at p=" + std::to_string(p) +
                       " needs the " + std::to_string(exponent) +
                       "-fold screening (twisted-homology construction); only the single-contour case is built");
    const ModelParams& mp = fm_->params();
    quot_orbit_ = lattice_orbit(p, s, sign);
    sub_orbit_ = lattice_orbit(p, s, sign == Sign::plus ? Sign::minus : Sign::plus);
    lowest_ = h_value(p, s, 0);
    for (int t : {sub_orbit_, quot_orbit_})
      for (const auto& lam : orbit_momenta(mp, t, lowest_ + D)) {
        (t == sub_orbit_ ? sub_ : quot_).push_back(lam.r);
        if (weight_of(lam, mp) < lowest_) throw ConsistencyError("lattice module below its expected lowest weight");
      }
  }

  int p() const { return p_; }
  int s() const { return s_; }
  Sign sign() const { return sign_; }
  int truncation() const { return D_; }
  const Rational& lowest_weight() const { return lowest_; }
  FockModel& engine() const { return *fm_; }
  const ModelParams& params() const { return fm_->params(); }
  /// r lies in Lambda_t when r = (1-t)/2 - n p for an integer n.
  bool in_quotient(const Rational& r) const { return is_integer((make_rational(1 - quot_orbit_, 2) - r) / p_); }

  /// Weight space at lowest + k: sub-summand sectors first, then quotient sectors.
  WeightSpace weight_space(int k) const {
    WeightSpace a = WeightSpace::build(sub_, lowest_ + k, params());
    WeightSpace b = WeightSpace::build(quot_, lowest_ + k, params());
    for (auto sec : b.sectors) {
      sec.offset += a.dim;
      a.sectors.push_back(sec);
    }
    a.dim += b.dim;
    return a;
  }

  /// Dimension of the sub-summand part of weight_space(k).
  int sub_dim(int k) const { return WeightSpace::build(sub_, lowest_ + k, params()).dim; }

  /// Deformation term E_n on a state: only the quotient components are moved.
  FockState deformation(int n, const FockState& v) const {
    FockState q{v.weight, {}};
    for (const auto& [r, x] : v.parts)
      if (in_quotient(r)) q.parts.emplace(r, x);
    if (q.parts.empty()) return FockState{v.weight - n, {}};
    return fm_->apply_vertex(1, n, q);
  }

  FockState apply(int n, const FockState& v, bool deformed = true) const {
    FockState out = fm_->apply_virasoro(n, v);
    if (deformed) out.add(deformation(n, v));
    return out;
  }

  Matrix<Rational> mode_matrix(int n, int k, bool deformed = true) const {
    return weight_matrix(weight_space(k), weight_space(k - n), params(),
                         [&](const FockState& v) { return apply(n, v, deformed); });
  }

  /// L~_0 - (lowest + k) on weight space k.
  Matrix<Rational> nilpotent_part(int k) const {
    Matrix<Rational> m = mode_matrix(0, k);
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= lowest_ + k;
    return m;
  }

 private:
  int p_;
  int s_;
  Sign sign_;
  int D_;
  std::shared_ptr<FockModel> fm_;
  int quot_orbit_ = 0;
  int sub_orbit_ = 0;
  Rational lowest_;
  std::vector<Rational> sub_;
  std::vector<Rational> quot_;
};

inline LogModuleModel build_log_module(int p, int s, Sign sign, int D) { return LogModuleModel(p, s, sign, D); }

struct LogRelation {
  std::string name;
  bool holds = false;
  std::optional<Rational> scalar;  // the nonzero constant, when the relation is up to scalar
};

/// Relations of the top vectors under L~_0 in the built model.
inline std::vector<LogRelation> log_relations(const LogModuleModel& m) {
  std::vector<LogRelation> out;
  int p = m.p(), s = m.s();
  const ModelParams& mp = m.params();
  FockModel& fm = m.engine();
  auto shifted = [&](const FockState& v, const Rational& h) {
    FockState w = m.apply(0, v);
    w.add(v, -h);
    return w;
  };
  Rational h0 = h_value(p, s, 0), h1 = h_value(p, s, 1);
  if (m.sign() == Sign::plus) {
    FockState top = FockState::basis_vector(Momentum::lambda(p, -s, 1).r, 0, 0, mp);
    FockState img = shifted(top, h0);
    FockState target = FockState::basis_vector(Momentum::lambda(p, s, 0).r, 0, 0, mp);
    auto c = proportionality(img, target);
    out.push_back({"(L0 - h_s(0))|lambda_{-s}(1)> = c |lambda_s(0)>", c.has_value(), c});
    out.push_back({"(L0 - h_s(0))^2 |lambda_{-s}(1)> = 0", shifted(img, h0).is_zero(), std::nullopt});
    if (s == 1) {
      // Delta(eta_1) = E_{-1}; its Q_+ image lands on |lambda_s(1)>
      FockState e = m.deformation(-1, top);
      FockState q = fm.qplus(e);
      FockState t1 = FockState::basis_vector(Momentum::lambda(p, s, 1).r, 0, 0, mp);
      auto c2 = proportionality(q, t1);
      out.push_back({"Q_+ Delta(eta_s)|lambda_{-s}(1)> = c |lambda_s(1)>", c2.has_value(), c2});
    }
  } else {
    FockState a = FockState::basis_vector(Momentum::lambda(p, s, 0).r, 0, 0, mp);
    out.push_back({"(L0 - h_s(0))|lambda_s(0)> = 0", shifted(a, h0).is_zero(), std::nullopt});
    FockState b = FockState::basis_vector(Momentum::lambda(p, s, 1).r, 0, 0, mp);
    FockState img = shifted(b, h1);
    FockState target = fm.qplus(FockState::basis_vector(Momentum::lambda(p, -s, 0).r, 0, 0, mp));
    auto c = proportionality(img, target);
    out.push_back({"(L0 - h_s(1))|lambda_s(1)> = c Q_+|lambda_{-s}(0)>", c.has_value(), c});
    out.push_back({"(L0 - h_s(1))^2 |lambda_s(1)> = 0", shifted(img, h1).is_zero(), std::nullopt});
  }
  return out;
}

/// Largest n with (L~_0 - h)^n != 0 on one of the weight spaces k = k_lo..k_hi.
inline int jordan_length(const LogModuleModel& m, int k_lo, int k_hi, bool deformed = true) {
  int best = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    Matrix<Rational> n = deformed ? m.nilpotent_part(k) : m.mode_matrix(0, k, false);
    if (!deformed)
      for (int i = 0; i < n.rows(); ++i) n(i, i) -= m.lowest_weight() + k;
    Matrix<Rational> pw = n;
    int len = 0;
    while (!pw.is_zero() && len <= n.rows()) {
      ++len;
      pw = pw * n;
    }
    best = std::max(best, len);
  }
  return best;
}

/// Checks [L~_m, L~_n] = (m-n) L~_{m+n} + c/12 (m^3-m) delta_{m+n,0} on weight spaces 0..k_hi.
inline bool deformed_virasoro_relations(const LogModuleModel& mod, int max_mode, int k_hi, bool deformed = true) {
  Rational c = mod.params().central_charge;
  for (int k = 0; k <= k_hi; ++k) {
    WeightSpace ws = mod.weight_space(k);
    for (int i = 0; i < ws.dim; ++i) {
      FockState v = ws.basis_state(i, mod.params());
      for (int a = -max_mode; a <= max_mode; ++a)
        for (int b = -max_mode; b <= max_mode; ++b) {
          FockState lhs = mod.apply(a, mod.apply(b, v, deformed), deformed);
          lhs.add(mod.apply(b, mod.apply(a, v, deformed), deformed), Rational(-1));
          FockState rhs = mod.apply(a + b, v, deformed).scaled(Rational(a - b));
          if (a + b == 0) rhs.add(v, c / 12 * (Rational(a) * a * a - a));
          lhs.add(rhs, Rational(-1));
          if (!lhs.is_zero()) return false;
        }
    }
  }
  return true;
}

/// The sub-summand to quotient block vanishes and the diagonal blocks are the undeformed modes.
inline bool block_triangular(const LogModuleModel& mod, int max_mode, int k_hi) {
  for (int k = 0; k <= k_hi; ++k)
    for (int n = -max_mode; n <= max_mode; ++n) {
      if (k - n < 0) continue;
      Matrix<Rational> def = mod.mode_matrix(n, k), plain = mod.mode_matrix(n, k, false);
      int src_sub = mod.sub_dim(k), dst_sub = mod.sub_dim(k - n);
      for (int i = 0; i < def.rows(); ++i)
        for (int j = 0; j < def.cols(); ++j) {
          bool i_sub = i < dst_sub, j_sub = j < src_sub;
          if (!i_sub && j_sub && !is_zero(def(i, j))) return false;
          if (i_sub == j_sub && def(i, j) != plain(i, j)) return false;
        }
    }
  return true;
}

}  // namespace tqg
