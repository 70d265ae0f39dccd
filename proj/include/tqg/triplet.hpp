/**
 * @file triplet.hpp
 * @brief W(p) as the kernel of Q_- on the lattice module V_L, the fields W^a and their
 * zero modes, and Virasoro singular vectors inside Fock modules.
 */
#pragma once

#include <array>
#include <vector>

#include "tqg/fock.hpp"

namespace tqg {

/// Kernel dimension of Q_- : V_L -> V_1^+ at conformal weight d.
inline long wp_graded_dim(FockModel& fm, int d) {
  int p = fm.p();
  long total = 0;
  // sector F_{n alpha_+} has r = -n p and weight p n^2 - (p-1) n
  for (long n = -d - 1; n <= d + 1; ++n) {
    Rational r(-n * p);
    Rational lev = Rational(d) - fm.h(r);
    if (lev < 0) continue;
    int e = static_cast<int>(to_long(lev));
    const auto& q = fm.vertex(1, 0, r, e);
    total += fock_dim(e) - (q.rows() == 0 ? 0 : q.rank());
  }
  return total;
}

inline std::vector<long> wp_graded_profile(int p, int D) {
  FockModel fm(p);
  std::vector<long> out;
  for (int d = 0; d <= D; ++d) out.push_back(wp_graded_dim(fm, d));
  return out;
}

enum class WField { minus, zero, plus };

/// Weight-graded mode W^a[n]: W^- = V_{-alpha_+}, W^0[n] = [Q_+, W^-[n]], W^+[n] = [Q_+, W^0[n]].
inline FockState apply_w(FockModel& fm, WField a, int n, const FockState& s) {
  long m = fm.p();
  if (a == WField::minus) return fm.apply_vertex(m, n, s);
  WField inner = a == WField::zero ? WField::minus : WField::zero;
  FockState out = fm.qplus(apply_w(fm, inner, n, s));
  out.add(apply_w(fm, inner, n, fm.qplus(s)), Rational(-1));
  return out;
}

/// Zero modes of W^-, W^0, W^+ on the top space of X_s^-, basis |lambda_{-s}(0)>,
/// Q_+|lambda_{-s}(0)>. `invariant` records that the span is preserved.
struct ZeroModeData {
  int p = 0;
  int s = 0;
  std::array<Matrix<Rational>, 3> w;  // minus, zero, plus
  bool invariant = false;
  Rational beta;  // W^0[0] eigenvalue on |lambda_{-s}(0)>
};

inline ZeroModeData w_zero_modes(FockModel& fm, int s) {
  int p = fm.p();
  if (s < 1 || s > p - 1) throw ParameterError("w_zero_modes needs 1 <= s <= p-1");
  const ModelParams& mp = fm.params();
  Momentum top = Momentum::lambda(p, -s, 0);
  FockState v0 = FockState::basis_vector(top.r, 0, 0, mp);
  FockState v1 = fm.qplus(v0);
  if (v1.is_zero()) throw ConsistencyError("Q_+ kills |lambda_{-s}(0)>");
  ZeroModeData out;
  out.p = p;
  out.s = s;
  out.invariant = true;
  Momentum low = Momentum::lambda(p, -s, 1);
  WeightSpace ws = WeightSpace::build({top.r, low.r}, v0.weight, mp);
  auto c0 = ws.coords(v0), c1 = ws.coords(v1);
  Echelon<Rational> span(ws.dim);
  span.insert(to_sparse(c0));
  span.insert(to_sparse(c1));
  for (int a = 0; a < 3; ++a) {
    Matrix<Rational> m(2, 2);
    const FockState* in[2] = {&v0, &v1};
    for (int j = 0; j < 2; ++j) {
      auto img = ws.coords(apply_w(fm, static_cast<WField>(a), 0, *in[j]));
      auto sp = to_sparse(img);
      if (!span.contains(sp)) {
        out.invariant = false;
        continue;
      }
      // img = x c0 + y c1: kernel vector (x, y, -1) of the rows (c0_i, c1_i, img_i)
      std::vector<SparseVec<Rational>> rows;
      for (int i = 0; i < ws.dim; ++i) rows.push_back(to_sparse(std::vector<Rational>{c0[i], c1[i], img[i]}));
      for (const auto& kv : nullspace(rows, 3)) {
        Rational t = sparse_get(kv, 2);
        if (is_zero(t)) continue;
        m(0, j) = -sparse_get(kv, 0) / t;
        m(1, j) = -sparse_get(kv, 1) / t;
      }
    }
    out.w[a] = m;
  }
  out.beta = out.w[1](0, 0);
  return out;
}

/// eta_s: the level-s combination of L_{-mu_1} ... L_{-mu_k}|lambda_{-s}(1)> killed by L_1, L_2.
struct SingularVector {
  int p = 0;
  int s = 0;
  std::vector<Partition> words;
  std::vector<Rational> coeffs;  // normalized: first nonzero coefficient is 1
  int solution_dim = 0;
  FockState image;               // eta_s|lambda_{-s}(1)> in F_{lambda_{-s}(1)}[s]
  std::optional<Rational> ratio_to_qplus;  // image = ratio * Q_+|lambda_{-s}(0)>
};

inline FockState apply_word(FockModel& fm, const Partition& word, FockState v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = fm.apply_virasoro(-*it, v);
  return v;
}

inline SingularVector verma_singular_vector(FockModel& fm, int s) {
  int p = fm.p();
  if (s < 1 || s > p - 1) throw ParameterError("verma_singular_vector needs 1 <= s <= p-1");
  const ModelParams& mp = fm.params();
  Momentum lam = Momentum::lambda(p, -s, 1);
  FockState hw = FockState::basis_vector(lam.r, 0, 0, mp);
  SingularVector out;
  out.p = p;
  out.s = s;
  out.words = partitions_of(s);
  int k = static_cast<int>(out.words.size());
  std::vector<FockState> images;
  for (const auto& w : out.words) images.push_back(apply_word(fm, w, hw));
  // rows of the linear system: coordinates of L_1 and L_2 applied to each word image
  WeightSpace w1 = WeightSpace::build({lam.r}, hw.weight + s - 1, mp);
  WeightSpace w2 = WeightSpace::build({lam.r}, hw.weight + s - 2, mp);
  std::vector<SparseVec<Rational>> rows;
  std::vector<std::vector<Rational>> cols;
  for (const auto& img : images) {
    auto a = w1.coords(fm.apply_virasoro(1, img));
    auto b = s >= 2 ? w2.coords(fm.apply_virasoro(2, img)) : std::vector<Rational>{};
    a.insert(a.end(), b.begin(), b.end());
    cols.push_back(std::move(a));
  }
  int nr = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  for (int i = 0; i < nr; ++i) {
    SparseVec<Rational> row;
    for (int j = 0; j < k; ++j)
      if (!is_zero(cols[j][i])) row.emplace_back(j, cols[j][i]);
    rows.push_back(row);
  }
  auto ker = nullspace(rows, k);
  out.solution_dim = static_cast<int>(ker.size());
  if (out.solution_dim != 1)
    throw ConsistencyError("singular-vector solution space has dimension " + std::to_string(out.solution_dim));
  out.coeffs = to_dense(ker[0], k);
  Rational lead;
  for (const auto& c : out.coeffs)
    if (!is_zero(c)) {
      lead = c;
      break;
    }
  for (auto& c : out.coeffs) c /= lead;
  FockState v{hw.weight + s, {}};
  for (int j = 0; j < k; ++j) v.add(images[j], out.coeffs[j]);
  out.image = v;
  FockState q = fm.qplus(FockState::basis_vector(Momentum::lambda(p, -s, 0).r, 0, 0, mp));
  out.ratio_to_qplus = proportionality(v, q);
  return out;
}

/// Q_+^k applied to |lambda_s(n)>.
inline FockState qplus_power(FockModel& fm, int s, long n, int k) {
  FockState v = FockState::basis_vector(Momentum::lambda(fm.p(), s, n).r, 0, 0, fm.params());
  for (int i = 0; i < k; ++i) v = fm.qplus(v);
  return v;
}

/// True when every L_1 and L_2 image of v vanishes.
inline bool is_virasoro_singular(FockModel& fm, const FockState& v) {
  return fm.apply_virasoro(1, v).is_zero() && fm.apply_virasoro(2, v).is_zero();
}

}  // namespace tqg
