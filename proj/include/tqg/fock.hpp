/**
 * @file fock.hpp
 * @brief Graded Fock modules F_lambda of one free boson, the Virasoro modes, vertex
 * operator modes and the screening charges.
 *
 * Internally the modes are rescaled, b(n) = a(n) / alpha_-, so that every matrix entry is
 * rational: [b(m), b(n)] = (p/2) m delta_{m+n,0} and b(0) acts on F_lambda by r, where
 * lambda = r alpha_-. The level-d basis of F_lambda is b(-nu_1) ... b(-nu_k)|lambda> for
 * the partitions nu of d, in reverse-lex order ([3], [2,1], [1,1,1]). FockVector::a_basis
 * converts to the a(-n) monomial basis.
 */
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tqg/linalg.hpp"
#include "tqg/weights.hpp"

namespace tqg {

using Partition = std::vector<int>;

namespace detail {

inline void partitions_rec(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(rest, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(rest - k, k, cur, out);
    cur.pop_back();
  }
}

struct PartitionCache {
  std::mutex mu;
  std::map<int, std::vector<Partition>> lists;
  std::map<int, std::map<Partition, int>> index;
};

inline PartitionCache& partition_cache() {
  static PartitionCache cache;
  return cache;
}

}  // namespace detail

/// Partitions of d in reverse-lex order.
inline const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw ParameterError("partitions of a negative integer");
  auto& c = detail::partition_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.lists.find(d);
  if (it != c.lists.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  detail::partitions_rec(d, d, cur, out);
  auto& idx = c.index[d];
  for (int i = 0; i < static_cast<int>(out.size()); ++i) idx[out[i]] = i;
  return c.lists.emplace(d, std::move(out)).first->second;
}

inline int partition_index(const Partition& nu) {
  int d = 0;
  for (int k : nu) d += k;
  partitions_of(d);
  auto& c = detail::partition_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  return c.index.at(d).at(nu);
}

inline int fock_dim(int d) { return d < 0 ? 0 : static_cast<int>(partitions_of(d).size()); }

inline std::string partition_str(const Partition& nu) {
  std::string s = "[";
  for (size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu[i]);
  return s + "]";
}

/// Polynomial in the creation variables x_n = b(-n).
using FockPoly = std::map<Partition, Rational>;

inline Partition merge_parts(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<int>());
  return out;
}

inline void poly_add(FockPoly& acc, const Partition& mono, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = acc.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

/// b(k) on one monomial of F_r; k > 0 differentiates, k < 0 multiplies, b(0) = r.
inline FockPoly apply_b(int k, const Partition& mono, const Rational& r, int p) {
  FockPoly out;
  if (k == 0) {
    poly_add(out, mono, r);
  } else if (k < 0) {
    poly_add(out, merge_parts(mono, Partition{-k}), Rational(1));
  } else {
    long count = std::count(mono.begin(), mono.end(), k);
    if (count == 0) return out;
    Partition rest = mono;
    rest.erase(std::find(rest.begin(), rest.end(), k));
    poly_add(out, rest, Rational(count * k) * make_rational(p, 2));
  }
  return out;
}

inline FockPoly apply_b(int k, const FockPoly& v, const Rational& r, int p) {
  FockPoly out;
  for (const auto& [mono, c] : v)
    for (const auto& [m2, c2] : apply_b(k, mono, r, p)) poly_add(out, m2, c * c2);
  return out;
}

inline std::vector<Rational> poly_to_coords(const FockPoly& v, int d) {
  std::vector<Rational> out(fock_dim(d), Rational(0));
  for (const auto& [mono, c] : v) out[partition_index(mono)] = c;
  return out;
}

/// Matrix of L_n : F_lambda[d] -> F_lambda[d-n], from
/// L_n = (1/2) sum_k :a(k) a(n-k): - (alpha_0 / 2)(n+1) a(n).
inline Matrix<Rational> virasoro_mode(int n, const Momentum& lam, int d, const ModelParams& mp) {
  int p = mp.p;
  int d_out = d - n;
  Matrix<Rational> m(fock_dim(d_out), fock_dim(d));
  if (d_out < 0 || d < 0) return m;
  Rational kappa = make_rational(2, p);
  Rational half_k = kappa / 2;
  Rational lin = -Rational(1 - p) * kappa / 2 * (n + 1);
  const auto& basis = partitions_of(d);
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    FockPoly v{{basis[col], Rational(1)}}, acc;
    int bound = std::abs(n) + d + 1;
    for (int k = -bound; k <= bound; ++k) {
      int lo = std::min(k, n - k), hi = std::max(k, n - k);
      if (hi > d) continue;
      for (const auto& [mono, c] : apply_b(lo, apply_b(hi, v, lam.r, p), lam.r, p)) poly_add(acc, mono, half_k * c);
    }
    if (!is_zero(lin))
      for (const auto& [mono, c] : apply_b(n, v, lam.r, p)) poly_add(acc, mono, lin * c);
    for (const auto& [mono, c] : acc) m(partition_index(mono), col) = c;
  }
  return m;
}

/// mu . lambda for mu = m alpha_-, lambda = r alpha_-.
inline Rational vertex_exponent(long m, const Momentum& lam, int p) { return Rational(m) * lam.r * make_rational(2, p); }

/// Creation factor exp(m kappa sum_n x_n z^n / n): coefficient of z^i.
inline FockPoly creation_series(long m, int i, int p) {
  FockPoly out;
  Rational mk = Rational(m) * make_rational(2, p);
  for (const auto& nu : partitions_of(i)) {
    Rational c(1);
    for (size_t a = 0; a < nu.size();) {
      size_t b = a;
      while (b < nu.size() && nu[b] == nu[a]) ++b;
      int mult = static_cast<int>(b - a);
      Rational base = mk / nu[a];
      c *= rational_pow(base, mult);
      Integer f(1);
      for (int j = 2; j <= mult; ++j) f *= j;
      c /= Rational(f);
      a = b;
    }
    poly_add(out, nu, c);
  }
  return out;
}

/// The part of V_mu(z), mu = m alpha_-, taking F_lambda[d] to F_{lambda+mu}[d_out]; it is
/// the coefficient of z^{mu.lambda + d_out - d}.
inline Matrix<Rational> vertex_block(long m, const Momentum& lam, int d, int d_out, int p) {
  Rational e = vertex_exponent(m, lam, p);
  if (!is_integer(e))
    throw OutOfScope("vertex mode with non-integral mu.lambda = " + e.get_str() +
                     ": requires multi-contour screening, out of scope");
  Matrix<Rational> out(fock_dim(d_out), fock_dim(d));
  if (d < 0 || d_out < 0) return out;
  int delta = d_out - d;
  const auto& basis = partitions_of(d);
  std::map<int, FockPoly> creation;
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    const Partition& nu = basis[col];
    int len = static_cast<int>(nu.size());
    FockPoly acc;
    // x_n -> x_n - m z^{-n}: every subset J of the factors is replaced by its shift
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      int j = 0, cnt = 0;
      Partition kept;
      for (int t = 0; t < len; ++t) {
        if (mask & (1u << t)) {
          j += nu[t];
          ++cnt;
        } else {
          kept.push_back(nu[t]);
        }
      }
      int i = j + delta;
      if (i < 0) continue;
      Rational coef = cnt % 2 ? -rational_pow(Rational(m), cnt) : rational_pow(Rational(m), cnt);
      auto it = creation.find(i);
      if (it == creation.end()) it = creation.emplace(i, creation_series(m, i, p)).first;
      for (const auto& [mono, c] : it->second) poly_add(acc, merge_parts(kept, mono), coef * c);
    }
    for (const auto& [mono, c] : acc) out(partition_index(mono), col) = c;
  }
  return out;
}

/// Conformal weight of V_mu, mu = m alpha_-.
inline Rational vertex_weight(long m, const ModelParams& mp) { return weight_of(Momentum::from_r(Rational(m)), mp); }

/// Output level of the weight-graded mode V_mu[n] (coefficient of z^{-n-h_mu}) on F_lambda[d].
inline Rational vertex_target_level(long m, int n, const Momentum& lam, int d, const ModelParams& mp) {
  return Rational(d - n) - vertex_weight(m, mp) - vertex_exponent(m, lam, mp.p);
}

/// V_mu[n] : F_lambda[d] -> F_{lambda+mu}[d - n - h_mu - mu.lambda]; the mode changes
/// the conformal weight by -n. Returns a 0-row matrix when the target level is negative.
inline Matrix<Rational> vertex_mode(long m, int n, const Momentum& lam, int d, const ModelParams& mp) {
  Rational e = vertex_exponent(m, lam, mp.p);
  if (!is_integer(e))
    throw OutOfScope("vertex mode with non-integral mu.lambda = " + e.get_str() +
                     ": requires multi-contour screening, out of scope");
  Rational t = vertex_target_level(m, n, lam, d, mp);
  if (!is_integer(t)) throw ParameterError("vertex mode does not land on an integer level");
  long d_out = to_long(t);
  if (d_out < 0) return Matrix<Rational>(0, fock_dim(d));
  return vertex_block(m, lam, d, static_cast<int>(d_out), mp.p);
}

/// Per-level matrices F_source[d] -> F_target[d + shift] for d = 0..D.
struct GradedOperator {
  Momentum source;
  Momentum target;
  int shift = 0;
  std::vector<Matrix<Rational>> blocks;

  int truncation() const { return static_cast<int>(blocks.size()) - 1; }
  const Matrix<Rational>& at(int d) const { return blocks.at(d); }
};

/// B after A; requires A.target == B.source.
inline GradedOperator compose(const GradedOperator& b, const GradedOperator& a) {
  if (a.target != b.source) throw ParameterError("graded operators compose only on matching momenta");
  GradedOperator out{a.source, b.target, a.shift + b.shift, {}};
  for (int d = 0; d <= a.truncation(); ++d) {
    int mid = d + a.shift;
    if (mid < 0) {
      out.blocks.emplace_back(fock_dim(mid + b.shift), fock_dim(d));
      continue;
    }
    if (mid > b.truncation()) break;
    out.blocks.push_back(b.at(mid) * a.at(d));
  }
  return out;
}

inline GradedOperator screening(long m, const Momentum& lam, int D, const ModelParams& mp) {
  Rational e = vertex_exponent(m, lam, mp.p);
  if (!is_integer(e))
    throw OutOfScope("screening on lambda with non-integral mu.lambda = " + e.get_str() +
                     " requires multi-contour screening (twisted cycles), out of scope");
  GradedOperator op{lam, lam + Momentum::from_r(Rational(m)), static_cast<int>(-1 - to_long(e)), {}};
  for (int d = 0; d <= D; ++d) op.blocks.push_back(vertex_mode(m, 0, lam, d, mp));
  return op;
}

/// Q_+ = residue of V_{alpha_+}(z) as a graded map F_lambda -> F_{lambda+alpha_+}.
inline GradedOperator screening_qplus(const Momentum& lam, int D, const ModelParams& mp) {
  return screening(-mp.p, lam, D, mp);
}

/// Q_- = residue of V_{alpha_-}(z); only the single-contour case alpha_- . lambda in Z.
inline GradedOperator screening_qminus(const Momentum& lam, int D, const ModelParams& mp) {
  return screening(1, lam, D, mp);
}

/// Element of F_lambda[level] in the rescaled monomial basis.
struct FockVector {
  Momentum lam;
  int level = 0;
  std::map<Partition, Rational> coeffs;

  static FockVector from_coords(const Momentum& lam, int level, const std::vector<Rational>& v) {
    FockVector out{lam, level, {}};
    const auto& basis = partitions_of(level);
    for (size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) out.coeffs[basis[i]] = v[i];
    return out;
  }

  std::vector<Rational> coords() const { return poly_to_coords(coeffs, level); }

  /// Coefficients on a(-nu_1) ... a(-nu_k)|lambda>: b(-n) = a(-n) / alpha_-.
  std::map<Partition, QuadExt> a_basis(const ModelParams& mp) const {
    std::map<Partition, QuadExt> out;
    QuadExt inv = mp.alpha_minus.inverse();
    for (const auto& [nu, c] : coeffs) {
      QuadExt f(c);
      for (size_t i = 0; i < nu.size(); ++i) f *= inv;
      out.emplace(nu, f);
    }
    return out;
  }
};

/// Weight-homogeneous element of a direct sum of Fock modules: for each momentum r the
/// component lives at level weight - h_r.
struct FockState {
  Rational weight;
  std::map<Rational, std::vector<Rational>> parts;

  static FockState basis_vector(const Rational& r, int level, int index, const ModelParams& mp) {
    FockState s{weight_of(Momentum::from_r(r), mp) + level, {}};
    std::vector<Rational> v(fock_dim(level), Rational(0));
    v.at(index) = 1;
    s.parts.emplace(r, std::move(v));
    return s;
  }

  bool is_zero() const {
    for (const auto& [r, v] : parts)
      for (const auto& x : v)
        if (!detail::scalar_is_zero(x)) return false;
    return true;
  }

  void prune() {
    for (auto it = parts.begin(); it != parts.end();) {
      bool zero = true;
      for (const auto& x : it->second) zero = zero && detail::scalar_is_zero(x);
      it = zero ? parts.erase(it) : std::next(it);
    }
  }

  void add(const FockState& o, const Rational& f = Rational(1)) {
    if (o.is_zero()) return;
    if (!is_zero() && o.weight != weight) throw ParameterError("adding states of different weight");
    if (is_zero()) weight = o.weight;
    for (const auto& [r, v] : o.parts) {
      auto& mine = parts[r];
      if (mine.empty()) mine.assign(v.size(), Rational(0));
      for (size_t i = 0; i < v.size(); ++i) mine[i] += f * v[i];
    }
    prune();
  }

  FockState scaled(const Rational& f) const {
    FockState out{weight, {}};
    out.add(*this, f);
    return out;
  }
};

/// Caching front end for one value of p; safe to share between threads.
class FockModel {
 public:
  explicit FockModel(int p) : mp_(p) {}

  const ModelParams& params() const { return mp_; }
  int p() const { return mp_.p; }
  Rational h(const Rational& r) const { return weight_of(Momentum::from_r(r), mp_); }

  const Matrix<Rational>& virasoro(int n, const Rational& r, int d) {
    auto key = std::make_tuple(n, r, d);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = vir_.find(key);
      if (it != vir_.end()) return it->second;
    }
    Matrix<Rational> m = virasoro_mode(n, Momentum::from_r(r), d, mp_);
    std::lock_guard<std::mutex> lock(mu_);
    return vir_.emplace(key, std::move(m)).first->second;
  }

  const Matrix<Rational>& vertex(long m, int n, const Rational& r, int d) {
    auto key = std::make_tuple(m, n, r, d);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = vert_.find(key);
      if (it != vert_.end()) return it->second;
    }
    Matrix<Rational> mat = vertex_mode(m, n, Momentum::from_r(r), d, mp_);
    std::lock_guard<std::mutex> lock(mu_);
    return vert_.emplace(key, std::move(mat)).first->second;
  }

  FockState apply_virasoro(int n, const FockState& s) {
    FockState out{s.weight - n, {}};
    for (const auto& [r, v] : s.parts) {
      int d = level_of(r, s.weight);
      if (d - n < 0) continue;
      out.parts.emplace(r, virasoro(n, r, d).apply(v));
    }
    out.prune();
    return out;
  }

  /// Weight-graded mode n of V_{m alpha_-}.
  FockState apply_vertex(long m, int n, const FockState& s) {
    FockState out{s.weight - n, {}};
    for (const auto& [r, v] : s.parts) {
      int d = level_of(r, s.weight);
      const auto& mat = vertex(m, n, r, d);
      if (mat.rows() == 0) continue;
      auto w = mat.apply(v);
      auto& slot = out.parts[r + m];
      if (slot.empty()) slot.assign(w.size(), Rational(0));
      for (size_t i = 0; i < w.size(); ++i) slot[i] += w[i];
    }
    out.prune();
    return out;
  }

  FockState qplus(const FockState& s) { return apply_vertex(-mp_.p, 0, s); }
  FockState qminus(const FockState& s) { return apply_vertex(1, 0, s); }

  /// Level of momentum r inside a state of the given weight.
  int level_of(const Rational& r, const Rational& weight) const { return static_cast<int>(to_long(weight - h(r))); }

 private:
  ModelParams mp_;
  std::mutex mu_;
  std::map<std::tuple<int, Rational, int>, Matrix<Rational>> vir_;
  std::map<std::tuple<long, int, Rational, int>, Matrix<Rational>> vert_;
};

/// Ordered basis of the weight-w subspace of a sum of Fock modules.
struct WeightSpace {
  struct Sector {
    Rational r;
    int level;
    int offset;
  };
  Rational weight;
  std::vector<Sector> sectors;
  int dim = 0;

  static WeightSpace build(const std::vector<Rational>& momenta, const Rational& w, const ModelParams& mp) {
    WeightSpace ws{w, {}, 0};
    for (const auto& r : momenta) {
      Rational lev = w - weight_of(Momentum::from_r(r), mp);
      if (!is_integer(lev) || lev < 0) continue;
      int d = static_cast<int>(to_long(lev));
      ws.sectors.push_back({r, d, ws.dim});
      ws.dim += fock_dim(d);
    }
    return ws;
  }

  FockState basis_state(int i, const ModelParams& mp) const {
    for (const auto& sec : sectors)
      if (i < sec.offset + fock_dim(sec.level)) return FockState::basis_vector(sec.r, sec.level, i - sec.offset, mp);
    throw ParameterError("weight-space index out of range");
  }

  /// Coordinates of s; throws if s has a component outside this space.
  std::vector<Rational> coords(const FockState& s) const {
    std::vector<Rational> out(dim, Rational(0));
    if (s.is_zero()) return out;
    if (s.weight != weight) throw ParameterError("state weight differs from the weight space");
    for (const auto& [r, v] : s.parts) {
      auto it = std::find_if(sectors.begin(), sectors.end(), [&](const Sector& x) { return x.r == r; });
      if (it == sectors.end()) throw ConsistencyError("state leaves the chosen sum of Fock modules");
      for (size_t i = 0; i < v.size(); ++i) out[it->offset + i] = v[i];
    }
    return out;
  }
};

/// Matrix of an operator between weight spaces, built by applying it to basis states.
template <class Op>
Matrix<Rational> weight_matrix(const WeightSpace& from, const WeightSpace& to, const ModelParams& mp, Op&& op) {
  Matrix<Rational> m(to.dim, from.dim);
  for (int j = 0; j < from.dim; ++j) {
    auto col = to.coords(op(from.basis_state(j, mp)));
    for (int i = 0; i < to.dim; ++i) m(i, j) = col[i];
  }
  return m;
}

/// True when u and v are both nonzero and proportional.
inline std::optional<Rational> proportionality(const FockState& u, const FockState& v) {
  if (u.is_zero() || v.is_zero() || u.weight != v.weight) return std::nullopt;
  std::optional<Rational> ratio;
  std::map<Rational, std::vector<Rational>> all = u.parts;
  for (const auto& [r, x] : v.parts) all.emplace(r, std::vector<Rational>(x.size(), Rational(0)));
  for (const auto& [r, _] : all) {
    auto iu = u.parts.find(r), iv = v.parts.find(r);
    size_t n = iu != u.parts.end() ? iu->second.size() : iv->second.size();
    for (size_t i = 0; i < n; ++i) {
      Rational a = iu != u.parts.end() ? iu->second[i] : Rational(0);
      Rational b = iv != v.parts.end() ? iv->second[i] : Rational(0);
      if (is_zero(a) != is_zero(b)) return std::nullopt;
      if (is_zero(a)) continue;
      Rational q = a / b;
      if (ratio && *ratio != q) return std::nullopt;
      ratio = q;
    }
  }
  return ratio;
}

}  // namespace tqg
