/**
 * @file fdalg.hpp
 * @brief Finite-dimensional associative algebras given by structure constants, and
 * their module theory: radical, semisimple quotient, primitive idempotents, projective
 * covers and simple tops, Hom and Ext^1, Cartan matrices, blocks, endomorphism
 * algebras and the eight-dimensional basic-algebra witness.
 *
 * The scalar type T is Rational or Cyclo; `param` is passed to the field hooks.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tqg/linalg.hpp"
#include "tqg/poly.hpp"

namespace tqg {

template <class T>
class Algebra {
 public:
  Algebra() = default;
  Algebra(int n, int param) : n_(n), param_(param), table_(static_cast<size_t>(n) * n) {
    for (int i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i));
  }

  int dim() const { return n_; }
  int param() const { return param_; }
  const std::string& label(int i) const { return labels_[i]; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  void set_product(int i, int j, SparseVec<T> v) { table_[static_cast<size_t>(i) * n_ + j] = std::move(v); }
  const SparseVec<T>& product(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }

  void set_unit(SparseVec<T> u) { unit_ = std::move(u); }
  const SparseVec<T>& unit() const { return unit_; }
  void set_generators(std::vector<SparseVec<T>> g) { gens_ = std::move(g); }
  const std::vector<SparseVec<T>>& generators() const { return gens_; }

  SparseVec<T> basis(int i) const { return {{i, T(1)}}; }

  SparseVec<T> mul(const SparseVec<T>& x, const SparseVec<T>& y) const {
    std::vector<T> acc(n_);
    std::vector<int> touched;
    std::vector<char> used(n_, 0);
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        const auto& pr = product(i, j);
        if (pr.empty()) continue;
        T ab = a * b;
        for (const auto& [k, c] : pr) {
          acc[k] += ab * c;
          if (!used[k]) {
            used[k] = 1;
            touched.push_back(k);
          }
        }
      }
    std::sort(touched.begin(), touched.end());
    SparseVec<T> out;
    for (int k : touched)
      if (!is_zero(acc[k])) out.emplace_back(k, std::move(acc[k]));
    return out;
  }

 private:
  int n_ = 0;
  int param_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec<T>> table_;
  SparseVec<T> unit_;
  std::vector<SparseVec<T>> gens_;
};

template <class T>
SparseVec<T> vec_sub(SparseVec<T> x, const SparseVec<T>& y) {
  axpy(x, T(-1), y);
  return x;
}

template <class T>
SparseVec<T> vec_add(SparseVec<T> x, const SparseVec<T>& y) {
  axpy(x, T(1), y);
  return x;
}

template <class T>
bool associative_on(const Algebra<T>& A, int i, int j, int k) {
  auto bi = A.basis(i), bj = A.basis(j), bk = A.basis(k);
  return A.mul(A.mul(bi, bj), bk) == A.mul(bi, A.mul(bj, bk));
}

/// Full triple check when samples == 0, otherwise `samples` random basis triples.
template <class T>
bool check_associativity(const Algebra<T>& A, long samples = 0, std::uint64_t seed = 1) {
  int n = A.dim();
  if (samples == 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!associative_on(A, i, j, k)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (long t = 0; t < samples; ++t)
    if (!associative_on(A, pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

template <class T>
bool check_unit(const Algebra<T>& A) {
  for (int i = 0; i < A.dim(); ++i) {
    auto b = A.basis(i);
    if (A.mul(A.unit(), b) != b || A.mul(b, A.unit()) != b) return false;
  }
  return true;
}

/// Coordinates with respect to an arbitrary linearly independent family.
template <class T>
class Coordinatizer {
 public:
  Coordinatizer(int n, const std::vector<SparseVec<T>>& basis)
      : n_(n), m_(static_cast<int>(basis.size())), ech_(n + m_) {
    for (int k = 0; k < m_; ++k) {
      SparseVec<T> v = basis[k];
      v.emplace_back(n + k, T(1));
      if (!ech_.insert(v)) throw ConsistencyError("coordinatizer: dependent family");
    }
  }
  int size() const { return m_; }
  std::optional<std::vector<T>> coords(const SparseVec<T>& v) const {
    SparseVec<T> r = ech_.reduce(v);
    std::vector<T> out(m_);
    for (const auto& [c, x] : r) {
      if (c < n_) return std::nullopt;
      out[c - n_] = T(0) - x;
    }
    return out;
  }

 private:
  int n_;
  int m_;
  Echelon<T> ech_;
};

template <class T>
Echelon<T> span_of(int n, const std::vector<SparseVec<T>>& vs) {
  Echelon<T> e(n);
  for (const auto& v : vs) e.insert(v);
  return e;
}

/// t_k = trace of left multiplication by basis element k.
template <class T>
std::vector<T> left_traces(const Algebra<T>& A) {
  std::vector<T> t(A.dim());
  for (int k = 0; k < A.dim(); ++k)
    for (int i = 0; i < A.dim(); ++i) t[k] += sparse_get(A.product(k, i), i);
  return t;
}

template <class T>
std::vector<T> right_traces(const Algebra<T>& A) {
  std::vector<T> t(A.dim());
  for (int k = 0; k < A.dim(); ++k)
    for (int i = 0; i < A.dim(); ++i) t[k] += sparse_get(A.product(i, k), i);
  return t;
}

/// Gram rows G_ij = t(b_i b_j) for a linear functional t on A.
template <class T>
std::vector<SparseVec<T>> trace_gram(const Algebra<T>& A, const std::vector<T>& t) {
  int n = A.dim();
  std::vector<SparseVec<T>> rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T g(0);
      for (const auto& [k, c] : A.product(i, j)) g += c * t[k];
      if (!is_zero(g)) rows[i].emplace_back(j, g);
    }
  return rows;
}

/// Jacobson radical as the kernel of (x, y) -> tr L_{xy}.
template <class T>
Echelon<T> radical(const Algebra<T>& A) {
  return span_of(A.dim(), nullspace(trace_gram(A, left_traces(A)), A.dim()));
}

/// Span of {x y : x in X, y in Y}.
template <class T>
Echelon<T> product_span(const Algebra<T>& A, const std::vector<SparseVec<T>>& X, const std::vector<SparseVec<T>>& Y) {
  Echelon<T> e(A.dim());
  for (const auto& x : X)
    for (const auto& y : Y) e.insert(A.mul(x, y));
  return e;
}

template <class T>
std::vector<SparseVec<T>> basis_vectors(const Algebra<T>& A) {
  std::vector<SparseVec<T>> out;
  for (int i = 0; i < A.dim(); ++i) out.push_back(A.basis(i));
  return out;
}

/// Closure under left and right multiplication by the generators of A.
template <class T>
bool is_two_sided_ideal(const Algebra<T>& A, const Echelon<T>& N) {
  for (const auto& r : N.rows())
    for (const auto& g : A.generators())
      if (!N.contains(A.mul(g, r)) || !N.contains(A.mul(r, g))) return false;
  return true;
}

/// Basis of the intersection of two subspaces.
template <class T>
std::vector<SparseVec<T>> intersection(const Echelon<T>& U, const Echelon<T>& W) {
  const auto& ws = W.rows();
  int m = static_cast<int>(ws.size());
  std::vector<SparseVec<T>> tr(U.ambient());
  for (int a = 0; a < m; ++a)
    for (const auto& [i, x] : U.reduce(ws[a])) tr[i].emplace_back(a, x);
  std::vector<SparseVec<T>> out;
  for (const auto& kv : nullspace(tr, m)) {
    SparseVec<T> v;
    for (const auto& [a, x] : kv) axpy(v, x, ws[a]);
    out.push_back(v);
  }
  return out;
}

/// Dimensions of N, N^2, N^3, ... up to and including the first zero power.
template <class T>
std::vector<int> power_dims(const Algebra<T>& A, const Echelon<T>& N) {
  std::vector<int> dims;
  Echelon<T> cur = N;
  while (true) {
    dims.push_back(cur.dim());
    if (cur.dim() == 0 || static_cast<int>(dims.size()) > A.dim() + 1) break;
    cur = product_span(A, N.rows(), cur.rows());
  }
  return dims;
}

template <class T>
struct QuotientAlgebra {
  Algebra<T> alg;
  std::vector<int> reps;  // basis of the quotient = these basis elements of A
  Echelon<T> kernel;
  std::vector<int> slot;  // A-index -> quotient index or -1

  SparseVec<T> project(const SparseVec<T>& v) const {
    SparseVec<T> out;
    for (const auto& [c, x] : kernel.reduce(v)) out.emplace_back(slot[c], x);
    return out;
  }
  SparseVec<T> lift(const SparseVec<T>& x) const {
    SparseVec<T> out;
    for (const auto& [c, y] : x) out.emplace_back(reps[c], y);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
};

/// A / N for a two-sided ideal N, on the complement spanned by non-pivot basis elements.
template <class T>
QuotientAlgebra<T> quotient(const Algebra<T>& A, const Echelon<T>& N) {
  QuotientAlgebra<T> Q;
  Q.kernel = N;
  Q.reps = N.non_pivots();
  Q.slot.assign(A.dim(), -1);
  int m = static_cast<int>(Q.reps.size());
  for (int a = 0; a < m; ++a) Q.slot[Q.reps[a]] = a;
  Q.alg = Algebra<T>(m, A.param());
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) labels.push_back(A.label(Q.reps[a]));
  Q.alg.set_labels(labels);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) Q.alg.set_product(a, b, Q.project(A.product(Q.reps[a], Q.reps[b])));
  Q.alg.set_unit(Q.project(A.unit()));
  std::vector<SparseVec<T>> gens;
  for (const auto& g : A.generators()) gens.push_back(Q.project(g));
  Q.alg.set_generators(gens);
  return Q;
}

/// True when the left trace form of A is nondegenerate.
template <class T>
bool trace_form_nondegenerate(const Algebra<T>& A) {
  return rank_of(trace_gram(A, left_traces(A)), A.dim()) == A.dim();
}

/// Second radical route: the kernel of the right trace form, certified to be a nilpotent
/// two-sided ideal with semisimple quotient; nullopt when a certificate fails.
template <class T>
std::optional<Echelon<T>> radical_certified(const Algebra<T>& A) {
  Echelon<T> N = span_of(A.dim(), nullspace(trace_gram(A, right_traces(A)), A.dim()));
  if (!is_two_sided_ideal(A, N)) return std::nullopt;
  if (power_dims(A, N).back() != 0) return std::nullopt;
  if (!trace_form_nondegenerate(quotient(A, N).alg)) return std::nullopt;
  return N;
}

template <class T>
bool same_subspace(const Echelon<T>& a, const Echelon<T>& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& r : a.rows())
    if (!b.contains(r)) return false;
  return true;
}

/// {z : z g = g z for every g in elems}.
template <class T>
Echelon<T> commutant(const Algebra<T>& A, const std::vector<SparseVec<T>>& elems) {
  int n = A.dim();
  std::vector<SparseVec<T>> rows;
  for (const auto& g : elems) {
    std::vector<SparseVec<T>> cols(n);
    for (int k = 0; k < n; ++k) cols[k] = vec_sub(A.mul(A.basis(k), g), A.mul(g, A.basis(k)));
    std::vector<SparseVec<T>> tr(n);
    for (int k = 0; k < n; ++k)
      for (const auto& [i, x] : cols[k]) tr[i].emplace_back(k, x);
    for (auto& r : tr)
      if (!r.empty()) rows.push_back(std::move(r));
  }
  return span_of(n, nullspace(rows, n));
}

template <class T>
Echelon<T> center(const Algebra<T>& A) {
  return commutant(A, A.generators());
}

/// Dimension of the unital subalgebra generated by elems, by span closure.
template <class T>
int subalgebra_generated(const Algebra<T>& A, const std::vector<SparseVec<T>>& elems) {
  Echelon<T> S(A.dim());
  std::vector<SparseVec<T>> queue{A.unit()};
  S.insert(A.unit());
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : elems) {
      SparseVec<T> v = A.mul(queue[q], g);
      if (S.insert(v)) queue.push_back(v);
    }
  return S.dim();
}

/// Monic minimal polynomial of y in the corner algebra with identity f.
template <class T>
Poly<T> minimal_polynomial(const Algebra<T>& A, const SparseVec<T>& f, const SparseVec<T>& y) {
  int n = A.dim();
  Echelon<T> ech(2 * n + 2);
  SparseVec<T> pw = f;
  for (int k = 0; k <= n + 1; ++k) {
    SparseVec<T> aug = pw;
    aug.emplace_back(n + k, T(1));
    SparseVec<T> r = ech.reduce(aug);
    if (r.empty() || r.front().first >= n) {
      Poly<T> m(k + 1);
      for (const auto& [c, x] : r) m[c - n] = x;
      poly_trim(m);
      return m;
    }
    ech.insert(aug);
    pw = A.mul(pw, y);
  }
  throw ConsistencyError("minimal polynomial degree exceeds the dimension");
}

/// g(y) in the corner algebra with identity f.
template <class T>
SparseVec<T> poly_eval_in(const Algebra<T>& A, const Poly<T>& g, const SparseVec<T>& f, const SparseVec<T>& y) {
  SparseVec<T> r;
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
    r = A.mul(r, y);
    axpy(r, g[i], f);
  }
  return r;
}

template <class T>
struct Spectral {
  std::vector<SparseVec<T>> idempotents;  // one per eigenvalue in the field, then any remainder
  std::vector<SparseVec<T>> nilpotents;   // y e - lambda e when nonzero
};

/// Generalized eigenspace idempotents of y inside the corner with identity f.
template <class T>
Spectral<T> spectral_split(const Algebra<T>& A, const SparseVec<T>& f, const SparseVec<T>& y) {
  Spectral<T> out;
  Poly<T> m = minimal_polynomial(A, f, y);
  SparseVec<T> rest = f;
  for (const T& lam : roots_in_field(m, A.param())) {
    Poly<T> lin{T(0) - lam, T(1)}, power{T(1)}, g = m;
    while (true) {
      Poly<T> q, r;
      poly_divmod(g, lin, q, r);
      if (!r.empty()) break;
      g = q;
      power = poly_mul(power, lin);
    }
    SparseVec<T> e;
    if (poly_degree(g) <= 0) {
      e = f;
    } else {
      Poly<T> s, u;
      poly_xgcd(power, g, s, u);
      e = poly_eval_in(A, poly_mul(u, g), f, y);
    }
    SparseVec<T> nil = A.mul(e, y);
    axpy(nil, T(T(0) - lam), e);
    if (!nil.empty()) out.nilpotents.push_back(nil);
    out.idempotents.push_back(e);
    rest = vec_sub(rest, e);
  }
  if (!rest.empty()) out.idempotents.push_back(rest);
  return out;
}

/// Refines {f} into orthogonal idempotents using every element of a commuting family.
template <class T>
std::vector<SparseVec<T>> refine_commuting(const Algebra<T>& A, const SparseVec<T>& f,
                                           const std::vector<SparseVec<T>>& family) {
  std::vector<SparseVec<T>> idem{f};
  for (const auto& z : family) {
    std::vector<SparseVec<T>> next;
    for (const auto& c : idem)
      for (auto& e : spectral_split(A, c, A.mul(c, z)).idempotents) next.push_back(std::move(e));
    idem = std::move(next);
  }
  return idem;
}

/// A f as a subspace.
template <class T>
Echelon<T> left_ideal(const Algebra<T>& A, const SparseVec<T>& f) {
  Echelon<T> L(A.dim());
  for (int i = 0; i < A.dim(); ++i) L.insert(A.mul(A.basis(i), f));
  return L;
}

/// Basis of e A f, computed as e (A f).
template <class T>
Echelon<T> corner(const Algebra<T>& A, const SparseVec<T>& e, const SparseVec<T>& f) {
  Echelon<T> c(A.dim()), L = left_ideal(A, f);
  for (const auto& r : L.rows()) c.insert(A.mul(e, r));
  return c;
}

/// A primitive idempotent below f in a split semisimple algebra.
template <class T>
SparseVec<T> primitive_below(const Algebra<T>& A, SparseVec<T> f) {
  for (int guard = 0; guard <= A.dim(); ++guard) {
    Echelon<T> cf = corner(A, f, f);
    if (cf.dim() == 1) return f;
    std::vector<SparseVec<T>> cands = cf.rows();
    std::vector<SparseVec<T>> nil;
    std::optional<SparseVec<T>> found;
    auto attempt = [&](const SparseVec<T>& y) {
      if (found || y.empty()) return;
      Spectral<T> sp = spectral_split(A, f, y);
      for (auto& u : sp.nilpotents) nil.push_back(u);
      if (sp.idempotents.size() < 2) return;
      // keep the piece with the smaller corner
      const SparseVec<T>* best = nullptr;
      int best_dim = 0;
      for (const auto& e : sp.idempotents) {
        int d = corner(A, e, e).dim();
        if (!best || d < best_dim) {
          best = &e;
          best_dim = d;
        }
      }
      found = *best;
    };
    for (const auto& y : cands) attempt(y);
    for (size_t a = 0; a < cands.size() && !found; ++a)
      for (size_t b = 0; b < cands.size() && !found; ++b) attempt(A.mul(cands[a], cands[b]));
    for (size_t a = 0; a < nil.size() && !found; ++a)
      for (size_t b = 0; b < cands.size() && !found; ++b) attempt(A.mul(nil[a], cands[b]));
    if (!found) throw OutOfScope("corner algebra does not split over the base field");
    f = *found;
  }
  throw ConsistencyError("idempotent splitting did not terminate");
}

/// e <- 3e^2 - 2e^3 until idempotent.
template <class T>
SparseVec<T> lift_idempotent(const Algebra<T>& A, SparseVec<T> e) {
  for (int it = 0; it <= A.dim(); ++it) {
    SparseVec<T> e2 = A.mul(e, e);
    if (e2 == e) return e;
    SparseVec<T> e3 = A.mul(e2, e);
    SparseVec<T> next;
    axpy(next, T(3), e2);
    axpy(next, T(-2), e3);
    e = std::move(next);
  }
  throw ConsistencyError("idempotent lifting did not converge");
}

/// Module given by the action matrices of the algebra's generators.
template <class T>
struct FdModule {
  int dim = 0;
  std::vector<Matrix<T>> action;
};

/// W / U for left ideals U subset W of A, acted on by the generators of A.
template <class T>
FdModule<T> subquotient_module(const Algebra<T>& A, const Echelon<T>& W, const Echelon<T>& U) {
  Echelon<T> acc = U;
  std::vector<SparseVec<T>> chosen;
  for (const auto& w : W.rows())
    if (acc.insert(w)) chosen.push_back(w);
  std::vector<SparseVec<T>> fam = U.rows();
  fam.insert(fam.end(), chosen.begin(), chosen.end());
  Coordinatizer<T> coord(A.dim(), fam);
  int u = U.dim(), m = static_cast<int>(chosen.size());
  FdModule<T> M;
  M.dim = m;
  for (const auto& g : A.generators()) {
    Matrix<T> act(m, m);
    for (int k = 0; k < m; ++k) {
      auto c = coord.coords(A.mul(g, chosen[k]));
      if (!c) throw ConsistencyError("subspace is not a left ideal");
      for (int i = 0; i < m; ++i) act(i, k) = (*c)[u + i];
    }
    M.action.push_back(std::move(act));
  }
  return M;
}

template <class T>
FdModule<T> direct_sum(const FdModule<T>& M, const FdModule<T>& N) {
  FdModule<T> S;
  S.dim = M.dim + N.dim;
  for (size_t g = 0; g < M.action.size(); ++g) {
    Matrix<T> a(S.dim, S.dim);
    for (int i = 0; i < M.dim; ++i)
      for (int j = 0; j < M.dim; ++j) a(i, j) = M.action[g](i, j);
    for (int i = 0; i < N.dim; ++i)
      for (int j = 0; j < N.dim; ++j) a(M.dim + i, M.dim + j) = N.action[g](i, j);
    S.action.push_back(std::move(a));
  }
  return S;
}

/// Basis of Hom_A(M, N) as N.dim x M.dim matrices. Each basis element has a 1 at its own
/// free position and 0 at the other free positions, so coordinates are read off directly.
template <class T>
struct HomSpace {
  int rows = 0;
  int cols = 0;
  std::vector<Matrix<T>> basis;
  std::vector<int> free;  // flattened positions i * cols + j

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<T> coords(const Matrix<T>& X) const {
    std::vector<T> c;
    for (int f : free) c.push_back(X(f / cols, f % cols));
    Matrix<T> back(rows, cols);
    for (int k = 0; k < dim(); ++k) {
      Matrix<T> t = basis[k];
      t *= c[k];
      back += t;
    }
    if (back != X) throw ConsistencyError("matrix is not in the Hom space");
    return c;
  }
};

template <class T>
HomSpace<T> hom_space(const FdModule<T>& M, const FdModule<T>& N) {
  int r = N.dim, c = M.dim;
  std::vector<SparseVec<T>> eqs;
  // (X rho_M(g) - rho_N(g) X)_{ij} = 0
  for (size_t g = 0; g < M.action.size(); ++g) {
    const Matrix<T>& a = M.action[g];
    const Matrix<T>& b = N.action[g];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        std::vector<std::pair<int, T>> row;
        for (int k = 0; k < c; ++k)
          if (!is_zero(a(k, j))) row.emplace_back(i * c + k, a(k, j));
        for (int k = 0; k < r; ++k)
          if (!is_zero(b(i, k))) row.emplace_back(k * c + j, T(0) - b(i, k));
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVec<T> merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
            if (is_zero(merged.back().second)) merged.pop_back();
          } else {
            merged.push_back(e);
          }
        }
        if (!merged.empty()) eqs.push_back(std::move(merged));
      }
  }
  HomSpace<T> H;
  H.rows = r;
  H.cols = c;
  for (const auto& v : nullspace(eqs, r * c)) {
    Matrix<T> X(r, c);
    for (const auto& [pos, x] : v) X(pos / c, pos % c) = x;
    H.basis.push_back(std::move(X));
  }
  // nullspace orders its basis by the free columns of the same reduction
  Echelon<T> ech(r * c);
  for (const auto& e : eqs) ech.insert(e);
  H.free = ech.non_pivots();
  return H;
}

/// Structure constants of End_A(M) in the Hom basis, composition X * Y = X o Y.
template <class T>
struct EndAlgebra {
  Algebra<T> alg;
  HomSpace<T> hom;
};

template <class T>
EndAlgebra<T> endomorphism_algebra(const FdModule<T>& M, int param) {
  EndAlgebra<T> E;
  E.hom = hom_space(M, M);
  int d = E.hom.dim();
  E.alg = Algebra<T>(d, param);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) E.alg.set_product(a, b, to_sparse(E.hom.coords(E.hom.basis[a] * E.hom.basis[b])));
  E.alg.set_unit(to_sparse(E.hom.coords(Matrix<T>::identity(M.dim))));
  E.alg.set_generators(basis_vectors(E.alg));
  return E;
}

template <class T>
bool is_split_semisimple_center(const Algebra<T>& A, const std::vector<SparseVec<T>>& idem,
                                const std::vector<SparseVec<T>>& zbasis) {
  for (const auto& c : idem) {
    Echelon<T> cz(A.dim());
    for (const auto& z : zbasis) cz.insert(A.mul(c, z));
    if (cz.dim() != 1) return false;
  }
  return true;
}

/// Block labels normalized to first-appearance order.
inline std::vector<int> normalize_labels(const std::vector<int>& lab) {
  std::vector<int> map, out;
  for (int x : lab) {
    auto it = std::find(map.begin(), map.end(), x);
    if (it == map.end()) {
      map.push_back(x);
      out.push_back(static_cast<int>(map.size()) - 1);
    } else {
      out.push_back(static_cast<int>(it - map.begin()));
    }
  }
  return out;
}

template <class T>
struct Decomposition {
  Echelon<T> radical;
  std::optional<bool> radical_routes_agree;  // second route only for dim <= 64
  bool quotient_semisimple = false;
  int center_dim = 0;
  int center_radical_dim = 0;
  std::vector<SparseVec<T>> idempotents;  // lifted primitive idempotents, one per simple
  std::vector<FdModule<T>> projectives;
  std::vector<FdModule<T>> simples;
  std::vector<FdModule<T>> radical_modules;  // JP_i
  std::vector<std::vector<int>> cartan;         // dim Hom(P_i, P_j)
  std::vector<std::vector<int>> cartan_corner;  // dim e_i A e_j
  std::vector<std::vector<int>> ext1;           // dim Ext^1(S_i, S_j) = dim Hom(JP_i, S_j)
  std::vector<int> block_ext;
  std::vector<int> block_central;
  std::vector<SparseVec<T>> central_idempotents;
  bool blocks_agree = false;
  bool bookkeeping = false;  // sum dim S_i dim P_i = dim A

  int simple_count() const { return static_cast<int>(simples.size()); }
  int block_count() const {
    return block_ext.empty() ? 0 : *std::max_element(block_ext.begin(), block_ext.end()) + 1;
  }
  std::vector<int> block_members(int b) const {
    std::vector<int> out;
    for (int i = 0; i < simple_count(); ++i)
      if (block_ext[i] == b) out.push_back(i);
    return out;
  }
};

/// Runs the whole pipeline. `second_radical_limit` bounds the dimension for the
/// certified second radical route.
template <class T>
Decomposition<T> decompose(const Algebra<T>& A, int second_radical_limit = 64) {
  Decomposition<T> D;
  int n = A.dim();
  D.radical = radical(A);
  if (n <= second_radical_limit) {
    auto r2 = radical_certified(A);
    D.radical_routes_agree = r2.has_value() && same_subspace(*r2, D.radical);
  }
  if (!is_two_sided_ideal(A, D.radical)) throw ConsistencyError("trace-form kernel is not an ideal");
  QuotientAlgebra<T> Q = quotient(A, D.radical);
  D.quotient_semisimple = trace_form_nondegenerate(Q.alg);
  if (!D.quotient_semisimple) throw ConsistencyError("A/rad has a degenerate trace form");

  // central primitive idempotents of A/rad, then one primitive idempotent in each
  std::vector<SparseVec<T>> zq = center(Q.alg).rows();
  std::vector<SparseVec<T>> cq = refine_commuting(Q.alg, Q.alg.unit(), zq);
  if (!is_split_semisimple_center(Q.alg, cq, zq)) throw OutOfScope("center of A/rad is not split");
  struct Found {
    int sdim;
    SparseVec<T> e;
  };
  std::vector<Found> found;
  for (const auto& c : cq) {
    int sq = corner(Q.alg, c, c).dim();
    int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
    if (s * s != sq) throw OutOfScope("simple component is not a split matrix algebra");
    found.push_back({s, lift_idempotent(A, Q.lift(primitive_below(Q.alg, c)))});
  }
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.sdim < b.sdim; });

  int k = static_cast<int>(found.size());
  std::vector<Echelon<T>> P(k);
  long total = 0;
  for (int i = 0; i < k; ++i) {
    const auto& e = found[i].e;
    D.idempotents.push_back(e);
    P[i] = left_ideal(A, e);
    // J e = J cap A e for an idempotent e
    Echelon<T> JP = span_of(n, intersection(D.radical, P[i]));
    D.projectives.push_back(subquotient_module(A, P[i], Echelon<T>(n)));
    D.simples.push_back(subquotient_module(A, P[i], JP));
    D.radical_modules.push_back(subquotient_module(A, JP, Echelon<T>(n)));
    if (D.simples.back().dim != found[i].sdim) throw ConsistencyError("top of P has the wrong dimension");
    total += static_cast<long>(D.simples.back().dim) * D.projectives.back().dim;
  }
  D.bookkeeping = total == n;

  D.cartan.assign(k, std::vector<int>(k));
  D.cartan_corner.assign(k, std::vector<int>(k));
  D.ext1.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      D.cartan[i][j] = hom_space(D.projectives[i], D.projectives[j]).dim();
      Echelon<T> c(n);
      for (const auto& r : P[j].rows()) c.insert(A.mul(D.idempotents[i], r));
      D.cartan_corner[i][j] = c.dim();
      // every map to a simple factors through the top of JP_i
      D.ext1[i][j] = hom_space(D.radical_modules[i], D.simples[j]).dim();
    }

  // blocks, route 1: connected components of the Ext-linking graph
  std::vector<int> comp(k);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (D.ext1[i][j] != 0) comp[root(i)] = root(j);
  std::vector<int> lab(k);
  for (int i = 0; i < k; ++i) lab[i] = root(i);
  D.block_ext = normalize_labels(lab);

  // blocks, route 2: primitive idempotents of the center of A
  Echelon<T> Z = center(A);
  D.center_dim = Z.dim();
  std::vector<SparseVec<T>> zmod;
  for (const auto& z : Z.rows()) zmod.push_back(D.radical.reduce(z));
  D.center_radical_dim = D.center_dim - rank_of(zmod, n);
  D.central_idempotents = refine_commuting(A, A.unit(), Z.rows());
  for (const auto& c : D.central_idempotents) {
    Echelon<T> cz(n);
    std::vector<SparseVec<T>> czmod;
    for (const auto& z : Z.rows()) {
      auto v = A.mul(c, z);
      cz.insert(v);
      czmod.push_back(D.radical.reduce(v));
    }
    if (rank_of(czmod, n) != 1) throw OutOfScope("center of A is not split local on a block");
  }
  std::vector<int> lab2(k, -1);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < static_cast<int>(D.central_idempotents.size()); ++c)
      if (!A.mul(D.central_idempotents[c], D.idempotents[i]).empty()) lab2[i] = c;
  D.block_central = normalize_labels(lab2);
  D.blocks_agree = D.block_central == D.block_ext &&
                   static_cast<int>(D.central_idempotents.size()) == D.center_dim - D.center_radical_dim &&
                   static_cast<int>(D.central_idempotents.size()) == D.block_count();
  return D;
}

/// The eight-dimensional algebra on e+, e-, a1, a2, b1, b2, w+, w- with
/// a_i b_i = b_i a_i = 0, a1 b2 = a2 b1 = w+, b1 a2 = b2 a1 = w-, and all products of
/// three arrows zero. `mirror = false` drops every b a product (a counterexample shape).
template <class T>
Algebra<T> model_basic_algebra(int param, bool mirror = true) {
  enum { ep, em, a1, a2, b1, b2, wp, wm };
  Algebra<T> B(8, param);
  B.set_labels({"e+", "e-", "a1", "a2", "b1", "b2", "w+", "w-"});
  auto one = [](int i) { return SparseVec<T>{{i, T(1)}}; };
  // a in e+ B e-, b in e- B e+, w+ in e+ B e+, w- in e- B e-
  B.set_product(ep, ep, one(ep));
  B.set_product(em, em, one(em));
  for (int a : {a1, a2}) {
    B.set_product(ep, a, one(a));
    B.set_product(a, em, one(a));
  }
  for (int b : {b1, b2}) {
    B.set_product(em, b, one(b));
    B.set_product(b, ep, one(b));
  }
  B.set_product(ep, wp, one(wp));
  B.set_product(wp, ep, one(wp));
  B.set_product(em, wm, one(wm));
  B.set_product(wm, em, one(wm));
  B.set_product(a1, b2, one(wp));
  B.set_product(a2, b1, one(wp));
  if (mirror) {
    B.set_product(b1, a2, one(wm));
    B.set_product(b2, a1, one(wm));
  }
  B.set_unit({{ep, T(1)}, {em, T(1)}});
  B.set_generators(basis_vectors(B));
  return B;
}

template <class T>
struct BasicAlgebraWitness {
  bool found = false;
  std::string failure;
  std::array<int, 4> hom_dims{};  // dims of e+Be+, e+Be-, e-Be+, e-Be-
  std::array<SparseVec<T>, 8> images;  // e+, e-, tau_1^+, tau_2^+, tau_1^-, tau_2^-, w+, w-
  T ratio;                             // tau^- tau^+ products relative to the input w-
  bool isomorphism = false;            // images span B and respect every model product
};

/// Searches for a basis of the off-diagonal corners of B satisfying the model relations.
template <class T>
BasicAlgebraWitness<T> basic_algebra_witness(const Algebra<T>& B, const SparseVec<T>& ep, const SparseVec<T>& em) {
  BasicAlgebraWitness<T> W;
  Echelon<T> pp = corner(B, ep, ep), pm = corner(B, ep, em), mp = corner(B, em, ep), mm = corner(B, em, em);
  W.hom_dims = {pp.dim(), pm.dim(), mp.dim(), mm.dim()};
  if (W.hom_dims != std::array<int, 4>{2, 2, 2, 2}) {
    W.failure = "corner dimensions are not (2,2,2,2)";
    return W;
  }
  Echelon<T> rad = radical(B);
  auto wp = intersection(rad, pp), wm = intersection(rad, mm);
  if (wp.size() != 1 || wm.size() != 1) {
    W.failure = "diagonal corners do not meet the radical in a line";
    return W;
  }
  const auto& u = pm.rows();
  const auto& v = mp.rows();
  Coordinatizer<T> cp(B.dim(), wp), cm(B.dim(), wm);
  Matrix<T> M(2, 2), N(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto x = cp.coords(B.mul(u[a], v[b]));
      auto y = cm.coords(B.mul(v[b], u[a]));
      if (!x || !y) {
        W.failure = "corner products leave the radical lines";
        return W;
      }
      M(a, b) = (*x)[0];
      N(b, a) = (*y)[0];
    }
  if (M.rank() < 2 || N.rank() < 2) {
    W.failure = "a corner pairing is degenerate";
    return W;
  }
  Matrix<T> R = M.inverse().transpose() * N;
  if (!is_zero(R(0, 1)) || !is_zero(R(1, 0)) || R(0, 0) != R(1, 1)) {
    W.failure = "corner pairings are not proportional";
    return W;
  }
  W.ratio = R(0, 0);
  Matrix<T> J(2, 2);
  J(0, 1) = T(1);
  J(1, 0) = T(1);
  Matrix<T> Y = J * M.inverse().transpose();
  SparseVec<T> tp[2] = {u[0], u[1]}, tm[2];
  for (int j = 0; j < 2; ++j)
    for (int b = 0; b < 2; ++b) axpy(tm[j], Y(j, b), v[b]);
  W.images = {ep, em, tp[0], tp[1], tm[0], tm[1], B.mul(tp[0], tm[1]), B.mul(tm[0], tp[1])};
  W.found = true;

  Algebra<T> model = model_basic_algebra<T>(B.param());
  W.isomorphism = span_of(B.dim(), std::vector<SparseVec<T>>(W.images.begin(), W.images.end())).dim() == 8 &&
                  B.dim() == 8;
  for (int i = 0; i < 8 && W.isomorphism; ++i)
    for (int j = 0; j < 8 && W.isomorphism; ++j) {
      SparseVec<T> lhs;
      for (const auto& [k, c] : model.product(i, j)) axpy(lhs, c, W.images[k]);
      if (lhs != B.mul(W.images[i], W.images[j])) W.isomorphism = false;
    }
  return W;
}

}  // namespace tqg
