/**
 * @file uqsl2.hpp
 * @brief The restricted quantum group at q = e^{i pi / p} on the PBW basis E^i K^j F^k,
 * and its simples, projective covers, blocks and two-simple basic algebras.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tqg/cyclo.hpp"
#include "tqg/fdalg.hpp"

namespace tqg {

struct PBWMonomial {
  int i = 0;  // E exponent, 0..p-1
  int j = 0;  // K exponent, 0..2p-1
  int k = 0;  // F exponent, 0..p-1
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

inline int pbw_index(int p, int i, int j, int k) { return (i * 2 * p + j) * p + k; }
inline PBWMonomial pbw_monomial(int p, int idx) { return {idx / (2 * p * p), (idx / p) % (2 * p), idx % p}; }

using UqElement = SparseVec<Cyclo>;

namespace detail {

inline int kmod(int p, long j) { return static_cast<int>(((j % (2 * p)) + 2 * p) % (2 * p)); }

using NormalForm = std::map<std::tuple<int, int, int>, Cyclo>;

inline void nf_add(NormalForm& f, std::tuple<int, int, int> key, const Cyclo& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = f.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) f.erase(it);
  }
}

}  // namespace detail

/// F^c E^d in normal form, from F^c E = E F^c - [c]/(q - q^-1) (q^{c-1} K - q^{1-c} K^-1) F^{c-1}.
class Straightener {
 public:
  explicit Straightener(int p) : p_(p), memo_(static_cast<size_t>(p) * p) {
    for (int c = 0; c < p; ++c)
      for (int d = 0; d < p; ++d) memo_[c * p + d] = compute_(c, d);
  }
  const detail::NormalForm& get(int c, int d) const { return memo_[c * p_ + d]; }

 private:
  detail::NormalForm compute_(int c, int d) const {
    detail::NormalForm out;
    if (c == 0 || d == 0) {
      detail::nf_add(out, {d, 0, c}, Cyclo(1));
      return out;
    }
    const detail::NormalForm& a = memo_[c * p_ + d - 1];
    for (const auto& [key, x] : a) {
      auto [i, j, k] = key;
      if (i + 1 < p_) detail::nf_add(out, {i + 1, j, k}, x);
    }
    const detail::NormalForm& b = memo_[(c - 1) * p_ + d - 1];
    Cyclo q = Cyclo::q(p_);
    Cyclo coef = quantum_int(c, p_) / (q - q.inverse());
    for (const auto& [key, x] : b) {
      auto [i, j, k] = key;
      // K^{+-1} E^i = q^{+-2i} E^i K^{+-1}
      detail::nf_add(out, {i, detail::kmod(p_, j + 1), k}, Cyclo(-1) * coef * x * Cyclo::q_power(p_, c - 1 + 2 * i));
      detail::nf_add(out, {i, detail::kmod(p_, j - 1), k}, coef * x * Cyclo::q_power(p_, 1 - c - 2 * i));
    }
    return out;
  }

  int p_;
  std::vector<detail::NormalForm> memo_;
};

struct UqAlgebra {
  int p = 0;
  Algebra<Cyclo> alg;
  UqElement E, F, K, Kinv, one;
};

inline std::string pbw_label(const PBWMonomial& m) {
  return "E^" + std::to_string(m.i) + "K^" + std::to_string(m.j) + "F^" + std::to_string(m.k);
}

/// Structure constants of the 2p^3-dimensional algebra.
inline UqAlgebra build_uq(int p) {
  if (p < 2) throw ParameterError("build_uq needs p >= 2");
  UqAlgebra U;
  U.p = p;
  int n = 2 * p * p * p;
  U.alg = Algebra<Cyclo>(n, p);
  Straightener st(p);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back(pbw_label(pbw_monomial(p, x)));
  U.alg.set_labels(labels);
  for (int x = 0; x < n; ++x) {
    PBWMonomial l = pbw_monomial(p, x);
    for (int y = 0; y < n; ++y) {
      PBWMonomial r = pbw_monomial(p, y);
      // E^a K^b (F^c E^d) K^e F^f
      std::map<int, Cyclo> acc;
      for (const auto& [key, c] : st.get(l.k, r.i)) {
        auto [xi, xj, xk] = key;
        int ei = l.i + xi, fk = xk + r.k;
        if (ei >= p || fk >= p) continue;
        Cyclo coef = c * Cyclo::q_power(p, 2L * l.j * xi + 2L * xk * r.j);
        int idx = pbw_index(p, ei, detail::kmod(p, l.j + xj + r.j), fk);
        auto [it, fresh] = acc.emplace(idx, coef);
        if (!fresh) it->second += coef;
      }
      UqElement v;
      for (auto& [idx, c] : acc)
        if (!is_zero(c)) v.emplace_back(idx, c);
      U.alg.set_product(x, y, std::move(v));
    }
  }
  U.one = {{pbw_index(p, 0, 0, 0), Cyclo(1)}};
  U.E = {{pbw_index(p, 1, 0, 0), Cyclo(1)}};
  U.K = {{pbw_index(p, 0, 1, 0), Cyclo(1)}};
  U.Kinv = {{pbw_index(p, 0, 2 * p - 1, 0), Cyclo(1)}};
  U.F = {{pbw_index(p, 0, 0, 1), Cyclo(1)}};
  U.alg.set_unit(U.one);
  U.alg.set_generators({U.E, U.F, U.K});
  return U;
}

/// EF - FE equals (K - K^-1)/(q - q^-1) exactly.
inline bool ef_relation_holds(const UqAlgebra& U) {
  UqElement lhs = vec_sub(U.alg.mul(U.E, U.F), U.alg.mul(U.F, U.E));
  Cyclo q = Cyclo::q(U.p);
  UqElement rhs = vec_sub(U.K, U.Kinv);
  scale(rhs, Cyclo(1) / (q - q.inverse()));
  std::sort(rhs.begin(), rhs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return lhs == rhs;
}

/// K x K^-1 = q^{2(i-k)} x on every PBW monomial.
inline bool k_grading_holds(const UqAlgebra& U) {
  for (int x = 0; x < U.alg.dim(); ++x) {
    PBWMonomial m = pbw_monomial(U.p, x);
    UqElement v = U.alg.mul(U.alg.mul(U.K, U.alg.basis(x)), U.Kinv);
    if (v != UqElement{{x, Cyclo::q_power(U.p, 2L * (m.i - m.k))}}) return false;
  }
  return true;
}

/// E^p = F^p = 0 and K^{2p} = 1 through repeated multiplication.
inline bool truncation_relations_hold(const UqAlgebra& U) {
  UqElement e = U.one, f = U.one, k = U.one;
  for (int t = 0; t < U.p; ++t) {
    e = U.alg.mul(e, U.E);
    f = U.alg.mul(f, U.F);
  }
  for (int t = 0; t < 2 * U.p; ++t) k = U.alg.mul(k, U.K);
  return e.empty() && f.empty() && k == U.one && U.alg.mul(U.K, U.Kinv) == U.one;
}

struct UqSimple {
  int dim = 0;
  int sign = 0;  // K acts on the E-kernel by sign * q^{dim-1}
  int block = 0;
};

struct UqBlock {
  std::vector<int> members;  // simple indices, + type first
  std::vector<int> simple_dims;
  std::vector<int> projective_dims;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> ext1;
  bool semisimple = false;
};

struct UqStructure {
  int p = 0;
  Decomposition<Cyclo> dec;
  std::vector<UqSimple> simples;
  std::vector<UqBlock> blocks;
};

/// The sign for which K = sign * q^{dim-1} on the highest-weight line ker E.
inline int simple_sign(const FdModule<Cyclo>& S, int p) {
  const Matrix<Cyclo>& e = S.action[0];
  const Matrix<Cyclo>& k = S.action[2];
  auto ker = e.kernel();
  if (ker.size() != 1) throw ConsistencyError("E-kernel of a simple is not a line");
  auto kv = k.apply(ker[0]);
  int piv = 0;
  while (is_zero(ker[0][piv])) ++piv;
  Cyclo lam = kv[piv] / ker[0][piv];
  Cyclo top = Cyclo::q_power(p, S.dim - 1);
  if (lam == top) return 1;
  if (lam == -top) return -1;
  throw ConsistencyError("K eigenvalue on the E-kernel is not +-q^{dim-1}");
}

inline UqStructure uq_block_report(const UqAlgebra& U) {
  UqStructure out;
  out.p = U.p;
  out.dec = decompose(U.alg);
  const auto& D = out.dec;
  for (int i = 0; i < D.simple_count(); ++i)
    out.simples.push_back({D.simples[i].dim, simple_sign(D.simples[i], U.p), D.block_ext[i]});
  for (int b = 0; b < D.block_count(); ++b) {
    UqBlock blk;
    blk.members = D.block_members(b);
    std::stable_sort(blk.members.begin(), blk.members.end(),
                     [&](int x, int y) { return out.simples[x].sign > out.simples[y].sign; });
    for (int i : blk.members) {
      blk.simple_dims.push_back(D.simples[i].dim);
      blk.projective_dims.push_back(D.projectives[i].dim);
      std::vector<int> crow, erow;
      for (int j : blk.members) {
        crow.push_back(D.cartan[i][j]);
        erow.push_back(D.ext1[i][j]);
      }
      blk.cartan.push_back(crow);
      blk.ext1.push_back(erow);
    }
    blk.semisimple = true;
    for (int i : blk.members) blk.semisimple = blk.semisimple && D.projectives[i].dim == D.simples[i].dim;
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

inline std::vector<FdModule<Cyclo>> uq_simples(const UqStructure& s) { return s.dec.simples; }

struct UqBasicAlgebra {
  EndAlgebra<Cyclo> end;
  BasicAlgebraWitness<Cyclo> witness;
  std::vector<int> radical_powers;  // dims of J, J^2, ... down to 0
  std::array<int, 4> hom_dims{};    // Hom(P+,P+), Hom(P-,P+), Hom(P+,P-), Hom(P-,P-)
};

/// End(P+ (+) P-) for a block with two simples, with the model witness.
inline UqBasicAlgebra uq_basic_algebra(const UqStructure& s, int block) {
  const UqBlock& blk = s.blocks.at(block);
  if (blk.members.size() != 2) throw ParameterError("basic algebra needs a block with two simples");
  const auto& Pp = s.dec.projectives[blk.members[0]];
  const auto& Pm = s.dec.projectives[blk.members[1]];
  UqBasicAlgebra out;
  out.end = endomorphism_algebra(direct_sum(Pp, Pm), s.p);
  int a = Pp.dim, b = Pm.dim;
  Matrix<Cyclo> pp(a + b, a + b), pm(a + b, a + b);
  for (int i = 0; i < a; ++i) pp(i, i) = Cyclo(1);
  for (int i = 0; i < b; ++i) pm(a + i, a + i) = Cyclo(1);
  UqElement ep = to_sparse(out.end.hom.coords(pp)), em = to_sparse(out.end.hom.coords(pm));
  const auto& B = out.end.alg;
  out.hom_dims = {corner(B, ep, ep).dim(), corner(B, ep, em).dim(), corner(B, em, ep).dim(), corner(B, em, em).dim()};
  out.witness = basic_algebra_witness(B, ep, em);
  out.radical_powers = power_dims(B, radical(B));
  return out;
}

}  // namespace tqg
