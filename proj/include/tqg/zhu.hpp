/**
 * @file zhu.hpp
 * @brief The block algebra I modeling the Zhu algebra of W(p): a 2-dim local block
 * {(a 0; b a)} for each (s,+) with s < p, a 2x2 matrix block for each (s,-), and a 1-dim
 * block for (p,+). Carries the images of T(0) and of the W zero modes.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqg/fdalg.hpp"
#include "tqg/triplet.hpp"
#include "tqg/weights.hpp"

namespace tqg {

enum class IBlockKind { jordan2, mat2, mat1 };

inline const char* kind_name(IBlockKind k) {
  switch (k) {
    case IBlockKind::jordan2: return "jordan2";
    case IBlockKind::mat2: return "mat2";
    default: return "mat1";
  }
}

struct IBlock {
  IBlockKind kind = IBlockKind::mat1;
  int s = 0;
  Sign eps = Sign::plus;
  Rational h;
  int offset = 0;
  int dim = 0;
  Rational beta;  // W^0 eigenvalue on the first basis vector of a mat2 block
  std::string label() const { return std::to_string(s) + sign_char(eps); }
};

struct IAlgebra {
  int p = 0;
  Algebra<Rational> alg;
  std::vector<IBlock> blocks;
  SparseVec<Rational> t, w0, wplus, wminus;
};

/// Lowest weight attached to the block (s, eps).
inline Rational block_weight(int p, int s, Sign eps) {
  if (s == p) return eps == Sign::plus ? h_value(p, p, 0) : h_value(p, 0, 0);
  return eps == Sign::plus ? h_value(p, s, 0) : h_value(p, s, 1);
}

inline IAlgebra build_I(int p) {
  if (p < 2) throw ParameterError("build_I needs p >= 2");
  IAlgebra I;
  I.p = p;
  int off = 0;
  auto push = [&](IBlockKind k, int s, Sign e) {
    IBlock b;
    b.kind = k;
    b.s = s;
    b.eps = e;
    b.h = block_weight(p, s, e);
    b.offset = off;
    b.dim = k == IBlockKind::jordan2 ? 2 : k == IBlockKind::mat2 ? 4 : 1;
    if (k == IBlockKind::mat2) b.beta = generalized_binomial(Rational(-s - 1), 2 * p - 1);
    off += b.dim;
    I.blocks.push_back(b);
  };
  for (int s = 1; s < p; ++s) push(IBlockKind::jordan2, s, Sign::plus);
  for (int s = 1; s < p; ++s) push(IBlockKind::mat2, s, Sign::minus);
  push(IBlockKind::mat1, p, Sign::plus);
  push(IBlockKind::mat2, p, Sign::minus);

  I.alg = Algebra<Rational>(off, 0);
  std::vector<std::string> labels(off);
  SparseVec<Rational> one;
  auto unit = [](int i) { return SparseVec<Rational>{{i, Rational(1)}}; };
  for (const auto& b : I.blocks) {
    int o = b.offset;
    std::string tag = "[" + b.label() + "]";
    switch (b.kind) {
      case IBlockKind::jordan2:
        // basis 1, n with n^2 = 0
        labels[o] = "1" + tag;
        labels[o + 1] = "n" + tag;
        I.alg.set_product(o, o, unit(o));
        I.alg.set_product(o, o + 1, unit(o + 1));
        I.alg.set_product(o + 1, o, unit(o + 1));
        one.emplace_back(o, 1);
        I.t.emplace_back(o, b.h);
        I.t.emplace_back(o + 1, 1);
        break;
      case IBlockKind::mat2:
        // matrix units e_ij at o + 2i + j
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            labels[o + 2 * i + j] = "e" + std::to_string(i + 1) + std::to_string(j + 1) + tag;
            for (int l = 0; l < 2; ++l) I.alg.set_product(o + 2 * i + j, o + 2 * j + l, unit(o + 2 * i + l));
          }
        one.emplace_back(o, 1);
        one.emplace_back(o + 3, 1);
        I.t.emplace_back(o, b.h);
        I.t.emplace_back(o + 3, b.h);
        I.w0.emplace_back(o, b.beta);
        I.w0.emplace_back(o + 3, -b.beta);
        I.wminus.emplace_back(o + 1, -b.beta);
        I.wplus.emplace_back(o + 2, 2 * b.beta);
        break;
      case IBlockKind::mat1:
        labels[o] = "1" + tag;
        I.alg.set_product(o, o, unit(o));
        one.emplace_back(o, 1);
        I.t.emplace_back(o, b.h);
        break;
    }
  }
  I.alg.set_labels(labels);
  I.alg.set_unit(one);
  I.alg.set_generators(basis_vectors(I.alg));
  return I;
}

struct TCenterCheck {
  int center_dim = 0;
  int generated_dim = 0;
  int minpoly_degree = 0;
  bool distinct_weights = false;
  bool t_semisimple = true;  // false when some power of (t - h) on a jordan2 block survives
};

inline TCenterCheck t_center_check(const IAlgebra& I) {
  TCenterCheck out;
  std::vector<Rational> hs;
  for (const auto& b : I.blocks) hs.push_back(b.h);
  std::sort(hs.begin(), hs.end());
  out.distinct_weights = std::adjacent_find(hs.begin(), hs.end()) == hs.end();
  if (!out.distinct_weights) throw ConsistencyError("two blocks of I share a lowest weight");
  out.center_dim = center(I.alg).dim();
  out.generated_dim = subalgebra_generated(I.alg, {I.t});
  out.minpoly_degree = poly_degree(minimal_polynomial(I.alg, I.alg.unit(), I.t));
  for (const auto& b : I.blocks)
    if (b.kind == IBlockKind::jordan2) {
      SparseVec<Rational> e{{b.offset, Rational(1)}};
      SparseVec<Rational> nil = I.alg.mul(e, I.t);
      axpy(nil, Rational(-b.h), e);
      if (!nil.empty()) out.t_semisimple = false;
    }
  return out;
}

struct W0Row {
  int s = 0;
  Rational formula;                       // binom(-s-1, 2p-1)
  Rational model_first, model_second;     // w0 eigenvalues on the mat2 block
  std::optional<Rational> fock;           // Fock zero mode on |lambda_{-s}(0)>, when computed
  bool wplus_matches = true;              // Fock W^+, W^- zero modes equal the model entries
  bool pass = false;
};

struct W0Consistency {
  std::vector<W0Row> rows;
  bool pass = false;
};

/// Compares the w0 element with the generalized binomial and, for s < p when
/// `fock_up_to_p` >= p, with the Fock-side zero modes.
inline W0Consistency w0_consistency(const IAlgebra& I, int fock_up_to_p = 2) {
  W0Consistency out;
  out.pass = true;
  std::optional<FockModel> fm;
  if (I.p <= fock_up_to_p) fm.emplace(I.p);
  for (const auto& b : I.blocks) {
    if (b.kind != IBlockKind::mat2) continue;
    W0Row r;
    r.s = b.s;
    r.formula = generalized_binomial(Rational(-b.s - 1), 2 * I.p - 1);
    r.model_first = sparse_get(I.w0, b.offset);
    r.model_second = sparse_get(I.w0, b.offset + 3);
    r.pass = r.model_first == r.formula && r.model_second == -r.formula;
    if (fm && b.s < I.p) {
      ZeroModeData z = w_zero_modes(*fm, b.s);
      r.fock = z.beta;
      r.wplus_matches = z.invariant && z.w[2](1, 0) == sparse_get(I.wplus, b.offset + 2) &&
                        z.w[0](0, 1) == sparse_get(I.wminus, b.offset + 1) &&
                        z.w[1](1, 1) == r.model_second;
      r.pass = r.pass && *r.fock == r.model_first && r.wplus_matches;
    }
    out.pass = out.pass && r.pass;
    out.rows.push_back(r);
  }
  return out;
}

struct ISimpleRow {
  int s = 0;
  Sign eps = Sign::plus;
  Rational h;
  int simple_dim = 0;
  int projective_dim = 0;
  int self_ext = 0;
};

struct IBlockCategory {
  Decomposition<Rational> dec;
  std::vector<ISimpleRow> simples;  // in decomposition order
  int block_count = 0;
  bool pass = false;
};

/// Eigenvalue of t on a simple I-module (generators of I are its basis).
inline Rational t_eigenvalue(const IAlgebra& I, const FdModule<Rational>& S) {
  Matrix<Rational> m(S.dim, S.dim);
  for (const auto& [b, c] : I.t) {
    Matrix<Rational> a = S.action[b];
    a *= c;
    m += a;
  }
  Rational h = m(0, 0);
  for (int i = 0; i < S.dim; ++i)
    if (m(i, i) != h) throw ConsistencyError("t is not scalar on a simple module");
  return h;
}

inline IBlockCategory I_block_category_check(const IAlgebra& I) {
  IBlockCategory out;
  out.dec = decompose(I.alg);
  const auto& D = out.dec;
  out.block_count = D.block_count();
  out.pass = D.blocks_agree && D.bookkeeping && out.block_count == 2 * I.p && D.simple_count() == 2 * I.p;
  for (int i = 0; i < D.simple_count(); ++i) {
    ISimpleRow r;
    r.h = t_eigenvalue(I, D.simples[i]);
    const IBlock* blk = nullptr;
    for (const auto& b : I.blocks)
      if (b.h == r.h) blk = &b;
    if (!blk) throw ConsistencyError("simple I-module with an unexpected weight");
    r.s = blk->s;
    r.eps = blk->eps;
    r.simple_dim = D.simples[i].dim;
    r.projective_dim = D.projectives[i].dim;
    r.self_ext = D.ext1[i][i];
    bool local = blk->kind == IBlockKind::jordan2;
    out.pass = out.pass && r.self_ext == (local ? 1 : 0) && r.projective_dim == (local ? 2 : r.simple_dim) &&
               r.simple_dim == (blk->kind == IBlockKind::mat2 ? 2 : 1);
    out.simples.push_back(r);
  }
  return out;
}

}  // namespace tqg
