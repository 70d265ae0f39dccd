/**
 * @file correspondence.hpp
 * @brief Cross-side checks between the triplet algebra (Fock, characters, Zhu model) and the
 * restricted quantum group, collected into a deterministic VerificationReport.
 */
#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tqg/characters.hpp"
#include "tqg/log_module.hpp"
#include "tqg/triplet.hpp"
#include "tqg/uqsl2.hpp"
#include "tqg/zhu.hpp"

namespace tqg {

enum class Status { pass, fail, skipped, info, error };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::info: return "info";
    default: return "error";
  }
}

/// How the expected value was obtained.
namespace basis {
inline constexpr const char* closed_form = "closed form";
inline constexpr const char* independent = "independent computation";
inline constexpr const char* structural = "structural";
}  // namespace basis

struct CheckRow {
  std::string id;
  std::string group;
  std::string anchor;  // the claim being checked, in words
  std::string computed;
  std::string expected;
  std::string basis;
  Status status = Status::pass;
  double runtime_ms = 0;
};

struct RunConfig {
  int p = 2;
  std::optional<int> s;
  int cutoff = 20;
  int fock_trunc = 8;
  std::uint64_t seed = 1;
  long assoc_samples = 10000;
  bool parallel = true;
};

/// Fock truncation actually used: the configured D, capped at 4 for p >= 4.
inline int effective_fock_trunc(const RunConfig& c) { return c.p >= 4 ? std::min(c.fock_trunc, 4) : c.fock_trunc; }

inline void validate(const RunConfig& c) {
  if (c.p < 2) throw ParameterError("p must be at least 2");
  if (c.cutoff < 1) throw ParameterError("cutoff must be at least 1");
  if (c.fock_trunc < 0) throw ParameterError("fock truncation must be non-negative");
  if (c.s && (*c.s < 1 || *c.s > c.p)) throw ParameterError("s must satisfy 1 <= s <= p");
  if (c.assoc_samples < 1) throw ParameterError("associativity sample count must be positive");
}

struct VerificationReport {
  static constexpr int schema_version = 1;
  RunConfig config;
  int fock_trunc_used = 0;
  std::vector<CheckRow> rows;

  bool global_pass() const {
    for (const auto& r : rows)
      if (r.status == Status::fail || r.status == Status::error) return false;
    return true;
  }
  bool has_error() const {
    for (const auto& r : rows)
      if (r.status == Status::error) return true;
    return false;
  }
};

namespace detail {

template <class X>
std::string show(const X& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string show(const std::vector<std::vector<int>>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + show(m[i]);
  return s + "]";
}

inline std::string show(bool b) { return b ? "true" : "false"; }

/// Appends rows for one group and times each check.
class GroupWriter {
 public:
  GroupWriter(std::string group, std::vector<CheckRow>& rows) : group_(std::move(group)), rows_(rows) {}

  struct Outcome {
    std::string computed, expected;
    bool pass = false;
  };

  void check(const std::string& id, const std::string& anchor, const char* basis,
             const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRow r{id, group_, anchor, "", "", basis};
    try {
      Outcome o = f();
      r.computed = o.computed;
      r.expected = o.expected;
      r.status = o.pass ? Status::pass : Status::fail;
    } catch (const std::exception& e) {
      r.computed = std::string("exception: ") + e.what();
      r.status = Status::error;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rows_.push_back(std::move(r));
  }

  void note(const std::string& id, const std::string& anchor, const char* basis, Status st, std::string computed,
            std::string expected = "") {
    rows_.push_back({id, group_, anchor, std::move(computed), std::move(expected), basis, st, 0});
  }

  void fail_group(const std::string& id, const std::exception& e) {
    rows_.push_back({id, group_, "group setup", std::string("exception: ") + e.what(), "", basis::structural,
                     Status::error, 0});
  }

 private:
  std::string group_;
  std::vector<CheckRow>& rows_;
};

template <class X>
GroupWriter::Outcome eq(const X& computed, const X& expected) {
  return {show(computed), show(expected), computed == expected};
}

}  // namespace detail

/// [p] = 0 and [p + n] = -[n] for n = 0..2p.
inline void verify_quantum_integers(int p, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("quantum_integers", rows);
  g.check("qint.p", "[p] vanishes at q = e^{i pi/p}", basis::closed_form,
          [&] { return detail::eq(quantum_int(p, p).str(), std::string("0")); });
  g.check("qint.shift", "[p+n] = -[n] for n = 0..2p", basis::closed_form, [&] {
    int good = 0;
    for (int n = 0; n <= 2 * p; ++n)
      if (quantum_int(p + n, p) == Cyclo(-1) * quantum_int(n, p)) ++good;
    return detail::eq(good, 2 * p + 1);
  });
}

inline void verify_uq_construction(const UqAlgebra& U, const RunConfig& cfg, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("uq_construction", rows);
  int p = U.p;
  g.check("uq.dim", "the PBW basis E^i K^j F^k has 2p^3 elements", basis::closed_form,
          [&] { return detail::eq(U.alg.dim(), 2 * p * p * p); });
  if (p == 2)
    g.check("uq.assoc", "associativity on every basis triple", basis::independent,
            [&] { return detail::eq(check_associativity(U.alg), true); });
  else
    g.check("uq.assoc", "associativity on " + std::to_string(cfg.assoc_samples) + " sampled basis triples",
            basis::independent,
            [&] { return detail::eq(check_associativity(U.alg, cfg.assoc_samples, cfg.seed), true); });
  g.check("uq.ef", "EF - FE = (K - K^-1)/(q - q^-1) in normal form", basis::closed_form,
          [&] { return detail::eq(ef_relation_holds(U), true); });
  g.check("uq.kgrade", "K x K^-1 = q^{2(i-k)} x on PBW monomials", basis::closed_form,
          [&] { return detail::eq(k_grading_holds(U), true); });
  g.check("uq.trunc", "E^p = F^p = 0 and K^{2p} = 1", basis::closed_form,
          [&] { return detail::eq(truncation_relations_hold(U), true); });
}

/// Simple and block counts on both sides.
inline void verify_counts(int p, const UqStructure& S, const IBlockCategory& C, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("counts", rows);
  g.check("counts.uq_simples", "the quantum group has 2p simple modules", basis::closed_form,
          [&] { return detail::eq(S.dec.simple_count(), 2 * p); });
  g.check("counts.uq_dims", "simple dimensions are {1,1,2,2,...,p,p}", basis::closed_form, [&] {
    std::vector<int> dims, expect;
    for (const auto& x : S.simples) dims.push_back(x.dim);
    std::sort(dims.begin(), dims.end());
    for (int s = 1; s <= p; ++s) expect.insert(expect.end(), {s, s});
    return detail::eq(dims, expect);
  });
  g.check("counts.zhu_simples", "the Zhu model has 2p simple modules", basis::closed_form,
          [&] { return detail::eq(C.dec.simple_count(), 2 * p); });
  g.check("counts.simples_match", "simple counts agree across the two sides", basis::independent,
          [&] { return detail::eq(S.dec.simple_count(), C.dec.simple_count()); });
  g.check("counts.uq_blocks", "the quantum group has p+1 blocks", basis::closed_form,
          [&] { return detail::eq(static_cast<int>(S.blocks.size()), p + 1); });
  g.check("counts.uq_semisimple", "exactly two quantum group blocks are semisimple singletons", basis::closed_form,
          [&] {
            int n = 0;
            for (const auto& b : S.blocks)
              if (b.semisimple && b.members.size() == 1) ++n;
            return detail::eq(n, 2);
          });
  // triplet side: X_s^+ and X_s^- share a block for s < p; X_p^+ and X_p^- are alone
  g.check("counts.wp_blocks", "triplet blocks from the Zhu simples number p+1, two of them semisimple",
          basis::structural, [&] {
            std::map<int, int> groups;
            for (const auto& r : C.simples) {
              int key = r.s < p ? r.s : (r.eps == Sign::plus ? p : 0);
              groups[key]++;
            }
            int singles = 0;
            for (const auto& [k, n] : groups)
              if (n == 1) ++singles;
            return detail::GroupWriter::Outcome{std::to_string(groups.size()) + " blocks, " + std::to_string(singles) +
                                                    " semisimple",
                                                std::to_string(p + 1) + " blocks, 2 semisimple",
                                                static_cast<int>(groups.size()) == p + 1 && singles == 2};
          });
}

inline void verify_ext_and_cartan(const UqStructure& S, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("ext_and_cartan", rows);
  const std::vector<std::vector<int>> ext{{0, 2}, {2, 0}}, cartan{{2, 2}, {2, 2}};
  std::optional<UqBlock> first;
  for (size_t b = 0; b < S.blocks.size(); ++b) {
    const UqBlock& blk = S.blocks[b];
    std::string tag = "block" + std::to_string(b) + "(" + detail::show(blk.simple_dims) + ")";
    if (blk.members.size() == 1) {
      g.check("ext." + tag, "a semisimple block has no self-extensions", basis::closed_form,
              [&] { return detail::eq(blk.ext1, std::vector<std::vector<int>>{{0}}); });
      continue;
    }
    g.check("ext." + tag, "Ext^1 between X^eps and X^eps is 0 and between X^+ and X^- is 2-dimensional",
            basis::closed_form, [&] { return detail::eq(blk.ext1, ext); });
    g.check("cartan." + tag, "each projective cover has composition factors 2 X^+ + 2 X^-", basis::closed_form,
            [&] { return detail::eq(blk.cartan, cartan); });
    g.check("projdim." + tag, "both projective covers have dimension 2p", basis::closed_form,
            [&] { return detail::eq(blk.projective_dims, std::vector<int>{2 * S.p, 2 * S.p}); });
    if (first)
      g.check("ext.same." + tag, "all two-simple blocks have identical Ext and Cartan matrices",
              basis::independent, [&] { return detail::eq(blk.ext1 == first->ext1 && blk.cartan == first->cartan, true); });
    else
      first = blk;
  }
  g.check("cartan.routes", "Cartan entries from Hom(P_i, P_j) equal corner dimensions e_i A e_j",
          basis::independent, [&] { return detail::eq(S.dec.cartan == S.dec.cartan_corner, true); });
}

/// End(P+ (+) P-) against the 8-dimensional quiver presentation, per two-simple block.
inline void verify_basic_algebra(const UqStructure& S, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("basic_algebra", rows);
  for (size_t b = 0; b < S.blocks.size(); ++b) {
    if (S.blocks[b].members.size() != 2) continue;
    std::string tag = "block" + std::to_string(b) + "(" + detail::show(S.blocks[b].simple_dims) + ")";
    std::optional<UqBasicAlgebra> B;
    g.check("basic.dim." + tag, "End(P+ (+) P-) is 8-dimensional", basis::closed_form, [&] {
      B = uq_basic_algebra(S, static_cast<int>(b));
      return detail::eq(B->end.alg.dim(), 8);
    });
    if (!B) continue;
    g.check("basic.hom." + tag, "the four Hom blocks are each 2-dimensional", basis::closed_form, [&] {
      std::vector<int> h(B->hom_dims.begin(), B->hom_dims.end());
      return detail::eq(h, std::vector<int>{2, 2, 2, 2});
    });
    g.check("basic.witness." + tag, "a witness basis satisfying the quiver relations exists", basis::independent,
            [&] {
              return detail::GroupWriter::Outcome{B->witness.found ? "found" : B->witness.failure, "found",
                                                  B->witness.found};
            });
    g.check("basic.iso." + tag, "the witness basis is an algebra isomorphism onto the presentation",
            basis::independent, [&] { return detail::eq(B->witness.isomorphism, true); });
    g.note("basic.loewy." + tag, "radical power dimensions J, J^2, ...", basis::structural, Status::info,
           detail::show(B->radical_powers));
  }
}

inline void verify_zhu(const IAlgebra& I, const IBlockCategory& C, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("zhu", rows);
  int p = I.p;
  g.check("zhu.dim", "dim I = 6p - 1", basis::closed_form, [&] { return detail::eq(I.alg.dim(), 6 * p - 1); });
  g.check("zhu.assoc", "I is associative with unit", basis::independent,
          [&] { return detail::eq(check_associativity(I.alg) && check_unit(I.alg), true); });
  std::optional<TCenterCheck> tc;
  g.check("zhu.center", "the center of I has dimension 3p - 1", basis::closed_form, [&] {
    tc = t_center_check(I);
    return detail::eq(tc->center_dim, 3 * p - 1);
  });
  if (tc) {
    g.check("zhu.center_t", "the center is generated by the image of T(0)", basis::independent,
            [&] { return detail::eq(tc->generated_dim, tc->center_dim); });
    g.check("zhu.t_nonsemisimple", "T(0) acts non-semisimply on I", basis::structural,
            [&] { return detail::eq(!tc->t_semisimple, true); });
  }
  g.check("zhu.blocks", "I has 2p blocks; local blocks at X_s^+ (s < p) carry one self-extension",
          basis::independent, [&] { return detail::eq(C.pass, true); });
  g.note("zhu.w_images", "images of the W zero modes in I", basis::structural, Status::info,
         "on each (s,-) block with b = binom(-s-1, 2p-1): w0 = diag(b, -b), w+ = 2b e21, w- = -b e12; "
         "zero on the other blocks");
  g.check("zhu.w0", "W^0 acts on the top of X_s^- by +-binom(-s-1, 2p-1)", basis::closed_form,
          [&] { return detail::eq(w0_consistency(I, 0).pass, true); });
}

inline void verify_characters(int p, int N, std::optional<int> only_s, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("characters", rows);
  for (int s = 1; s <= p; ++s) {
    if (only_s && *only_s != s) continue;
    std::vector<IdentityCheck> ids;
    g.check("char.s" + std::to_string(s) + ".count", "identities evaluated at cutoff " + std::to_string(N),
            basis::structural, [&] {
              ids = character_identities(p, s, N);
              return detail::eq(static_cast<int>(ids.size()), s < p ? 3 : 2);
            });
    for (size_t i = 0; i < ids.size(); ++i)
      g.check("char.s" + std::to_string(s) + "." + std::to_string(i), ids[i].name + " (s=" + std::to_string(s) + ")",
              basis::independent, [&] { return detail::eq(ids[i].holds, true); });
  }
}

/// The single Fock log module cases checked at p: both signs at p = 2, minus-type s = 1 otherwise.
inline std::vector<std::pair<int, Sign>> log_module_cases(int p) {
  if (p == 2) return {{1, Sign::plus}, {1, Sign::minus}};
  return {{1, Sign::minus}};
}

inline void verify_fock_side(int p, int D, const IAlgebra* I, std::vector<CheckRow>& rows) {
  detail::GroupWriter g("fock_side", rows);
  if (D == 0) {
    for (const char* id : {"fock.kernel", "fock.singular", "fock.vanishing", "fock.log", "fock.zero_modes"})
      g.note(id, "Fock-side checks", basis::independent, Status::skipped, "fock truncation is 0");
    return;
  }
  g.check("fock.kernel", "graded dims of ker Q_- on V_L match ch X_1^+ at levels 0.." + std::to_string(D),
          basis::independent, [&] {
            auto prof = wp_graded_profile(p, D);
            auto ch = wp_simple_char(p, 1, Sign::plus, D);
            std::vector<int> a, b;
            for (int d = 0; d <= D; ++d) {
              a.push_back(static_cast<int>(prof[d]));
              b.push_back(static_cast<int>(to_long(ch.coeffs[d])));
            }
            return detail::eq(a, b);
          });
  FockModel fm(p);
  for (int s = 1; s < p; ++s) {
    std::string tag = ".s" + std::to_string(s);
    g.check("fock.singular" + tag, "Q_+|lambda_{-s}(0)> is a nonzero Virasoro singular vector", basis::independent,
            [&] {
              FockState v = qplus_power(fm, -s, 0, 1);
              return detail::eq(!v.is_zero() && is_virasoro_singular(fm, v), true);
            });
    g.check("fock.eta" + tag, "the Verma singular vector eta_s is unique and proportional to the Q_+ image",
            basis::independent, [&] {
              auto e = verma_singular_vector(fm, s);
              return detail::eq(e.solution_dim == 1 && e.ratio_to_qplus.has_value(), true);
            });
  }
  if (p <= 3)
    g.check("fock.vanishing", "Q_+ kills |lambda_s(n)> for n = 0, 1; Q_+^2 survives and Q_+^3 vanishes at n = -1",
            basis::independent, [&] {
              bool ok = true;
              for (int s = 1; s <= p; ++s) {
                for (long n = 0; n <= 1; ++n) ok = ok && qplus_power(fm, s, n, 1).is_zero();
                ok = ok && !qplus_power(fm, s, -1, 2).is_zero() && qplus_power(fm, s, -1, 3).is_zero();
              }
              return detail::eq(ok, true);
            });
  int Dl = std::min(D, 4);
  for (auto [s, sign] : log_module_cases(p)) {
    std::string tag = ".s" + std::to_string(s) + sign_char(sign);
    std::optional<LogModuleModel> m;
    g.check("fock.log.jordan" + tag, "T(0) has Jordan length 1 on the logarithmic module", basis::independent, [&] {
      m.emplace(p, s, sign, Dl);
      return detail::eq(jordan_length(*m, 0, Dl), 1);
    });
    if (!m) continue;
    g.check("fock.log.undeformed" + tag, "the undeformed module has diagonal L_0", basis::independent,
            [&] { return detail::eq(jordan_length(*m, 0, Dl, false), 0); });
    g.check("fock.log.nilsq" + tag, "(T(0) - h)^2 = 0 with T(0) - h nonzero on the degenerate weight space",
            basis::independent, [&] {
              bool sq = true, nonzero = false;
              for (int k = 0; k <= Dl; ++k) {
                auto n = m->nilpotent_part(k);
                sq = sq && (n * n).is_zero();
                nonzero = nonzero || !n.is_zero();
              }
              return detail::eq(sq && nonzero, true);
            });
    g.check("fock.log.virasoro" + tag, "deformed modes satisfy the Virasoro relations up to truncation",
            basis::independent, [&] { return detail::eq(deformed_virasoro_relations(*m, 2, std::min(Dl, 2)), true); });
    g.check("fock.log.relations" + tag, "top-level relations hold up to a nonzero scalar", basis::closed_form, [&] {
      bool ok = true;
      std::string values;
      for (const auto& r : log_relations(*m)) {
        ok = ok && r.holds && (!r.scalar || *r.scalar != 0);
        values += (values.empty() ? "" : "; ") + r.name + (r.holds ? " holds" : " fails");
        if (r.scalar) values += ", c = " + r.scalar->get_str();
      }
      return detail::GroupWriter::Outcome{values, "all hold, constants nonzero", ok};
    });
  }
  if (p <= 3 && I) {
    g.check("fock.zero_modes", "Fock W zero modes on the top of X_s^- equal the Zhu model's w0, w+, w-",
            basis::independent, [&] {
              W0Consistency w = w0_consistency(*I, p);
              std::string c;
              for (const auto& r : w.rows)
                if (r.fock) c += (c.empty() ? "" : ",") + r.fock->get_str();
              std::string e;
              for (const auto& r : w.rows)
                if (r.fock) e += (e.empty() ? "" : ",") + r.model_first.get_str();
              return detail::GroupWriter::Outcome{c, e, w.pass};
            });
  }
}

/// Runs every group. Groups on independent pipelines run concurrently; rows are assembled in a fixed order.
inline VerificationReport run_verification(const RunConfig& cfg) {
  validate(cfg);
  VerificationReport rep;
  rep.config = cfg;
  rep.fock_trunc_used = effective_fock_trunc(cfg);
  int p = cfg.p;
  auto policy = cfg.parallel ? std::launch::async : std::launch::deferred;

  std::vector<CheckRow> r_q, r_uq, r_counts, r_ext, r_basic, r_zhu, r_char, r_fock;
  std::optional<UqStructure> S;
  std::optional<IAlgebra> I;
  std::optional<IBlockCategory> C;

  auto uq_task = std::async(policy, [&] {
    detail::GroupWriter g("uq_construction", r_uq);
    try {
      UqAlgebra U = build_uq(p);
      verify_uq_construction(U, cfg, r_uq);
      S = uq_block_report(U);
    } catch (const std::exception& e) {
      g.fail_group("uq.setup", e);
    }
  });
  auto zhu_task = std::async(policy, [&] {
    detail::GroupWriter g("zhu", r_zhu);
    try {
      I = build_I(p);
      C = I_block_category_check(*I);
      verify_zhu(*I, *C, r_zhu);
    } catch (const std::exception& e) {
      g.fail_group("zhu.setup", e);
    }
  });
  auto char_task = std::async(policy, [&] { verify_characters(p, cfg.cutoff, cfg.s, r_char); });
  verify_quantum_integers(p, r_q);
  uq_task.get();
  zhu_task.get();
  // the Fock pipeline reads the Zhu model for the zero-mode comparison
  auto fock_task = std::async(policy, [&] {
    detail::GroupWriter g("fock_side", r_fock);
    try {
      verify_fock_side(p, rep.fock_trunc_used, I ? &*I : nullptr, r_fock);
    } catch (const std::exception& e) {
      g.fail_group("fock.setup", e);
    }
  });
  if (S && C) verify_counts(p, *S, *C, r_counts);
  if (S) {
    verify_ext_and_cartan(*S, r_ext);
    verify_basic_algebra(*S, r_basic);
  }
  char_task.get();
  fock_task.get();

  for (auto* v : {&r_q, &r_uq, &r_counts, &r_ext, &r_basic, &r_zhu, &r_char, &r_fock})
    rep.rows.insert(rep.rows.end(), v->begin(), v->end());
  return rep;
}

}  // namespace tqg
