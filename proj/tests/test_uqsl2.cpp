#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>

#include "tqg/uqsl2.hpp"

using namespace tqg;

namespace {

// Words over E, F, K, k (k = K^-1) rewritten straight from the defining relations.
using WordPoly = std::map<std::string, Cyclo>;

void add_term(WordPoly& f, const std::string& w, const Cyclo& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = f.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) f.erase(it);
  }
}

// One rewrite of the leftmost reducible spot; false when w is already normal.
bool rewrite(const std::string& w, const Cyclo& c, int p, WordPoly& out) {
  Cyclo q = Cyclo::q(p);
  std::string Ep(p, 'E'), Fp(p, 'F'), K2p(2 * p, 'K'), k2p(2 * p, 'k');
  for (size_t i = 0; i < w.size(); ++i) {
    auto at = [&](const std::string& pat) { return w.compare(i, pat.size(), pat) == 0; };
    auto splice = [&](size_t len, const std::string& rep) { return w.substr(0, i) + rep + w.substr(i + len); };
    if (at(Ep) || at(Fp)) return true;  // term vanishes
    if (at(K2p) || at(k2p)) {
      add_term(out, splice(2 * p, ""), c);
      return true;
    }
    if (at("Kk") || at("kK")) {
      add_term(out, splice(2, ""), c);
      return true;
    }
    if (at("KE")) {
      add_term(out, splice(2, "EK"), c * q * q);
      return true;
    }
    if (at("kE")) {
      add_term(out, splice(2, "Ek"), c * q.inverse() * q.inverse());
      return true;
    }
    if (at("FK")) {
      add_term(out, splice(2, "KF"), c * q * q);
      return true;
    }
    if (at("Fk")) {
      add_term(out, splice(2, "kF"), c * q.inverse() * q.inverse());
      return true;
    }
    if (at("FE")) {
      Cyclo inv = Cyclo(1) / (q - q.inverse());
      add_term(out, splice(2, "EF"), c);
      add_term(out, splice(2, "K"), Cyclo(-1) * c * inv);
      add_term(out, splice(2, "k"), c * inv);
      return true;
    }
  }
  return false;
}

WordPoly normalize(WordPoly f, int p) {
  while (true) {
    WordPoly next;
    bool changed = false;
    for (const auto& [w, c] : f)
      if (rewrite(w, c, p, next)) changed = true;
      else add_term(next, w, c);
    f = std::move(next);
    if (!changed) return f;
  }
}

std::string word_of(int p, int idx) {
  PBWMonomial m = pbw_monomial(p, idx);
  return std::string(m.i, 'E') + std::string(m.j, 'K') + std::string(m.k, 'F');
}

UqElement element_of(const WordPoly& f, int p) {
  std::map<int, Cyclo> acc;
  for (const auto& [w, c] : f) {
    int i = 0, j = 0, k = 0;
    for (char ch : w) {
      if (ch == 'E') ++i;
      if (ch == 'K') ++j;
      if (ch == 'k') --j;
      if (ch == 'F') ++k;
    }
    int idx = pbw_index(p, i, ((j % (2 * p)) + 2 * p) % (2 * p), k);
    auto [it, fresh] = acc.emplace(idx, c);
    if (!fresh) it->second += c;
  }
  UqElement v;
  for (const auto& [idx, c] : acc)
    if (!is_zero(c)) v.emplace_back(idx, c);
  return v;
}

bool matches_rewriting(const UqAlgebra& U, int x, int y) {
  WordPoly f;
  add_term(f, word_of(U.p, x) + word_of(U.p, y), Cyclo(1));
  return element_of(normalize(f, U.p), U.p) == U.alg.product(x, y);
}

}  // namespace

TEST_CASE("PBW indexing") {
  for (int p = 2; p <= 4; ++p)
    for (int x = 0; x < 2 * p * p * p; ++x) {
      PBWMonomial m = pbw_monomial(p, x);
      CHECK(pbw_index(p, m.i, m.j, m.k) == x);
    }
}

TEST_CASE("defining relations") {
  for (int p = 2; p <= 5; ++p) {
    UqAlgebra U = build_uq(p);
    CHECK(U.alg.dim() == 2 * p * p * p);
    CHECK(ef_relation_holds(U));
    CHECK(k_grading_holds(U));
    CHECK(truncation_relations_hold(U));
    CHECK(U.alg.product(pbw_index(p, 1, 0, 0), pbw_index(p, p - 1, 0, 0)).empty());
    CHECK(check_unit(U.alg));
  }
}

TEST_CASE("products agree with word rewriting") {
  UqAlgebra U2 = build_uq(2);
  for (int x = 0; x < U2.alg.dim(); ++x)
    for (int y = 0; y < U2.alg.dim(); ++y) CHECK(matches_rewriting(U2, x, y));
  UqAlgebra U3 = build_uq(3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, U3.alg.dim() - 1);
  for (int t = 0; t < 150; ++t) CHECK(matches_rewriting(U3, pick(rng), pick(rng)));
  // the hardest straightening: F^{p-1} E^{p-1}
  CHECK(matches_rewriting(U3, pbw_index(3, 0, 0, 2), pbw_index(3, 2, 0, 0)));
}

TEST_CASE("associativity") {
  CHECK(check_associativity(build_uq(2).alg));
  CHECK(check_associativity(build_uq(3).alg, 2000, 5));
}

TEST_CASE("simples, projectives and blocks") {
  for (int p = 2; p <= 3; ++p) {
    UqAlgebra U = build_uq(p);
    UqStructure S = uq_block_report(U);
    const auto& D = S.dec;
    // Wedderburn: dim A/rad = 2 (1^2 + ... + p^2)
    CHECK(U.alg.dim() - D.radical.dim() == p * (p + 1) * (2 * p + 1) / 3);
    REQUIRE(D.simple_count() == 2 * p);
    std::vector<int> dims;
    for (const auto& s : S.simples) dims.push_back(s.dim);
    std::sort(dims.begin(), dims.end());
    std::vector<int> expect;
    for (int s = 1; s <= p; ++s) expect.insert(expect.end(), {s, s});
    CHECK(dims == expect);
    for (int s = 1; s <= p; ++s) {
      int plus = 0, minus = 0;
      for (const auto& x : S.simples)
        if (x.dim == s) (x.sign > 0 ? plus : minus)++;
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
    CHECK(D.bookkeeping);
    CHECK(D.blocks_agree);
    CHECK(D.cartan == D.cartan_corner);
    CHECK(static_cast<int>(S.blocks.size()) == p + 1);
    int singletons = 0;
    for (const auto& b : S.blocks) {
      if (b.members.size() == 1) {
        ++singletons;
        CHECK(b.semisimple);
        CHECK(b.simple_dims[0] == p);
        CHECK(b.cartan == std::vector<std::vector<int>>{{1}});
        continue;
      }
      CHECK(b.simple_dims[0] + b.simple_dims[1] == p);
      CHECK(b.projective_dims == std::vector<int>{2 * p, 2 * p});
      CHECK(b.cartan == std::vector<std::vector<int>>{{2, 2}, {2, 2}});
      CHECK(b.ext1 == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
    }
    CHECK(singletons == 2);
    for (int i = 0; i < D.simple_count(); ++i)
      for (int j = 0; j < D.simple_count(); ++j) {
        CHECK(hom_space(D.simples[i], D.simples[j]).dim() == (i == j ? 1 : 0));
        if (S.simples[i].block != S.simples[j].block) CHECK(D.ext1[i][j] == 0);
      }
  }
}

TEST_CASE("basic algebras of the two-simple blocks") {
  for (int p = 2; p <= 3; ++p) {
    UqStructure S = uq_block_report(build_uq(p));
    for (int b = 0; b < static_cast<int>(S.blocks.size()); ++b) {
      if (S.blocks[b].members.size() != 2) continue;
      UqBasicAlgebra B = uq_basic_algebra(S, b);
      CHECK(B.end.alg.dim() == 8);
      CHECK(check_associativity(B.end.alg));
      CHECK(B.hom_dims == std::array<int, 4>{2, 2, 2, 2});
      CHECK(B.witness.found);
      CHECK(B.witness.isomorphism);
      CHECK(B.radical_powers == std::vector<int>{6, 2, 0});
    }
  }
  UqStructure S2 = uq_block_report(build_uq(2));
  int single = 0;
  while (S2.blocks[single].members.size() != 1) ++single;
  CHECK_THROWS_AS(uq_basic_algebra(S2, single), ParameterError);
}
