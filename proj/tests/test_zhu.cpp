#include <catch2/catch_amalgamated.hpp>

#include "tqg/zhu.hpp"

using namespace tqg;

TEST_CASE("dimension and block kinds") {
  for (int p = 2; p <= 6; ++p) {
    IAlgebra I = build_I(p);
    CHECK(I.alg.dim() == 6 * p - 1);
    CHECK(static_cast<int>(I.blocks.size()) == 2 * p);
    int j2 = 0, m2 = 0, m1 = 0;
    for (const auto& b : I.blocks) (b.kind == IBlockKind::jordan2 ? j2 : b.kind == IBlockKind::mat2 ? m2 : m1)++;
    CHECK(j2 == p - 1);
    CHECK(m2 == p);
    CHECK(m1 == 1);
    CHECK(check_associativity(I.alg));
    CHECK(check_unit(I.alg));
  }
  CHECK(build_I(2).alg.dim() == 11);
  CHECK(build_I(5).alg.dim() == 29);
  CHECK_THROWS_AS(build_I(1), ParameterError);
}

TEST_CASE("block weights") {
  IAlgebra I = build_I(2);
  // W(2): 0, -1/8 for the + blocks, 1 and 3/8 for the - blocks
  std::vector<Rational> hs;
  for (const auto& b : I.blocks) hs.push_back(b.h);
  CHECK(hs == std::vector<Rational>{Rational(0), Rational(1), Rational(-1, 8), Rational(3, 8)});
}

TEST_CASE("center generated by t") {
  for (int p = 2; p <= 6; ++p) {
    IAlgebra I = build_I(p);
    TCenterCheck c = t_center_check(I);
    // blockwise: jordan2 centers are 2-dim, matrix blocks 1-dim
    int blockwise = 2 * (p - 1) + (p - 1) + 1 + 1;
    CHECK(c.center_dim == blockwise);
    CHECK(c.center_dim == 3 * p - 1);
    CHECK(c.generated_dim == c.center_dim);
    CHECK(c.minpoly_degree == 3 * p - 1);
    CHECK(c.distinct_weights);
    CHECK_FALSE(c.t_semisimple);
  }
  CHECK(t_center_check(build_I(2)).center_dim == 5);
  CHECK(t_center_check(build_I(3)).center_dim == 8);
}

TEST_CASE("w0 element") {
  // binom(-2, 3) = (-2)(-3)(-4)/6 and binom(-2, 5) = (-2)(-3)(-4)(-5)(-6)/120
  IAlgebra I2 = build_I(2), I3 = build_I(3);
  W0Consistency w2 = w0_consistency(I2);
  REQUIRE(!w2.rows.empty());
  CHECK(w2.rows[0].s == 1);
  CHECK(w2.rows[0].model_first == -4);
  REQUIRE(w2.rows[0].fock.has_value());
  CHECK(*w2.rows[0].fock == -4);
  CHECK(w2.pass);
  W0Consistency w3 = w0_consistency(I3, 3);
  CHECK(w3.rows[0].model_first == -6);
  CHECK(w3.pass);
  for (const auto& r : w3.rows) CHECK(r.model_first + r.model_second == 0);
  W0Consistency w4 = w0_consistency(build_I(4), 0);
  CHECK(w4.pass);
  for (const auto& r : w4.rows) CHECK_FALSE(r.fock.has_value());
}

TEST_CASE("block category of I") {
  for (int p = 2; p <= 4; ++p) {
    IAlgebra I = build_I(p);
    IBlockCategory c = I_block_category_check(I);
    CHECK(c.pass);
    CHECK(c.block_count == 2 * p);
    CHECK(c.dec.radical.dim() == p - 1);
    CHECK(c.dec.radical_routes_agree == std::optional<bool>(true));
    for (const auto& r : c.simples) {
      if (r.eps == Sign::plus && r.s < p) {
        CHECK(r.self_ext == 1);
        CHECK(r.projective_dim == 2);
        CHECK(r.simple_dim == 1);
      } else {
        CHECK(r.self_ext == 0);
        CHECK(r.projective_dim == r.simple_dim);
      }
    }
  }
  CHECK(radical(build_I(2).alg).dim() == 1);
}
