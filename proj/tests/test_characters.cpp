#include <catch2/catch_amalgamated.hpp>

#include "tqg/characters.hpp"

using namespace tqg;

namespace {

// Closed form for h of lambda_s(n), written independently of the library.
Rational oracle_h(int p, int s, long n) {
  Integer a = 2 * n * p + s - p;
  Rational h(a * a - Integer((p - 1) * (p - 1)), Integer(4 * p));
  h.canonicalize();
  return h;
}

// Partitions of n by brute recursion on the largest part.
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

std::vector<long> ints(const QSeries& s, int upto) {
  std::vector<long> out;
  for (int d = 0; d <= upto; ++d) out.push_back(to_long(s.coeffs[d]));
  return out;
}

}  // namespace

TEST_CASE("model constants") {
  for (int p = 2; p <= 6; ++p) {
    ModelParams mp(p);
    CHECK(mp.alpha_plus * mp.alpha_minus == QuadExt(-2));
    CHECK(mp.central_charge == 13 - 6 * (Rational(p) + make_rational(1, p)));
  }
  CHECK(ModelParams(2).central_charge == -2);
}

TEST_CASE("weight_of") {
  ModelParams mp2(2);
  CHECK(weight_of(Momentum::lambda(2, 1, 0), mp2) == 0);
  CHECK(weight_of(Momentum::lambda(2, 2, 0), mp2) == make_rational(-1, 8));
  for (int p = 2; p <= 5; ++p) {
    ModelParams mp(p);
    for (int s = -p; s <= 2 * p; ++s)
      for (long n = -3; n <= 3; ++n) {
        Momentum lam = Momentum::lambda(p, s, n);
        CHECK(weight_of(lam, mp) == oracle_h(p, s, n));
        // h_lambda = h_{alpha_0 - lambda}; alpha_0 = (1 - p) alpha_-
        Momentum dual = Momentum::from_r(Rational(1 - p) - lam.r);
        CHECK(weight_of(dual, mp) == weight_of(lam, mp));
      }
  }
}

TEST_CASE("weight table") {
  WeightTable t2(2, 4);
  std::vector<Rational> expect = {0, 1, 3, 6, 10};
  for (int n = 0; n <= 4; ++n) CHECK(t2.h(1, n) == expect[n]);
  CHECK(WeightTable(3, 2).h(0, 0) == make_rational(5, 12));
  for (int p = 2; p <= 5; ++p) {
    WeightTable t(p, 6);
    for (int s = 0; s <= p; ++s)
      for (int n = 0; n <= 6; ++n) {
        Momentum rep = h_representative(p, s, n);
        CHECK(t.h(s, n) == oracle_h(p, rep.tag->s, rep.tag->n));
      }
    for (int s = p; s > 0; --s) CHECK(t.h(s, 0) < t.h(s - 1, 0));
    CHECK(t.h(p, 0) == make_rational(-(p - 1) * (p - 1), 4 * p));
  }
}

TEST_CASE("verma and fock characters") {
  QSeries v = verma_char(make_rational(3, 7), 4);
  CHECK(v.offset == make_rational(3, 7));
  CHECK(ints(v, 4) == std::vector<long>{1, 1, 2, 3, 5});
  ModelParams mp(3);
  Momentum lam = Momentum::lambda(3, 2, 1);
  CHECK(fock_char(lam, mp, 10) == verma_char(weight_of(lam, mp), 10));
}

TEST_CASE("irreducible characters") {
  QSeries l = irr_char(2, 1, 0, 5);
  CHECK(l.offset == 0);
  CHECK(l.coeffs[0] == 1);
  CHECK(l.coeffs[1] == 0);
  QSeries m = irr_char(2, 2, 0, 3);
  CHECK(m.offset == make_rational(-1, 8));
  CHECK(ints(m, 3) == std::vector<long>{1, 1, 1, 2});
  // h_p(1) = ((2p)^2 - (p-1)^2) / 4p
  CHECK(h_value(2, 2, 1) == Rational(15, 8));
  for (int p = 2; p <= 5; ++p)
    for (int s = 0; s <= p; ++s)
      for (int n = 0; n <= 6; ++n) {
        QSeries x = irr_char(p, s, n, 20);
        CHECK(x.coeffs[0] == 1);
        for (const auto& c : x.coeffs) CHECK(c >= 0);
      }
}

TEST_CASE("lattice characters") {
  QSeries vl = lattice_char(2, 1, Sign::minus, 3);
  CHECK(vl.offset == 0);
  CHECK(vl.coeffs[0] == 1);
  for (int p = 2; p <= 4; ++p) {
    ModelParams mp(p);
    for (int s = 1; s < p; ++s) {
      QSeries vp = lattice_char(p, s, Sign::plus, 12);
      CHECK(vp.offset == h_value(p, s, 0));
      for (Sign e : {Sign::plus, Sign::minus}) {
        QSeries v = lattice_char(p, s, e, 12);
        int t = lattice_orbit(p, s, e);
        for (int d = 0; d <= 12; ++d) {
          Rational w = v.offset + d;
          long expect = 0;
          for (long n = -10; n <= 10; ++n) {
            Rational h = oracle_h(p, t, n);
            Rational gap = w - h;
            if (gap >= 0 && is_integer(gap)) expect += count_partitions(static_cast<int>(to_long(gap)), 99);
          }
          CHECK(v.coeffs[d] == expect);
        }
      }
    }
  }
}

TEST_CASE("simple triplet characters") {
  for (int p = 2; p <= 4; ++p)
    for (int s = 1; s <= p; ++s) {
      CHECK(wp_simple_char(p, s, Sign::plus, 5).coeffs[0] == 1);
      CHECK(wp_simple_char(p, s, Sign::minus, 5).coeffs[0] == 2);
    }
  QSeries sum = series_sum(wp_simple_char(2, 1, Sign::plus, 20), wp_simple_char(2, 1, Sign::minus, 20));
  CHECK(series_agree(sum, lattice_char(2, 1, Sign::plus, 20)));
  // W(2) vacuum character: 1, 0, 1 (T), then L_{-3} vacuum plus the three weight-3 fields
  QSeries w = wp_simple_char(2, 1, Sign::plus, 3);
  CHECK(ints(w, 3) == std::vector<long>{1, 0, 1, 4});
}

TEST_CASE("projective characters and identities") {
  CHECK(projective_char(2, 1, 4).coeffs[0] == 2);
  for (int p = 2; p <= 4; ++p)
    for (int s = 1; s <= p; ++s)
      for (const auto& row : character_identities(p, s, 20)) {
        INFO(row.name << " p=" << p << " s=" << s);
        CHECK(row.holds);
      }
}

TEST_CASE("weight sets are disjoint") {
  for (int p = 2; p <= 5; ++p) CHECK_NOTHROW(WeightTable(p, 8));
}
