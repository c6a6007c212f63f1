#include <doctest.h>

#include "relaxedchar/charring.hpp"

using namespace rlx;

TEST_SUITE("charring") {

TEST_CASE("weyl_dim over the degree-zero subalgebra") {
  RootSystem r1(1), r2(2), r3(3);
  // trivial Levi at rank 1: every module is a line
  CHECK(weyl_dim(r1, r1.zero_weight()) == 1);
  CHECK(weyl_dim(r1, RatVec{frac(-1, 2)}) == 1);
  // rank 2: Levi A_1, dimension = lam_1 + 1, central label free
  CHECK(weyl_dim(r2, RatVec{Rat(2), frac(7, 3)}) == 3);
  CHECK(weyl_dim(r2, RatVec{Rat(0), frac(-3, 2)}) == 1);
  // rank 3: Levi A_2 at the adjoint-like (1,1)
  CHECK(weyl_dim(r3, RatVec{Rat(1), Rat(1), frac(-5, 7)}) == 8);
}

TEST_CASE("finite characters sum to the Weyl dimension") {
  RootSystem r3(3);
  RatVec lam{Rat(1), Rat(1), frac(-5, 7)};
  FiniteCharacter f = finite_simple_character(r3, lam);
  Int tot(0);
  for (const auto& [w, m] : f.mult) tot += m;
  CHECK(tot == weyl_dim(r3, lam));
  CHECK(f.mult.at(lam) == 1);
  // the zero Levi-weight space of the octet has multiplicity 2
  RatVec mid = lam;
  {
    RatVec a1 = r3.root_to_weight(r3.alpha(1)), a2 = r3.root_to_weight(r3.alpha(2));
    for (int i = 0; i < 3; ++i) mid[i] -= a1[i] + a2[i];
  }
  CHECK(f.mult.at(mid) == 2);
}

TEST_CASE("graded parabolic multiplicities on a trivial top") {
  RootSystem r2(2);
  FiniteCharacter top = finite_simple_character(r2, r2.zero_weight());
  RatVec b1 = r2.root_to_weight(r2.beta(1));
  RatVec b2 = r2.root_to_weight(r2.beta(2));
  RatVec m1(2), p1(2), m12(2);
  for (int i = 0; i < 2; ++i) {
    m1[i] = -b1[i];
    p1[i] = b1[i];
    m12[i] = -b1[i] - b2[i];
  }
  CHECK(parabolic_verma_finite_mult(r2, top, r2.zero_weight()) == 1);
  CHECK(parabolic_verma_finite_mult(r2, top, m1) == 1);
  CHECK(parabolic_verma_finite_mult(r2, top, p1) == 0);
  // -beta_1-beta_2 is reached only by the multiset {beta_1, beta_2}
  CHECK(parabolic_verma_finite_mult(r2, top, m12) == 1);
}

TEST_CASE("kostant partition counts") {
  RootSystem r2(2);
  KostantPartition K(r2);
  CHECK(K.count(IVec{0, 0}) == 1);
  CHECK(K.count(IVec{-1, 0}) == 0);
  CHECK(K.count(IVec{1, 0}) == 1);
  CHECK(K.count(IVec{1, 1}) == 2);   // a1+a2 or theta
  CHECK(K.count(IVec{2, 1}) == 2);   // a1+a1+a2, a1+theta
  CHECK(K.count(IVec{2, 2}) == 3);   // 2(a1+a2) patterns: aabb, ab+theta, 2 theta
}

TEST_CASE("depth-one modes cover the adjoint") {
  RootSystem r2(2);
  ModeTable mt = depth_modes(r2, 3);
  REQUIRE(mt.order == 3);
  Int d1(0);
  for (const auto& [off, c] : mt.level[1]) d1 += c;
  CHECK(d1 == r2.dim_g());
  CHECK(mt.level[0].size() == 1);
  CHECK(mt.level[0].begin()->second == 1);
}

TEST_CASE("verma strings at the rank-1 vacuum") {
  RootSystem rs(1);
  StringEngine eng(rs, 4);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  QSeries s0 = eng.verma_string(vac, rs.zero_weight());
  CHECK(s0.base == frac(1, 24));  // h - c/24 with c = -1
  CHECK(s0.c[0] == 1);
  CHECK(s0.c[1] == 2);  // h(-1) and e(-1) f(0)
  // the string at -alpha_1 starts with the single vector f(0)v
  QSeries sa = eng.verma_string(vac, RatVec{Rat(-2)});
  CHECK(sa.c[0] == 1);
  // unreachable weight: identically zero
  QSeries sup = eng.verma_string(vac, RatVec{frac(1, 3)});
  for (const Rat& x : sup.c) CHECK(x == 0);
}

TEST_CASE("parabolic equals full Verma when the Levi is trivial") {
  RootSystem rs(1);
  StringEngine eng(rs, 4);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  FiniteCharacter top = finite_simple_character(rs, rs.zero_weight());
  for (long m : {0L, -2L, 2L, -4L}) {
    QSeries v = eng.verma_string(vac, RatVec{Rat(m)});
    QSeries p = eng.parabolic_string(vac, top, RatVec{Rat(m)});
    CHECK(qs_equal(v, p));
  }
}

TEST_CASE("limiting string of a single symbol") {
  RootSystem rs(1);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  QSeries ls = limiting_string(rs, {{vac, Int(1)}}, 4);
  CHECK(ls.base == frac(1, 24));
  CHECK(ls.c == RatVec{Rat(1), Rat(3), Rat(9), Rat(22), Rat(51)});
  QSeries z = limiting_string(rs, {}, 3);
  for (const Rat& x : z.c) CHECK(x == 0);
}

TEST_CASE("coset representative lands in the unit box") {
  RootSystem rs(1);
  CHECK(coset_representative(rs, RatVec{frac(-1, 2)}) == RatVec{frac(3, 2)});
  CHECK(coset_representative(rs, RatVec{frac(-3, 2)}) == RatVec{frac(1, 2)});
  CHECK(coset_representative(rs, RatVec{Rat(4)}) == RatVec{Rat(0)});
  RootSystem r2(2);
  RatVec rep = coset_representative(r2, RatVec{Rat(0), frac(-3, 2)});
  RatVec ac = r2.weight_to_alpha_coords(rep);
  for (const Rat& x : ac) {
    CHECK(x >= 0);
    CHECK(x < 1);
  }
}

TEST_CASE("affine parabolic character tops match the finite multiplicities") {
  RootSystem r2(2);
  AffineWeight L = r2.make_weight(r2.zero_weight(), frac(-3, 2));
  FiniteCharacter top = finite_simple_character(r2, r2.zero_weight());
  QZCharacter ch = affine_parabolic_verma_char(r2, L, 2);
  CHECK(ch.base == base_exponent(r2, L));
  CHECK(!ch.coset_uniform);
  REQUIRE(!ch.strings.empty());
  for (const auto& [mu, s] : ch.strings)
    CHECK(s.c[0] == Rat(parabolic_verma_finite_mult(r2, top, mu)));
  // absent keys are refused rather than guessed
  CHECK_THROWS_AS(string_of(r2, ch, RatVec{Rat(99), Rat(99)}), std::out_of_range);
}

TEST_CASE("string engine respects a target list") {
  RootSystem rs(1);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  std::vector<RatVec> targets{RatVec{Rat(0)}, RatVec{Rat(-2)}};
  QZCharacter ch = affine_parabolic_verma_char(rs, vac, 3, &targets);
  CHECK(ch.strings.size() == 2);
  StringEngine eng(rs, 3);
  FiniteCharacter top = finite_simple_character(rs, rs.zero_weight());
  for (const auto& [mu, s] : ch.strings)
    CHECK(qs_equal(s, eng.parabolic_string(vac, top, mu)));
}

}  // TEST_SUITE
