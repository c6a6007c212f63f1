#include <doctest.h>

#include "relaxedchar/charring.hpp"
#include "relaxedchar/shapovalov.hpp"

using namespace rlx;

TEST_SUITE("shapovalov") {

TEST_CASE("chevalley basis passes its structural self-check") {
  for (int r = 1; r <= 3; ++r) {
    ChevalleyBasis cb(r);
    cb.self_check();
    CHECK(cb.dim() == r * (r + 2));
    CHECK(cb.n_roots() == r * (r + 1));
  }
  CHECK_THROWS_AS(ChevalleyBasis(0), std::invalid_argument);
}

TEST_CASE("hand-computed Gram entries at the rank-1 vacuum") {
  RootSystem rs(1);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  ShapovalovOracle ov(rs, vac, false);
  int e = ov.basis().root_index(IVec{1});
  int f = ov.basis().transpose(e);
  ShapovalovOracle::Mono mf{{-1, f}};
  ShapovalovOracle::Mono mh{{-1, ov.basis().n_roots()}};
  // <f(-1)v, f(-1)v> = lam(h) + k, <h(-1)v, h(-1)v> = 2k
  CHECK(ov.gram_entry(mf, mf) == frac(-1, 2));
  CHECK(ov.gram_entry(mh, mh) == -1);
  CHECK(ov.gram_entry(mf, mh) == 0);
}

TEST_CASE("vacuum blocks at small depth") {
  RootSystem rs(1);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  ShapovalovOracle ov(rs, vac, false);
  GramBlock b0 = ov.block(IVec{0}, 0);
  CHECK(b0.dim == 1);
  CHECK(b0.rank == 1);
  GramBlock b1 = ov.block(IVec{0}, 1);
  CHECK(b1.dim == 2);
  CHECK(b1.rank == 1);  // one singular vector's worth of radical already
  CHECK(b1.basis.size() == 2);
  CHECK(ov.block(IVec{1}, 0).dim == 1);
  CHECK_THROWS_AS(ov.block(IVec{0}, ov.depth_cap() + 1), std::domain_error);
}

TEST_CASE("weight-space dimensions agree with the character recursion") {
  RootSystem rs(1);
  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  ShapovalovOracle ov(rs, vac, false);
  StringEngine eng(rs, 3);
  for (long c = -3; c <= 4; ++c)
    for (long j = 0; j <= 3; ++j) {
      QSeries s = eng.verma_string(vac, RatVec{vac.lam[0] - Rat(2 * c)});
      CHECK(Rat(ov.space_dim(IVec{c}, j)) == s.c[j]);
    }
}

TEST_CASE("rank-2 weight-space dimensions against the same recursion") {
  RootSystem rs(2);
  AffineWeight L = rs.make_weight(RatVec{Rat(0), frac(-1, 2)}, frac(-3, 2));
  ShapovalovOracle ov(rs, L, false);
  StringEngine eng(rs, 1);
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long j = 0; j <= 1; ++j) {
        RatVec drop = rs.root_to_weight(IVec{a, b});
        RatVec tgt{L.lam[0] - drop[0], L.lam[1] - drop[1]};
        QSeries s = eng.verma_string(L, tgt);
        CHECK(Rat(ov.space_dim(IVec{a, b}, j)) == s.c[j]);
      }
}

TEST_CASE("the contravariant form is symmetric") {
  RootSystem rs(1);
  AffineWeight half = rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2));
  ShapovalovOracle ov(rs, half, false);
  auto mons = ov.weight_basis(IVec{2}, 2);
  REQUIRE(mons.size() > 1);
  for (const auto& u : mons)
    for (const auto& w : mons) CHECK(ov.gram_entry(u, w) == ov.gram_entry(w, u));
}

TEST_CASE("generic highest weight gives a nondegenerate form") {
  RootSystem rs(1);
  AffineWeight gen = rs.make_weight(RatVec{frac(1, 7)}, frac(1, 5) - Rat(2));
  ShapovalovOracle ov(rs, gen, false);
  for (long c = -2; c <= 3; ++c)
    for (long j = 0; j <= 2; ++j) {
      GramBlock b = ov.block(IVec{c}, j);
      CHECK(b.rank == b.dim);
    }
}

TEST_CASE("level-1 vacuum ranks reproduce the basic module") {
  RootSystem rs(1);
  AffineWeight lv1 = rs.make_weight(rs.zero_weight(), Rat(1));
  ShapovalovOracle ov(rs, lv1, false);
  // string through the highest weight: partition numbers
  std::vector<long> want{1, 1, 2, 3, 5};
  for (long j = 0; j <= 4; ++j) CHECK(ov.simple_mult(IVec{0}, j) == want[j]);
  CHECK(ov.simple_mult(IVec{1}, 0) == 0);  // <f(0)v, f(0)v> = lam(h) = 0
  CHECK(ov.simple_mult(IVec{1}, 1) == 1);
  CHECK(ov.simple_mult(IVec{1}, 2) == 1);
  CHECK(ov.simple_mult(IVec{2}, 4) == 1);
}

TEST_CASE("parabolic induction needs a one-dimensional inducing line") {
  RootSystem rs(2);
  AffineWeight bad = rs.make_weight(RatVec{Rat(1), Rat(0)}, frac(-3, 2));
  CHECK_THROWS_AS(ShapovalovOracle(rs, bad, true), std::domain_error);
  AffineWeight ok = rs.make_weight(RatVec{Rat(0), frac(-1, 2)}, frac(-3, 2));
  ShapovalovOracle ov(rs, ok, true);
  CHECK(ov.parabolic());
}

TEST_CASE("parabolic dimensions stabilize to the full Euler product") {
  RootSystem rs(1);
  AffineWeight half = rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2));
  StringLimitResult r = oracle_string_limit(rs, half, 3, 8, true);
  CHECK(r.stabilized);
  CHECK(r.prefix.base == frac(-1, 12));
  CHECK(r.prefix.c == RatVec{Rat(1), Rat(3), Rat(9), Rat(22)});

  RootSystem r2(2);
  AffineWeight L2 = r2.make_weight(RatVec{Rat(0), frac(-1, 2)}, frac(-3, 2));
  StringLimitResult p2 = oracle_string_limit(r2, L2, 2, 8, true);
  CHECK(p2.stabilized);
  CHECK(p2.prefix.c == RatVec{Rat(1), Rat(8), Rat(44)});
}

TEST_CASE("simple-module Gram limits at the admissible fractional weight") {
  RootSystem rs(1);
  AffineWeight half = rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2));
  StringLimitResult r = oracle_string_limit(rs, half, 2, 8, false);
  CHECK(r.stabilized);
  CHECK(r.prefix.base == frac(-1, 12));
  CHECK(r.prefix.c == RatVec{Rat(1), Rat(2), Rat(5)});

  AffineWeight vac = rs.make_weight(rs.zero_weight(), frac(-1, 2));
  StringLimitResult z = oracle_string_limit(rs, vac, 2, 8, false);
  CHECK(z.stabilized);
  for (const Rat& x : z.prefix.c) CHECK(x == 0);

  CHECK_THROWS_AS(oracle_string_limit(rs, vac, 4, 8, false), std::invalid_argument);
  CHECK_THROWS_AS(oracle_string_limit(rs, vac, 2, 1, false), std::invalid_argument);
}

TEST_CASE("levi Gram multiplicities") {
  RootSystem r2(2);
  std::vector<long> want{1, 1, 1, 0};
  for (long c = 0; c <= 3; ++c)
    CHECK(levi_gram_mult(r2, RatVec{Rat(2), frac(-1, 2)}, IVec{c}) == want[c]);
  RootSystem r1(1);
  CHECK(levi_gram_mult(r1, RatVec{frac(-1, 2)}, IVec{}) == 1);
  CHECK_THROWS_AS(levi_gram_mult(r1, RatVec{frac(-1, 2)}, IVec{1}), std::invalid_argument);
}

}  // TEST_SUITE
