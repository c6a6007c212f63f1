#include <doctest.h>

#include "relaxedchar/characters.hpp"

using namespace rlx;

namespace {

AffineWeight vac(const RootSystem& rs, const Rat& k) {
  return rs.make_weight(rs.zero_weight(), k);
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("central charges at the two workhorse levels") {
  CentralData a = central(1, frac(-1, 2));
  CHECK(a.kappa == frac(3, 2));
  CHECK(a.c_affine == -1);
  CHECK(a.c_w == 0);
  CentralData b = central(2, frac(-3, 2));
  CHECK(b.kappa == frac(3, 2));
  CHECK(b.c_affine == -8);
  CHECK(b.c_w == 0);
  CentralData c = central(1, Rat(1));
  CHECK(c.c_affine == 1);
  CHECK(c.c_w == -7);
  CHECK_THROWS_AS(central(1, Rat(-2)), std::domain_error);
  CHECK_THROWS_AS(central(0, Rat(1)), std::invalid_argument);
}

TEST_CASE("rank-1 W central charge matches the Virasoro closed form") {
  for (const Rat& k : {Rat(1), frac(1, 2), frac(-1, 2), frac(-4, 3), Rat(5),
                       frac(-5, 7), frac(3, 2), frac(-13, 6)}) {
    Rat kap = k + 2;
    CHECK(central(1, k).c_w == 13 - 6 * kap - 6 / kap);
  }
}

TEST_CASE("the quadratic-numerator variant is a different function") {
  // l((l^2-12)k^2 + lk + 10(l+1)^2) / ((k+l+1)(l+1)) at l=1, k=-1/2
  Rat k = frac(-1, 2);
  Rat alt = (Rat(-11) * k * k + k + Rat(40)) / ((k + 2) * 2);
  CHECK(alt == frac(49, 4));
  CHECK(central(1, k).c_w != alt);
}

TEST_CASE("conformal weights on both sides of the reduction") {
  RootSystem rs(1);
  ConformalWeights v = conformal_weights(rs, vac(rs, frac(-1, 2)));
  CHECK(v.h == 0);
  CHECK(v.hw == frac(1, 8));
  ConformalWeights m = conformal_weights(rs, rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2)));
  CHECK(m.h == frac(-1, 8));
  CHECK(m.hw == 0);
  RootSystem r2(2);
  ConformalWeights w = conformal_weights(r2, vac(r2, frac(-3, 2)));
  CHECK(w.h == 0);
  CHECK(w.hw == frac(1, 2));
  // explicit d: the two-argument make_weight would refuse kappa = 0 first
  AffineWeight crit = rs.make_weight(rs.zero_weight(), Rat(-2), Rat(0));
  CHECK_THROWS_AS(conformal_weights(rs, crit), std::domain_error);
}

TEST_CASE("exponent identity gap vanishes across ranks, levels and weights") {
  for (int l = 1; l <= 3; ++l) {
    RootSystem rs(l);
    for (const Rat& k : {frac(-1, 2), frac(2, 3), frac(-7, 5), Rat(1)}) {
      CHECK(exponent_identity_gap(rs, vac(rs, k)) == 0);
      RatVec lam(l, Rat(0));
      lam[l - 1] = frac(-3, 2);
      CHECK(exponent_identity_gap(rs, rs.make_weight(lam, k)) == 0);
      // the gap does not see the d-coordinate at all
      CHECK(exponent_identity_gap(rs, rs.make_weight(lam, k, frac(7, 3))) == 0);
    }
  }
}

TEST_CASE("relaxed Verma characters are dressed inverse Euler products") {
  RootSystem rs(1);
  QZCharacter ch = relaxed_verma_character(rs, vac(rs, frac(-1, 2)), 6);
  CHECK(ch.coset_uniform);
  CHECK(ch.base == frac(1, 24));
  REQUIRE(ch.strings.size() == 1);
  CHECK(ch.strings.begin()->first == RatVec{Rat(0)});
  const QSeries& s = ch.strings.begin()->second;
  CHECK(s.c == RatVec{Rat(1), Rat(3), Rat(9), Rat(22), Rat(51), Rat(108), Rat(221)});
  // any weight of the stored coset retrieves the shared string
  CHECK(qs_equal(string_of(rs, ch, RatVec{Rat(-4)}), s));
  CHECK_THROWS_AS(string_of(rs, ch, RatVec{Rat(1)}), std::out_of_range);
  // a chosen coset tag just relabels the key
  RatVec tag{frac(-1, 2)};
  QZCharacter cht = relaxed_verma_character(rs, vac(rs, frac(-1, 2)), 3, &tag);
  CHECK(cht.strings.begin()->first == RatVec{frac(3, 2)});

  RootSystem r2(2);
  QZCharacter c2 = relaxed_verma_character(r2, vac(r2, frac(-3, 2)), 3);
  CHECK(c2.base == frac(1, 3));
  const QSeries& s2 = c2.strings.begin()->second;
  CHECK(s2.c == RatVec{Rat(1), Rat(8), Rat(44), Rat(192)});

  AffineWeight bad = r2.make_weight(RatVec{Rat(-1), Rat(0)}, frac(-3, 2));
  CHECK_THROWS_AS(relaxed_verma_character(r2, bad, 2), std::domain_error);
}

TEST_CASE("dominant integral tops collapse the relaxed simple character") {
  RootSystem rs(1);
  QZCharacter ch = relaxed_simple_character(rs, vac(rs, frac(-1, 2)), 8);
  CHECK(ch.base == frac(1, 24));
  REQUIRE(ch.strings.size() == 1);
  for (const Rat& x : ch.strings.begin()->second.c) CHECK(x == 0);
}

TEST_CASE("relaxed simple character of the non-integral admissible weight") {
  RootSystem rs(1);
  AffineWeight L = rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2));
  QZCharacter ch = relaxed_simple_character(rs, L, 6);
  CHECK(ch.base == frac(-1, 12));
  REQUIRE(ch.strings.size() == 1);
  CHECK(ch.strings.begin()->first == RatVec{frac(3, 2)});
  const QSeries& s = ch.strings.begin()->second;
  CHECK(s.c == RatVec{Rat(1), Rat(2), Rat(5), Rat(10), Rat(20), Rat(36), Rat(65)});
  // both linkage conventions resolve to the same simple character
  QZCharacter chd = relaxed_simple_character(rs, L, 6, nullptr, KLConvention::DirectP);
  CHECK(qs_equal(chd.strings.begin()->second, s));
}

TEST_CASE("boundary admissible weight keeps nonnegative string coefficients") {
  RootSystem rs(1);
  AffineWeight L = rs.make_weight(RatVec{frac(-3, 2)}, frac(-1, 2));
  QZCharacter ch = relaxed_simple_character(rs, L, 6);
  REQUIRE(ch.strings.size() == 1);
  const QSeries& s = ch.strings.begin()->second;
  CHECK(s.c[0] == 1);
  for (const Rat& x : s.c) CHECK(x >= 0);
}

TEST_CASE("ordinary W characters at the rank-1 admissible triple") {
  RootSystem rs(1);
  QSeries v = w_ordinary_character(rs, vac(rs, frac(-1, 2)), 8);
  CHECK(v.base == frac(1, 8));
  for (const Rat& x : v.c) CHECK(x == 0);
  QSeries m = w_ordinary_character(rs, rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2)), 8);
  CHECK(m.base == 0);
  CHECK(m.c[0] == 1);
  for (long n = 1; n < m.len(); ++n) CHECK(m.c[n] == 0);
}

TEST_CASE("eta-shift identity holds string by string") {
  RootSystem rs(1);
  for (const Rat& t : {Rat(0), frac(-1, 2), frac(-3, 2)}) {
    AffineWeight L = rs.make_weight(RatVec{t}, frac(-1, 2));
    IdentityReport rep = main_identity_check(rs, L, L.lam, 8);
    CHECK(rep.equal);
    CHECK(rep.orders_compared > 0);
    CHECK(rep.max_abs_discrepancy == 0);
    CHECK(rep.first_bad_offset == -1);
  }
  RootSystem r2(2);
  for (const Rat& t : {Rat(0), frac(-3, 2)}) {
    AffineWeight L = r2.make_weight(RatVec{Rat(0), t}, frac(-3, 2));
    IdentityReport rep = main_identity_check(r2, L, L.lam, 6);
    CHECK(rep.equal);
  }
}

TEST_CASE("parabolic BGG resolution matches on a weight window") {
  RootSystem rs(1);
  CHECK(bgg_identity_check(rs, vac(rs, frac(-1, 2)), 6));
  RootSystem r2(2);
  CHECK(bgg_identity_check(r2, vac(r2, frac(-3, 2)), 4));
  CHECK(bgg_identity_check(r2, r2.make_weight(RatVec{Rat(0), frac(-3, 2)}, frac(-3, 2)), 4));
}

TEST_CASE("span rank of dressed strings obeys the obvious relations") {
  RootSystem rs(1);
  AffineWeight mw = rs.make_weight(RatVec{frac(-1, 2)}, frac(-1, 2));
  AffineWeight v0 = vac(rs, frac(-1, 2));
  std::vector<long> ords{4, 6};

  SpanReport one = modular_span(rs, {mw}, ords);
  REQUIRE(one.rank_at_order.size() == 2);
  CHECK(one.rank_at_order[0].first == 4);
  CHECK(one.rank == 1);
  CHECK(one.stable);

  SpanReport dup = modular_span(rs, {mw, mw}, ords);
  CHECK(dup.rank == 1);

  SpanReport zero = modular_span(rs, {v0}, ords);
  CHECK(zero.rank == 0);

  SpanReport mix = modular_span(rs, {v0, mw}, ords);
  CHECK(mix.rank == 1);
  CHECK(mix.stable);
}

}  // TEST_SUITE
