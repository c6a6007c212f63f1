#include <doctest.h>

#include "relaxedchar/rational.hpp"

using namespace rlx;

TEST_SUITE("rational") {

TEST_CASE("frac canonicalizes") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(-2, 4) == frac(1, -2));
  CHECK(rat_str(frac(3, -6)) == "-1/2");
  CHECK(frac(0, 7) == Rat(0));
  CHECK_THROWS_AS(frac(1, 0), std::invalid_argument);
}

TEST_CASE("rat_parse") {
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-3") == Rat(-3));
  CHECK(rat_parse("-3/6") == frac(-1, 2));
  CHECK(rat_parse("0/5") == Rat(0));
  CHECK_THROWS_AS(rat_parse("+2/4"), ParseError);  // no leading '+'
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse(""), ParseError);
  CHECK_THROWS_AS(rat_parse("a/b"), ParseError);
}

TEST_CASE("rat_str is canonical") {
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(frac(10, -4)) == "-5/2");
  CHECK(rat_str(Rat(0)) == "0");
  // round trip
  for (const char* s : {"0", "7", "-7", "22/7", "-1/2"}) CHECK(rat_str(rat_parse(s)) == s);
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(rat_floor(frac(-1, 2)) == -1);
  CHECK(rat_ceil(frac(-1, 2)) == 0);
  CHECK(rat_floor(frac(7, 2)) == 3);
  CHECK(rat_ceil(frac(7, 2)) == 4);
  CHECK(rat_floor(Rat(-3)) == -3);
  CHECK(rat_ceil(Rat(-3)) == -3);
}

TEST_CASE("rat_is_int and int_to_long") {
  CHECK(rat_is_int(Rat(4)));
  CHECK(!rat_is_int(frac(4, 3)));
  CHECK(int_to_long(Int(-12)) == -12);
  Int big(1);
  big <<= 80;
  CHECK_THROWS(int_to_long(big));
}

TEST_CASE("ratvec_cmp orders by size, then lexicographically") {
  RatVec a{Rat(0), frac(-3, 2)};
  RatVec b{Rat(0), Rat(0)};
  CHECK(ratvec_cmp(a, b) < 0);
  CHECK(ratvec_cmp(b, a) > 0);
  CHECK(ratvec_cmp(a, a) == 0);
  // shorter vectors sort first regardless of entries
  CHECK(ratvec_cmp(RatVec{Rat(1)}, RatVec{Rat(0), Rat(9)}) < 0);
}

TEST_CASE("solve_linear") {
  // unique system: x + y = 3, x - y = 1
  RatMat M{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  RatVec x = solve_linear(M, RatVec{Rat(3), Rat(1)});
  CHECK(x[0] == Rat(2));
  CHECK(x[1] == Rat(1));

  // underdetermined: free variable pinned to zero
  RatMat U{{Rat(1), Rat(1)}};
  RatVec u = solve_linear(U, RatVec{frac(1, 2)});
  CHECK(u[0] + u[1] == frac(1, 2));

  // inconsistent
  RatMat B{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_THROWS(solve_linear(B, RatVec{Rat(0), Rat(1)}));
}

TEST_CASE("rat_rank") {
  CHECK(rat_rank({}) == 0);
  CHECK(rat_rank({{Rat(0), Rat(0)}}) == 0);
  CHECK(rat_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rat_rank({{frac(1, 2), Rat(0)}, {Rat(0), frac(-1, 3)}}) == 2);
  // rank is invariant under a row swap and a scaling
  RatMat M{{Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(3)}};
  CHECK(rat_rank(M) == 2);
}

}  // TEST_SUITE
