#include <doctest.h>

#include "relaxedchar/qseries.hpp"

using namespace rlx;

TEST_SUITE("qseries") {

TEST_CASE("construction and window accounting") {
  QSeries a = qs_make(frac(1, 24), RatVec{Rat(1), Rat(3)});
  CHECK(a.len() == 2);
  CHECK(a.top() == frac(49, 24));
  CHECK(qs_zero(Rat(0), 3).c == RatVec{Rat(0), Rat(0), Rat(0)});
  CHECK(qs_one(2).base == Rat(0));
  CHECK(qs_one(2).c[0] == Rat(1));
}

TEST_CASE("addition aligns bases and truncates to the common window") {
  QSeries a = qs_make(Rat(0), RatVec{Rat(1), Rat(1), Rat(1), Rat(1)});
  QSeries b = qs_make(Rat(2), RatVec{Rat(5), Rat(5)});
  QSeries s = qs_add(a, b);
  // window [0, min(4, 2+2)) = [0,4)
  CHECK(s.base == Rat(0));
  CHECK(s.c == RatVec{Rat(1), Rat(1), Rat(6), Rat(6)});
  QSeries d = qs_sub(s, b);
  CHECK(qs_equal(d, a));
}

TEST_CASE("non-integral base gap is an error") {
  QSeries a = qs_make(Rat(0), RatVec{Rat(1)});
  QSeries b = qs_make(frac(1, 2), RatVec{Rat(1)});
  CHECK_THROWS_AS(qs_add(a, b), TruncationError);
}

TEST_CASE("scale and shift") {
  QSeries a = qs_make(frac(-1, 12), RatVec{Rat(1), Rat(2)});
  QSeries s = qs_scale(frac(1, 2), a);
  CHECK(s.c == RatVec{frac(1, 2), Rat(1)});
  QSeries sh = qs_shift(a, frac(1, 12));
  CHECK(sh.base == Rat(0));
  CHECK(sh.c == a.c);
}

TEST_CASE("multiplication window is the minimum length") {
  QSeries a = qs_make(Rat(1), RatVec{Rat(1), Rat(1), Rat(1)});
  QSeries b = qs_make(Rat(-1), RatVec{Rat(1), Rat(-1)});
  QSeries p = qs_mul(a, b);
  CHECK(p.base == Rat(0));
  CHECK(p.len() == 2);
  CHECK(p.c == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("inverse and powers") {
  QSeries phi = phi_power(1, 8);
  QSeries inv = qs_inv(phi);
  QSeries one = qs_mul(phi, inv);
  for (long i = 0; i < one.len(); ++i) CHECK(one.c[i] == (i == 0 ? Rat(1) : Rat(0)));
  CHECK(qs_equal(qs_pow(phi, 2), qs_mul(phi, phi)));
  QSeries p0 = qs_pow(phi, 0);
  CHECK(p0.c[0] == Rat(1));
}

TEST_CASE("windowing") {
  QSeries a = qs_make(Rat(3), RatVec{Rat(1), Rat(2), Rat(3), Rat(4)});
  QSeries w = qs_window(a, 2);
  CHECK(w.len() == 2);
  CHECK(w.c == RatVec{Rat(1), Rat(2)});
}

TEST_CASE("comparison zero-pads to a common window") {
  QSeries a = qs_make(Rat(0), RatVec{Rat(1)});
  QSeries b = qs_make(Rat(5), RatVec{Rat(1)});
  // disjoint windows: a's coefficients are compared against b's implicit zeros
  CHECK(!qs_equal(a, b));
  CHECK(qs_equal(qs_zero(Rat(0), 2), b));
  // an empty series leaves nothing to compare
  CHECK_THROWS_AS(qs_equal(qs_zero(Rat(0), 0), b), TruncationError);
}

TEST_CASE("euler products") {
  // phi = 1 - q - q^2 + q^5 + q^7 - ... (pentagonal numbers)
  QSeries phi = phi_power(1, 8);
  CHECK(phi.c == RatVec{Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)});
  // 1/phi = partition numbers
  QSeries pinv = phi_inverse_power(1, 8);
  CHECK(pinv.c == RatVec{Rat(1), Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(15), Rat(22)});
  QSeries p2 = phi_inverse_power(2, 7);
  CHECK(p2.c == RatVec{Rat(1), Rat(2), Rat(5), Rat(10), Rat(20), Rat(36), Rat(65), Rat(110)});
  QSeries p3 = phi_inverse_power(3, 5);
  CHECK(p3.c == RatVec{Rat(1), Rat(3), Rat(9), Rat(22), Rat(51), Rat(108)});
  QSeries p8 = phi_inverse_power(8, 4);
  CHECK(p8.c == RatVec{Rat(1), Rat(8), Rat(44), Rat(192), Rat(726)});
}

TEST_CASE("eta powers carry the q^{m/24} prefix") {
  QSeries e2 = eta_power(2, 5);
  CHECK(e2.base == frac(2, 24));
  QSeries em2 = eta_power(-2, 5);
  CHECK(em2.base == frac(-2, 24));
  QSeries prod = qs_mul(e2, em2);
  CHECK(prod.base == Rat(0));
  for (long i = 0; i < prod.len(); ++i) CHECK(prod.c[i] == (i == 0 ? Rat(1) : Rat(0)));
}

TEST_CASE("printing") {
  QSeries a = qs_make(frac(-1, 12), RatVec{Rat(1), Rat(2)});
  std::string s = qs_str(a);
  CHECK(s.find("-1/12") != std::string::npos);
}

}  // TEST_SUITE
