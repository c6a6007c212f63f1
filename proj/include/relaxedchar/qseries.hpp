#pragma once

// Truncated q-series with exact rational coefficients and a rational leading
// exponent.  A QSeries represents q^base * (c[0] + c[1] q + ... ) and is
// *known* on the window [base, base + c.size()): coefficients below base are
// zero by construction, coefficients at or above the window top are unknown.
// Operations track the window honestly and throw TruncationError instead of
// silently inventing coefficients.

#include <string>
#include <vector>

#include "relaxedchar/rational.hpp"

namespace rlx {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QSeries {
  Rat base;   // exponent of the leading window position
  RatVec c;   // coefficients of q^{base}, q^{base+1}, ...

  long len() const { return static_cast<long>(c.size()); }
  Rat top() const { return base + len(); }  // first unknown exponent
};

QSeries qs_make(const Rat& base, RatVec coeffs);
QSeries qs_zero(const Rat& base, long len);  // zero series with a known window
QSeries qs_one(long len);                    // 1 + 0q + ... window [0, len)

// Addition and subtraction require base difference in Z; the result window is
// the intersection of what both operands know.
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const Rat& s, const QSeries& a);
QSeries qs_shift(const QSeries& a, const Rat& e);  // multiply by q^e

QSeries qs_mul(const QSeries& a, const QSeries& b);

// Multiplicative inverse; requires c[0] != 0.
QSeries qs_inv(const QSeries& a);

// Integer power (negative allowed when invertible).
QSeries qs_pow(const QSeries& a, long m);

// Truncate (or refuse to extend) the window to exactly n coefficients.
QSeries qs_window(const QSeries& a, long n);

bool qs_equal(const QSeries& a, const QSeries& b);  // on the common window; throws if empty

std::string qs_str(const QSeries& a);

// Euler function powers on the window [0, N]:
//   phi(q) = prod_{n>=1} (1 - q^n);  phi_inverse_power(d, N) = phi^{-d},
//   eta_power(m, N) = q^{m/24} phi^m  (m of either sign).
QSeries phi_power(long m, long N);
QSeries phi_inverse_power(long d, long N);
QSeries eta_power(long m, long N);

}  // namespace rlx
