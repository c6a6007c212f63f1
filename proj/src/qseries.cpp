#include "relaxedchar/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace rlx {

QSeries qs_make(const Rat& base, RatVec coeffs) { return {base, std::move(coeffs)}; }

QSeries qs_zero(const Rat& base, long len) {
  if (len < 0) throw std::invalid_argument("negative window length");
  return {base, RatVec(static_cast<size_t>(len), Rat(0))};
}

QSeries qs_one(long len) {
  QSeries r = qs_zero(Rat(0), len);
  if (len > 0) r.c[0] = 1;
  return r;
}

namespace {

long int_diff(const Rat& a, const Rat& b) {
  Rat d = a - b;
  if (!rat_is_int(d)) throw TruncationError("q-series bases differ by a non-integer");
  return int_to_long(rat_floor(d));
}

}  // namespace

QSeries qs_add(const QSeries& a, const QSeries& b) {
  long off = int_diff(b.base, a.base);  // b.base = a.base + off
  Rat base = off >= 0 ? a.base : b.base;
  Rat top = std::min(a.top(), b.top());
  Rat lenr = top - base;
  if (lenr <= 0) throw TruncationError("empty common window in q-series addition");
  long len = int_to_long(rat_floor(lenr));
  QSeries r = qs_zero(base, len);
  long sa = int_to_long(rat_floor(a.base - base));
  long sb = int_to_long(rat_floor(b.base - base));
  for (long i = 0; i < len; ++i) {
    if (i - sa >= 0 && i - sa < a.len()) r.c[i] += a.c[i - sa];
    if (i - sb >= 0 && i - sb < b.len()) r.c[i] += b.c[i - sb];
  }
  return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_scale(Rat(-1), b)); }

QSeries qs_scale(const Rat& s, const QSeries& a) {
  QSeries r = a;
  for (Rat& x : r.c) x *= s;
  return r;
}

QSeries qs_shift(const QSeries& a, const Rat& e) {
  QSeries r = a;
  r.base += e;
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  if (a.len() == 0 || b.len() == 0) throw TruncationError("empty window in q-series product");
  long len = std::min(a.len(), b.len());
  QSeries r = qs_zero(a.base + b.base, len);
  for (long i = 0; i < a.len(); ++i) {
    if (a.c[i] == 0) continue;
    for (long j = 0; j < b.len() && i + j < len; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

QSeries qs_inv(const QSeries& a) {
  if (a.len() == 0) throw TruncationError("empty window in q-series inverse");
  if (a.c[0] == 0) throw std::domain_error("q-series inverse needs a unit leading coefficient");
  QSeries r = qs_zero(-a.base, a.len());
  r.c[0] = 1 / a.c[0];
  for (long n = 1; n < a.len(); ++n) {
    Rat s(0);
    for (long k = 1; k <= n; ++k)
      if (k < a.len()) s += a.c[k] * r.c[n - k];
    r.c[n] = -s / a.c[0];
  }
  return r;
}

QSeries qs_pow(const QSeries& a, long m) {
  if (m == 0) return qs_one(a.len());
  QSeries b = m < 0 ? qs_inv(a) : a;
  long e = m < 0 ? -m : m;
  QSeries acc = b;
  for (long i = 1; i < e; ++i) acc = qs_mul(acc, b);
  return acc;
}

QSeries qs_window(const QSeries& a, long n) {
  if (n > a.len()) throw TruncationError("q-series window is shorter than requested");
  QSeries r = a;
  r.c.resize(static_cast<size_t>(n));
  return r;
}

bool qs_equal(const QSeries& a, const QSeries& b) {
  long off = int_diff(b.base, a.base);
  Rat base = off >= 0 ? a.base : b.base;
  Rat top = std::min(a.top(), b.top());
  if (top - base <= 0) throw TruncationError("empty common window in q-series comparison");
  long len = int_to_long(rat_floor(top - base));
  long sa = int_to_long(rat_floor(a.base - base));
  long sb = int_to_long(rat_floor(b.base - base));
  for (long i = 0; i < len; ++i) {
    Rat ca = (i - sa >= 0 && i - sa < a.len()) ? a.c[i - sa] : Rat(0);
    Rat cb = (i - sb >= 0 && i - sb < b.len()) ? b.c[i - sb] : Rat(0);
    if (ca != cb) return false;
  }
  return true;
}

std::string qs_str(const QSeries& a) {
  std::ostringstream os;
  os << "q^(" << rat_str(a.base) << ") * [";
  for (long i = 0; i < a.len(); ++i) {
    if (i) os << ", ";
    os << rat_str(a.c[i]);
  }
  os << "]";
  return os.str();
}

QSeries phi_power(long m, long N) {
  if (N < 0) throw std::invalid_argument("negative truncation order");
  // pentagonal number theorem: phi(q) = sum_k (-1)^k q^{k(3k-1)/2}
  QSeries phi = qs_zero(Rat(0), N + 1);
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 > N && e2 > N) break;
    Rat s = (k % 2 == 0) ? Rat(1) : Rat(-1);
    if (e1 <= N) phi.c[e1] += s;
    if (k > 0 && e2 <= N) phi.c[e2] += s;
    if (k > 3 * N) break;
  }
  return qs_pow(phi, m);
}

QSeries phi_inverse_power(long d, long N) { return phi_power(-d, N); }

QSeries eta_power(long m, long N) { return qs_shift(phi_power(m, N), frac(m, 24)); }

}  // namespace rlx
