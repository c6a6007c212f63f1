#include "relaxedchar/rational.hpp"

#include <cctype>

namespace rlx {

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational literal");
  // validate shape: [+-]?digits(/[+-]?digits)?
  auto digits_ok = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
    if (i >= u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(t)) throw ParseError("bad rational literal: " + s);
  } else {
    if (!digits_ok(t.substr(0, slash)) || !digits_ok(t.substr(slash + 1)))
      throw ParseError("bad rational literal: " + s);
  }
  Rat r;
  if (r.set_str(t, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

long int_to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range");
  return z.get_si();
}

int ratvec_cmp(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

RatVec solve_linear(RatMat M, RatVec rhs) {
  const size_t m = M.size();
  const size_t n = m ? M[0].size() : 0;
  std::vector<int> pivot_col(m, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && M[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    std::swap(rhs[p], rhs[row]);
    Rat inv = 1 / M[row][col];
    for (size_t j = col; j < n; ++j) M[row][j] *= inv;
    rhs[row] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (rhs[i] != 0) throw std::runtime_error("inconsistent linear system");
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

int rat_rank(RatMat M) {
  const size_t m = M.size();
  const size_t n = m ? M[0].size() : 0;
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && M[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (size_t i = row + 1; i < m; ++i) {
      if (M[i][col] == 0) continue;
      Rat f = M[i][col] / M[row][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace rlx
