#pragma once

// Exact arithmetic bottom layer: arbitrary-precision rationals (GMP) plus the small
// pieces of exact linear algebra the rest of the library needs.  No floating
// point exists anywhere downstream of this header.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace rlx {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced fraction num/den.  The gmpxx two-argument constructor stores the pair
// verbatim, and GMP's mpq functions require canonical form, so every fraction
// built from a numerator/denominator pair must go through here.
inline Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

// Parse "p", "-p", "p/q" with optional sign; canonicalizes and rejects q = 0.
Rat rat_parse(const std::string& s);

// Canonical "p" or "p/q" with q > 0.
std::string rat_str(const Rat& r);

bool rat_is_int(const Rat& r);

// Largest integer <= r, resp. smallest integer >= r.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

long int_to_long(const Int& z);  // throws if out of range

// Lexicographic comparison of rational vectors (total order for map keys).
int ratvec_cmp(const RatVec& a, const RatVec& b);

// Solve M x = rhs exactly (M is m x n, any shape).  Returns one solution with
// free variables set to 0; throws if inconsistent.
RatVec solve_linear(RatMat M, RatVec rhs);

// Rank of an exact rational matrix by Gaussian elimination.
int rat_rank(RatMat M);

}  // namespace rlx
