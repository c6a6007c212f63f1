#pragma once

// Kazhdan-Lusztig engine: P-polynomials over an abstract Coxeter context,
// block cones truncated by conformal energy, and the two character-expansion
// directions (simple modules in terms of Verma modules and back).  Everything
// here works uniformly for the ambient affine Weyl group and for integral
// subgroups, since both are presented as a CoxeterContext.

#include <map>
#include <string>
#include <vector>

#include "relaxedchar/weyl.hpp"

namespace rlx {

// Dense integer polynomial in q; c[i] is the coefficient of q^i.  Zero is the
// empty vector; representations are kept trimmed (no trailing zeros).
using IPoly = std::vector<Int>;

IPoly ipoly_add(const IPoly& a, const IPoly& b);
IPoly ipoly_sub(const IPoly& a, const IPoly& b);
IPoly ipoly_shift(const IPoly& a, long k);  // multiply by q^k
int ipoly_deg(const IPoly& a);              // -1 for zero
Int ipoly_eval1(const IPoly& a);
std::string ipoly_str(const IPoly& a);  // e.g. "1 + q + 2q^3", "0"

// Memoized Kazhdan-Lusztig polynomials P_{x,y} for the group presented by a
// CoxeterContext, via the classical descent recursion with mu-corrections.
// Inputs may be arbitrary words; they are canonicalized internally.
class KLTable {
 public:
  explicit KLTable(const CoxeterContext* ctx) : ctx_(ctx) {}

  const IPoly& P(const Word& x, const Word& y);

  // Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} (0 when the exponent is not
  // an integer or x is not strictly below y).
  Int mu(const Word& x, const Word& y);

  // All z <= y, canonical words, including e and y.
  const std::vector<Word>& lower_interval(const Word& y);

  const CoxeterContext& ctx() const { return *ctx_; }

 private:
  const CoxeterContext* ctx_;
  std::map<std::pair<std::string, std::string>, IPoly> memo_;
  std::map<std::string, std::vector<Word>> intervals_;

  IPoly compute(const Word& x, const Word& y);
};

// Which evaluation convention turns KL data into character coefficients on
// the dominant side.  InverseP expands a simple module into Verma characters
// through the inverse of the unitriangular P(1) matrix on the block cone;
// DirectP uses signed P(1) values directly.  The two differ only in blocks
// where some P_{x,y} is not 1.
enum class KLConvention { InverseP, DirectP };

// One element of a block cone: y in the integral Weyl group together with the
// weight y.Omega (dot action) and its conformal energy h = -d.
struct ConeEntry {
  Word y;
  AffineWeight wt;
  Rat h;
};

// {y : y >= w, h(y.Omega) <= h(Lambda) + energy_bound} for a dominant orbit
// representative, sorted by (length, word) so that Bruhat order refines the
// index order.  The truncation is Bruhat-convex because h is nondecreasing
// along the order, which is what makes cone-local matrix inversion exact.
struct BlockCone {
  OrbitRep rep;
  std::vector<ConeEntry> elems;
  Rat h_top;
};

BlockCone block_cone(const IntegralWeylData& iw, const OrbitRep& rep, const Rat& energy_bound);

// Coefficients aligned with cone.elems: either ch L(Lambda) = sum a_y ch M(y.Omega)
// (simple_in_verma) or ch M(Lambda) = sum a_y ch L(y.Omega) (invert_to_simples).
struct VermaExpansion {
  BlockCone cone;
  std::vector<Int> a;
  KLConvention conv;
};

VermaExpansion simple_in_verma(const IntegralWeylData& iw, const Rat& energy_bound,
                               KLConvention conv = KLConvention::InverseP);
VermaExpansion invert_to_simples(const IntegralWeylData& iw, const Rat& energy_bound,
                                 KLConvention conv = KLConvention::InverseP);

// Expansion of a simple character into parabolic Verma characters indexed by
// weights whose first rank-1 coordinates are dominant integral.  Obtained by
// antisymmetrizing the full Verma expansion over the finite Weyl group of the
// degree-zero Levi subalgebra; the antisymmetry itself is asserted, as is the
// vanishing of contributions whose Levi-dot orbit is singular.
struct ParabolicTerm {
  AffineWeight Xi;
  Int c;
  Rat dh;  // h(Xi) - h(Lambda)
};

struct ParabolicExpansion {
  AffineWeight Lambda;
  OrbitRep rep;
  std::vector<ParabolicTerm> terms;  // sorted by (dh, weight)
  KLConvention conv;
};

ParabolicExpansion parabolic_coefficients(const RootSystem& rs, const AffineWeight& Lambda,
                                          const Rat& energy_bound,
                                          KLConvention conv = KLConvention::InverseP);

}  // namespace rlx
