#pragma once

// Character machinery built on top of the exact q-series layer:
//   * finite characters of simple modules over the degree-zero subalgebra
//     (A_{l-1} plus a central omega_l-label), via Freudenthal's recursion;
//   * weight multiplicities of the degree-graded parabolic Verma modules of
//     the finite algebra (free action of the l lowering directions f_{beta_i}
//     on the top);
//   * Kostant partition counts for the finite root system;
//   * exact string functions of affine Verma and parabolic Verma modules, and
//     the limiting string of a linear combination of parabolic Verma symbols.
//
// Characters are stored string-wise: a map from finite weights to q-series.
// No symbolic z-variables anywhere.

#include <map>
#include <vector>

#include "relaxedchar/cartan.hpp"
#include "relaxedchar/qseries.hpp"

namespace rlx {

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return ratvec_cmp(a, b) < 0; }
};

// Exact character of the simple finite-dimensional module over the degree-zero
// subalgebra with highest weight lam.  Coordinates 1..l-1 of lam must be
// nonnegative integers; the omega_l coordinate is a free central label.
struct FiniteCharacter {
  RatVec highest;
  std::map<RatVec, Int, RatVecLess> mult;
};

Int weyl_dim(const RootSystem& rs, const RatVec& lam);
FiniteCharacter finite_simple_character(const RootSystem& rs, const RatVec& lam);

// Multiplicity of mu in the degree-graded parabolic Verma module with top
// character `top`: the number of ways mu + sum m_i beta_i lands in supp(top),
// weighted by the top multiplicities.  Lazy: one weight per call, exact.
Int parabolic_verma_finite_mult(const RootSystem& rs, const FiniteCharacter& top,
                                const RatVec& mu);

// #ways v = nonnegative-integer sum of positive finite roots (simple-root
// coordinates).  Memoized; safe to reuse across queries.
class KostantPartition {
 public:
  explicit KostantPartition(const RootSystem& rs);
  Int count(const IVec& v);

 private:
  Int rec(size_t idx, const IVec& v);
  std::vector<IVec> roots_;
  std::map<std::pair<size_t, IVec>, Int> memo_;
};

// Multiset counts of the depth-carrying modes x(-i), i >= 1, x running over a
// basis of gbar.  level[n] maps the net finite-weight offset contributed by
// the modes (simple-root coordinates, sign as added to the top weight) to the
// number of multisets of total depth n realizing it.
struct ModeTable {
  long order = 0;
  std::vector<std::map<IVec, Int>> level;
};

ModeTable depth_modes(const RootSystem& rs, long order);

// A character stored string-wise.  Strings are known on [base, base+order];
// coset_uniform means one series shared by a whole coset mu + Qbar, keyed by
// the canonical coset representative.
struct QZCharacter {
  Rat level;
  Rat base;
  long order = 0;
  bool coset_uniform = false;
  std::map<RatVec, QSeries, RatVecLess> strings;
};

// Canonical representative of lam + Qbar: subtract the floors of the
// simple-root coordinates, leaving every alpha-coordinate in [0,1).
RatVec coset_representative(const RootSystem& rs, const RatVec& lam);

// Exact lookup.  For coset-uniform characters any weight in the right coset
// works; for finite-list characters an absent key throws std::out_of_range
// rather than guessing zero.
QSeries string_of(const RootSystem& rs, const QZCharacter& ch, const RatVec& mu);

// q-exponent h_Lambda - c/24 prefixing every string of a module with this
// highest weight, where c = level * dim(gbar) / (level + h_vee).
Rat base_exponent(const RootSystem& rs, const AffineWeight& L);

// String functions of highest-weight modules over the affinization, exact to
// the given q-order.  Shares the mode table and Kostant memo across queries.
class StringEngine {
 public:
  StringEngine(const RootSystem& rs, long order);

  long order() const { return order_; }
  const RootSystem& rs() const { return rs_; }
  const ModeTable& modes() const { return modes_; }

  // Verma module: free action of f_gamma(0), gamma > 0, and all x(-i), i >= 1.
  QSeries verma_string(const AffineWeight& L, const RatVec& mu);

  // Parabolic Verma: free action of f_{beta_i}(0) and all x(-i) on the top
  // character, which must be finite_simple_character(rs, L.lam).
  QSeries parabolic_string(const AffineWeight& L, const FiniteCharacter& top,
                           const RatVec& mu);

 private:
  const RootSystem& rs_;
  long order_;
  ModeTable modes_;
  KostantPartition kostant_;
};

// Strings of the parabolic Verma module at the given target weights, or at a
// default window (weights reachable by monomials with at most `order` lowering
// operators f_{beta_i}(0) on top of depth at most `order`) when targets is
// null.  Weights outside the stored list are not certified zero; query
// StringEngine::parabolic_string for arbitrary weights.
QZCharacter affine_parabolic_verma_char(const RootSystem& rs, const AffineWeight& Lambda,
                                        long order,
                                        const std::vector<RatVec>* targets = nullptr);

// One term of a virtual character: c * [parabolic Verma with top Omega].
struct CharacterTerm {
  AffineWeight Omega;
  Int c;
};

// sum_Omega c * q^{h_Omega - c/24} * weyl_dim(Omega.lam) / phi(q)^{dim gbar},
// the common value of every string of the corresponding dense modules.  Empty
// input gives the zero series based at 0.
QSeries limiting_string(const RootSystem& rs, const std::vector<CharacterTerm>& terms,
                        long order);

}  // namespace rlx
