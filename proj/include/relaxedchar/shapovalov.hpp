#pragma once

// Brute-force ground truth.  Weight spaces of Verma-type modules over the
// affinization of sl_{l+1} are built as explicit PBW monomials, the
// contravariant form is evaluated by straightening words in the loop algebra,
// and Gram ranks give simple-module multiplicities with no character theory
// involved.  Everything is exact; everything is slow; that is the point.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relaxedchar/cartan.hpp"
#include "relaxedchar/qseries.hpp"

namespace rlx {

// sl_{l+1} in the matrix-unit realization: basis = root vectors E_ab (a != b)
// followed by the simple coroots h_i = E_ii - E_{i+1,i+1}.  The bilinear form
// is the trace form (which gives long roots norm 2), and the compact
// anti-involution is plain matrix transpose: E_ab <-> E_ba, h_i fixed.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(int rank);

  int rank() const { return l_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  int n_roots() const { return dim() - l_; }
  bool is_cartan(int b) const { return b >= n_roots(); }
  const IVec& weight(int b) const { return weights_[b]; }  // zero for Cartan
  long height(int b) const { return heights_[b]; }
  int transpose(int b) const { return sigma_[b]; }
  long form(int a, int b) const { return form_[a * dim() + b]; }
  const std::vector<std::pair<int, long>>& bracket(int a, int b) const {
    return brackets_[a * dim() + b];
  }
  int root_index(const IVec& gamma) const;  // basis index with weight == gamma
  Rat cartan_eval(const RatVec& lam, int b) const;  // <lam, b> for Cartan b
  std::string name(int b) const;                    // "E13", "H2"

  // Jacobi, invariance of the form, bracket-table consistency, transpose
  // anti-involution, (e|f) = 1.  Throws std::logic_error on any failure.
  void self_check() const;

 private:
  using Mat = std::vector<long>;  // (l+1)^2 row-major
  Mat mat_of(int b) const;
  std::vector<std::pair<int, long>> decompose(const Mat& m) const;

  int l_;
  std::vector<std::pair<int, int>> units_;  // (a, b) of E_ab per root index
  std::vector<IVec> weights_;
  std::vector<long> heights_;
  std::vector<int> sigma_;
  std::vector<long> form_;
  std::vector<std::vector<std::pair<int, long>>> brackets_;
};

struct GramBlock {
  AffineWeight weight;
  IVec offset;  // finite drop below the highest weight, simple-root coords
  long depth = 0;
  std::vector<std::string> basis;
  RatMat matrix;
  long dim = 0;
  long rank = 0;
};

// One highest weight, one module (Verma, or parabolic Verma when the Levi
// coordinates of the top vanish so the inducing module is a line).  Blocks
// are refused above the depth cap: past that the Gram matrices stop fitting
// in the time budget of a test suite, and an oracle that silently degrades
// is worse than one that says no.
class ShapovalovOracle {
 public:
  ShapovalovOracle(const RootSystem& rs, const AffineWeight& Lambda, bool parabolic,
                   long depth_cap = -1);  // -1: 4 for rank 1, 3 for rank 2, else 2

  long depth_cap() const { return cap_; }
  bool parabolic() const { return parabolic_; }

  GramBlock block(const IVec& offset, long depth);
  long simple_mult(const IVec& offset, long depth);  // Gram rank, memoized
  long space_dim(const IVec& offset, long depth);    // basis count only

  // straightening primitives exposed for the unit tests
  struct Gen {
    int n;  // mode; lowering monomials use n <= 0
    int b;  // ChevalleyBasis index
    auto operator<=>(const Gen&) const = default;
  };
  using Mono = std::vector<Gen>;
  using Vec = std::map<Mono, Rat>;

  const ChevalleyBasis& basis() const { return cb_; }
  std::vector<Mono> weight_basis(const IVec& offset, long depth) const;
  Vec apply(const Gen& g, const Vec& v) const;  // left multiplication
  Rat gram_entry(const Mono& u, const Mono& w) const;
  std::string mono_name(const Mono& m) const;

 private:
  bool storable(const Gen& g) const;
  void mul(const Gen& g, const Mono& m, const Rat& c, Vec& out) const;

  const RootSystem& rs_;
  ChevalleyBasis cb_;
  AffineWeight Lambda_;
  bool parabolic_;
  long cap_;
  std::map<std::pair<IVec, long>, long> rank_memo_;
};

struct StringLimitResult {
  bool stabilized = false;
  QSeries prefix;  // base = h - c/24, one coefficient per q-power
  long n_reached = 0;
  std::string note;
};

// Multiplicities at Lambda + n*beta0 - j*delta for descending n, each q-power
// j <= q_order probed until two consecutive values agree.  Default mode takes
// Gram ranks on the full Verma module (so the limit is a simple-module string
// coefficient); parabolic_dims instead counts the parabolic Verma basis.
// Failure to stabilize is reported, never guessed.  q_order is capped at 3.
StringLimitResult oracle_string_limit(const RootSystem& rs, const AffineWeight& Lambda,
                                      long q_order, long n_range,
                                      bool parabolic_dims = false);

// dim of the simple module over the degree-zero Levi sl_l at (top - offset);
// offset in the Levi's own simple-root coordinates.  Independent of the
// Freudenthal path: it is a finite Gram rank.
long levi_gram_mult(const RootSystem& rs, const RatVec& lam, const IVec& levi_offset);

}  // namespace rlx
