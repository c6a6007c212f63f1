#pragma once

// Affine Weyl group machinery.
//
// Two groups are driven through one engine.  A CoxeterContext is a list of
// reflections (in affine real roots) together with a base weight that is
// regular dominant for the generated subsystem: elements are canonical
// reduced words, computed by walking the image of the base weight back into
// the fundamental chamber (at each step reflecting in the lowest-index
// generator with negative pairing).  The walk makes equality, length,
// descents and Bruhat order cheap, with no rewriting system.
//
//   * ambient_context(rs): generators s_0..s_l (s_0 reflects in delta-theta),
//     base = level-1 weight with generic fractional finite part;
//   * IntegralWeylData::ctx: generators are the simple roots of the integral
//     subsystem of a weight, base solved to have pairing 1 with each of them.

#include <optional>
#include <string>
#include <vector>

#include "relaxedchar/cartan.hpp"

namespace rlx {

using Word = std::vector<int>;

std::string word_str(const Word& w);  // "s0.s1.s0", identity prints "e"
Word word_parse(const std::string& s);

class CoxeterContext {
 public:
  CoxeterContext() = default;
  CoxeterContext(const RootSystem* rs, std::vector<AffineRoot> gens, AffineWeight base);

  int num_gens() const { return static_cast<int>(gens_.size()); }
  const AffineRoot& gen_root(int i) const { return gens_[i]; }
  const RootSystem& rs() const { return *rs_; }
  const AffineWeight& base() const { return base_; }

  // action of the word s_{w[0]} ... s_{w[m-1]} as a composite of reflections
  AffineWeight apply(const Word& w, AffineWeight v) const;
  AffineRoot apply_root(const Word& w, AffineRoot r) const;

  Word canonical(const Word& w) const;
  Word canonical_from_image(AffineWeight mu) const;  // mu must be w(base) for some w
  Word product(const Word& a, const Word& b) const;
  Word inverse(const Word& a) const;

  bool is_left_descent(const Word& w, int i) const;   // l(s_i w) < l(w)
  bool is_right_descent(const Word& w, int i) const;  // l(w s_i) < l(w)

  // positivity of a root of the generated subsystem
  bool sub_positive(const AffineRoot& r) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<AffineRoot> gens_;
  AffineWeight base_;
};

// x <= y in the Bruhat order of the context's group (words canonical or not).
bool bruhat_leq(const CoxeterContext& ctx, const Word& x, const Word& y);

// All elements <= w (canonical words), by repeated single-letter deletion.
std::vector<Word> bruhat_lower_interval(const CoxeterContext& ctx, const Word& w);

CoxeterContext ambient_context(const RootSystem& rs);

AffineWeight dot(const CoxeterContext& ctx, const Word& w, const AffineWeight& v);

// The translation map t_alpha on affine weights (alpha in the root lattice):
//   t_alpha(v) = v + level*alpha_w - ((v|alpha) + |alpha|^2/2 * level) delta.
AffineWeight translate(const RootSystem& rs, const IVec& alpha, const AffineWeight& v);

// Factorization of t_alpha as a reduced word of the ambient group.
Word translation_word(const CoxeterContext& ambient, const IVec& alpha);

struct IntegralWeylData {
  AffineWeight Lambda;
  std::vector<AffineRoot> positive_roots;  // integral positive real roots up to the bound
  std::vector<AffineRoot> simple_roots;    // indecomposables among them
  RatVec simple_pairings;                  // <Lambda+rho, gamma_i^vee>
  std::vector<int> singular;               // indices i with simple_pairings[i] == 0
  bool spans_all = false;                  // simple roots span Q Delta-bar + Q delta
  CoxeterContext ctx;                      // the group W(Lambda) on its own generators
};

// delta_bound < 0 picks the default 2*den(k) + 2.
IntegralWeylData integral_data(const RootSystem& rs, const AffineWeight& Lambda,
                               long delta_bound = -1);

struct NotFoundWithinBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrbitRep {
  AffineWeight Omega;
  Word w;     // in the generators of IntegralWeylData::ctx; Lambda = w dot Omega
  int sign;   // +1 dominant (kappa > 0 branch), -1 antidominant
};

OrbitRep dominant_representative(const IntegralWeylData& iw, long length_bound = 4096);

// Longest (or shortest) element of the coset w * <singular generators>.
Word coset_extremal(const CoxeterContext& ctx, const Word& w, const std::vector<int>& c_gens,
                    bool longest, long cap = 4096);

}  // namespace rlx
