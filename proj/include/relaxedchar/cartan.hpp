#pragma once

// Root and weight data for finite type A_l and its untwisted affinization.
//
// Conventions, fixed once here and used everywhere:
//   * finite weights are stored in fundamental-weight coordinates (exact
//     rationals), finite roots in simple-root coordinates (integers);
//   * the invariant form is normalized so |alpha|^2 = 2 for every root,
//     hence (omega_i|omega_j) = (Cartan^{-1})_{ij} and <lam, alpha^vee> =
//     (lam|alpha);
//   * an affine weight is lam + level*Lambda_0 + d*delta, and a real affine
//     root is abar + n*delta; the zeroth simple root is delta - theta;
//   * the distinguished grading element is omega_l, so a finite root has
//     degree equal to its alpha_l-coordinate, the degree-one roots are
//     beta_i = alpha_i + ... + alpha_l, and beta_0 denotes beta_1+...+beta_l.

#include <vector>

#include "relaxedchar/rational.hpp"

namespace rlx {

using IVec = std::vector<long>;  // simple-root coordinates

struct AffineWeight {
  RatVec lam;  // finite part, fundamental-weight coordinates
  Rat level;   // coefficient of Lambda_0
  Rat d;       // coefficient of delta
};

struct AffineRoot {
  IVec a;  // finite part, simple-root coordinates (all zero => imaginary)
  long n;  // delta multiplicity
};

int affw_cmp(const AffineWeight& x, const AffineWeight& y);
bool operator==(const AffineWeight& x, const AffineWeight& y);
bool operator<(const AffineWeight& x, const AffineWeight& y);

bool operator==(const AffineRoot& x, const AffineRoot& y);

bool root_is_real(const AffineRoot& r);
bool root_is_positive(const AffineRoot& r);  // n>0, or n=0 and finite part > 0
AffineRoot root_negate(const AffineRoot& r);

// Minimal conformal weight of a highest-weight module with this top weight.
inline Rat h_of(const AffineWeight& w) { return -w.d; }

class RootSystem {
 public:
  explicit RootSystem(int rank);

  int rank() const { return l_; }
  int h_vee() const { return l_ + 1; }
  long dim_g() const { return static_cast<long>(l_) * (l_ + 2); }
  long dim_g0() const { return static_cast<long>(l_) * l_; }

  long cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // 1-based
  const Rat& cartan_inv(int i, int j) const { return cartan_inv_[i - 1][j - 1]; }

  // invariant form, |alpha_i|^2 = 2
  Rat form_ww(const RatVec& a, const RatVec& b) const;
  Rat form_wr(const RatVec& a, const IVec& r) const;
  long form_rr(const IVec& r, const IVec& s) const;

  // <lam, alpha^vee> for a finite root; equals (lam|alpha) at norm 2
  Rat pairing(const RatVec& lam, const IVec& alpha) const;
  // <Lam, (abar + n delta)^vee> = <lambar, abar^vee> + n * level (real roots)
  Rat pairing_aff(const AffineWeight& w, const AffineRoot& r) const;

  RatVec root_to_weight(const IVec& r) const;        // Cartan * coords
  RatVec weight_to_alpha_coords(const RatVec& w) const;  // Cartan^{-1} * coords

  bool is_root(const IVec& r) const;
  std::vector<IVec> positive_roots() const;     // all of Delta-bar^+
  std::vector<IVec> positive_roots_g0() const;  // the A_{l-1} part (degree 0)
  int grading_degree(const IVec& r) const;      // alpha_l-coordinate; r must be a root

  IVec alpha(int i) const;  // i in 1..l
  IVec beta(int i) const;   // i in 1..l, beta_i = alpha_i + ... + alpha_l
  IVec beta0() const;
  IVec theta() const;
  AffineRoot alpha_aff(int i) const;  // i in 0..l

  RatVec omega(int i) const;  // i in 1..l
  RatVec rho_bar() const;
  AffineWeight rho_aff() const;  // level h_vee, d = 0
  RatVec zero_weight() const { return RatVec(l_, Rat(0)); }

  bool in_Pbar0plus(const RatVec& lam) const;
  bool in_Pbarplus(const RatVec& lam) const;
  bool in_P0plus(const AffineWeight& w) const;

  AffineWeight reflect(const AffineWeight& w, const AffineRoot& r) const;
  // w + c * (abar + n delta)
  AffineWeight add_root(const AffineWeight& w, const AffineRoot& r, const Rat& c) const;

  // Sugawara value of d for a highest weight: -(lam|lam+2 rho_bar)/(2 kappa).
  Rat sugawara_d(const RatVec& lam, const Rat& level) const;
  AffineWeight make_weight(const RatVec& lam, const Rat& level) const;  // Sugawara d
  AffineWeight make_weight(const RatVec& lam, const Rat& level, const Rat& d) const;

 private:
  int l_;
  std::vector<std::vector<long>> cartan_;
  RatMat cartan_inv_;
};

}  // namespace rlx
