#pragma once

// Top of the character pipeline: central charges, conformal weights, relaxed
// Verma and relaxed simple characters of the affine algebra, ordinary
// characters of the associated minimal W-algebra, the eta-shift identity
// linking the two, the BGG alternating-sum identity, and the exact-rank
// report for the span of W-side strings.

#include <optional>
#include <utility>
#include <vector>

#include "relaxedchar/charring.hpp"
#include "relaxedchar/kl.hpp"

namespace rlx {

struct CentralData {
  int rank = 0;
  Rat level;
  Rat kappa;     // level + h_vee
  Rat c_affine;  // level * dim(gbar) / kappa
  Rat c_w;       // dim(gbar_0) - (12/kappa) |rho_bar - kappa omega_l|^2
};

CentralData central(int rank, const Rat& level);

struct ConformalWeights {
  Rat h;   // -d
  Rat hw;  // h - (kappa/2)|omega_l|^2 + (omega_l|rho_bar)
};

ConformalWeights conformal_weights(const RootSystem& rs, const AffineWeight& L);

// (h - c/24) - (h^W - c_W/24 - rank/12); identically zero at any noncritical
// level, and the reason the eta-shift identity is exponent-consistent.
Rat exponent_identity_gap(const RootSystem& rs, const AffineWeight& L);

// Character of the dense (twisted-localized) Verma-type module attached to
// the coset tag: one shared string deg * q^{h-c/24} / phi^{dim gbar}.  The
// stored key is the canonical representative of `coset` (default: the finite
// part of L).
QZCharacter relaxed_verma_character(const RootSystem& rs, const AffineWeight& L, long order,
                                    const RatVec* coset = nullptr);

// Same interface for the simple quotient: the linkage expansion into dense
// Verma-type characters, truncated at the requested order.  Coefficients are
// checked to be nonnegative integers; for a fully dominant integral finite
// part the series cancels to zero, matching the vanishing of the localized
// module.
QZCharacter relaxed_simple_character(const RootSystem& rs, const AffineWeight& L, long order,
                                     const RatVec* coset = nullptr,
                                     KLConvention conv = KLConvention::InverseP);

// q^{h^W - c_W/24} sum_Xi c_Xi q^{dh} deg(Xi) / phi^{rank^2}
QSeries w_ordinary_character(const RootSystem& rs, const AffineWeight& L, long order,
                             KLConvention conv = KLConvention::InverseP);

struct IdentityReport {
  bool equal = false;
  long orders_compared = 0;
  Rat max_abs_discrepancy;
  long first_bad_offset = -1;
};

// Coefficient-by-coefficient comparison of the relaxed simple string against
// eta^{-2 rank} times the W-algebra ordinary character.
IdentityReport main_identity_check(const RootSystem& rs, const AffineWeight& L,
                                   const RatVec& mu, long order,
                                   KLConvention conv = KLConvention::InverseP);

// ch[parabolic Verma] = alternating sum of full Verma characters over the
// Weyl group of the degree-zero Levi, compared string-by-string on a window
// of weights around the top.  Returns true when every compared string agrees
// to the requested order.
bool bgg_identity_check(const RootSystem& rs, const AffineWeight& L, long order);

struct SpanReport {
  std::vector<std::pair<long, int>> rank_at_order;
  int rank = 0;
  bool stable = false;  // the two largest orders agree
};

// Exact rank of the coefficient matrix of eta^{2 rank} * (relaxed simple
// string) across the given symbols, at each requested truncation order.
SpanReport modular_span(const RootSystem& rs, const std::vector<AffineWeight>& symbols,
                        const std::vector<long>& orders,
                        KLConvention conv = KLConvention::InverseP);

}  // namespace rlx
