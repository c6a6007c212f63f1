#pragma once

// Admissibility of affine weights and enumeration of the level-k spectrum.
//
// A noncritical weight is admissible when no positive real coroot pairs with
// Lambda+rho in the nonpositive integers, and the integral roots span the
// full rational root space.  Both conditions reduce to finite checks: for
// each finite root the pairings along its delta-ladder form an arithmetic
// progression, so only finitely many n can land in Z_{<=0}, and the span is
// read off the computed simple integral system.

#include <optional>
#include <string>
#include <vector>

#include "relaxedchar/cartan.hpp"

namespace rlx {

struct AdmissibilityReport {
  AffineWeight weight;
  bool is_admissible = false;
  std::optional<AffineRoot> violated_root;  // a witness when the ladder check fails
  bool integral_span_ok = false;
};

// denominator_hint > 0 widens the integral-root search to delta-coordinates
// up to 2*hint + 2; the default bound follows the level's denominator.
AdmissibilityReport is_admissible(const RootSystem& rs, const AffineWeight& Lambda,
                                  long denominator_hint = -1);

// A singular coset of the finite weight lattice modulo the root lattice,
// supplied by the user as a normal direction (omega-coordinates, must pair
// integrally with the root lattice) and a rational offset: the class mu+Qbar
// is excluded when (normal|mu) - offset is an integer.
struct SingCoset {
  RatVec normal;
  Rat offset;
};

// Sing sets are user input, never computed here: one list of exactly
// rank+1 pairwise-distinct cosets per finite weight, loaded from JSON of
// the shape {"entries":[{"lambda":["0","-1/2"],
//                        "cosets":[{"normal":["1","0"],"offset":"1/2"},...]}]}.
struct SingData {
  std::vector<RatVec> weights;  // parallel lists
  std::vector<std::vector<SingCoset>> cosets;

  const std::vector<SingCoset>* find(const RatVec& lam) const;
};

SingData load_sing_data(const RootSystem& rs, const std::string& json_text);

struct SpectrumEntry {
  std::string kind;  // "relaxed-simple" or "ordinary"
  AffineWeight weight;
  AdmissibilityReport report;
  bool relaxed = false;         // finite part not dominant integral
  bool coset_resolved = false;  // sing data available for this weight
  std::vector<SingCoset> excluded;
};

// The denominator-2 spectrum for rank 2: all admissible weights of the given
// level whose finite part lies in P^{0,+} with coordinates in (1/2)Z.  The
// search box is derived from the numerator and re-run enlarged; a discrepancy
// throws, so a returned list is box-stable.  Entries with relaxed=false are
// the dominant-integral tops whose relaxed characters vanish; the others
// index genuine coset families (the full lattice quotient minus Sing),
// resolved against Sing data when the caller supplies it.
std::vector<SpectrumEntry> enumerate_spectrum(const RootSystem& rs, const Rat& level,
                                              const SingData* sing = nullptr);

}  // namespace rlx
