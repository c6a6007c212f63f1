#include "relaxedchar/admissible.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "relaxedchar/weyl.hpp"

namespace rlx {

namespace {

RatVec vadd(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// pairing of lam with the coroot of a finite root (long roots, norm 2)
Rat coroot_pair(const RootSystem& rs, const RatVec& lam, const IVec& alpha) {
  return rs.pairing(lam, alpha);
}

}  // namespace

AdmissibilityReport is_admissible(const RootSystem& rs, const AffineWeight& Lambda,
                                  long denominator_hint) {
  AdmissibilityReport rep;
  rep.weight = Lambda;
  Rat kappa = Lambda.level + Rat(rs.h_vee());
  if (kappa == 0) throw std::domain_error("is_admissible: critical level");

  RatVec shifted = vadd(Lambda.lam, rs.rho_bar());
  std::vector<IVec> pos = rs.positive_roots();

  auto violated = [&](const IVec& abar, long n) {
    rep.violated_root = AffineRoot{abar, n};
  };

  for (const IVec& a : pos) {
    for (int sgn : {+1, -1}) {
      IVec abar(a);
      if (sgn < 0)
        for (long& x : abar) x = -x;
      Rat c = coroot_pair(rs, shifted, abar);
      if (sgn > 0 && rat_is_int(c) && c <= 0 && !rep.violated_root) violated(abar, 0);
      // pairings along the ladder: c + n*kappa for n >= 1
      if (kappa > 0) {
        // nonpositive only while n <= -c/kappa
        if (c < 0) {
          long nmax = rat_floor(-c / kappa).get_si();
          for (long n = 1; n <= nmax && !rep.violated_root; ++n)
            if (rat_is_int(c + Rat(n) * kappa)) violated(abar, n);
        }
      } else {
        // decreasing ladder: the first integral value at n >= ceil(-c/kappa)
        // is a violation; integrality is periodic with the denominator of kappa
        long n0 = std::max(1L, rat_ceil(-c / kappa).get_si());
        long period = static_cast<long>(kappa.get_den().get_si());
        for (long n = n0; n <= n0 + period && !rep.violated_root; ++n)
          if (rat_is_int(c + Rat(n) * kappa)) violated(abar, n);
      }
    }
  }

  long bound = denominator_hint > 0 ? 2 * denominator_hint + 2 : -1;
  IntegralWeylData iw = integral_data(rs, Lambda, bound);
  rep.integral_span_ok = iw.spans_all;
  rep.is_admissible = !rep.violated_root.has_value() && rep.integral_span_ok;
  return rep;
}

const std::vector<SingCoset>* SingData::find(const RatVec& lam) const {
  for (size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == lam) return &cosets[i];
  return nullptr;
}

SingData load_sing_data(const RootSystem& rs, const std::string& json_text) {
  SingData sd;
  nlohmann::json j = nlohmann::json::parse(json_text);
  for (auto& e : j.at("entries")) {
    RatVec lam;
    for (auto& c : e.at("lambda")) lam.push_back(rat_parse(c.get<std::string>()));
    if (static_cast<int>(lam.size()) != rs.rank())
      throw std::invalid_argument("sing data: weight has wrong rank");
    std::vector<SingCoset> cs;
    for (auto& c : e.at("cosets")) {
      SingCoset sc;
      for (auto& x : c.at("normal")) sc.normal.push_back(rat_parse(x.get<std::string>()));
      if (static_cast<int>(sc.normal.size()) != rs.rank())
        throw std::invalid_argument("sing data: normal has wrong rank");
      sc.offset = rat_parse(c.at("offset").get<std::string>());
      // the membership test (normal|mu) - offset in Z must descend to the
      // quotient by the root lattice
      for (int i = 1; i <= rs.rank(); ++i)
        if (!rat_is_int(rs.form_wr(sc.normal, rs.alpha(i))))
          throw std::invalid_argument("sing data: normal does not pair integrally with roots");
      cs.push_back(sc);
    }
    if (static_cast<int>(cs.size()) != rs.rank() + 1)
      throw std::invalid_argument("sing data: expected rank+1 cosets per weight");
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b)
        if (cs[a].normal == cs[b].normal && cs[a].offset == cs[b].offset)
          throw std::invalid_argument("sing data: duplicate coset");
    sd.weights.push_back(lam);
    sd.cosets.push_back(cs);
  }
  return sd;
}

namespace {

std::vector<SpectrumEntry> spectrum_box(const RootSystem& rs, const Rat& level,
                                        const SingData* sing, long box) {
  std::vector<SpectrumEntry> out;
  // coordinates 1..l-1 are nonnegative integers in P^{0,+}; the last is a
  // half-integer scanned symmetrically
  std::vector<long> idx(rs.rank(), 0);
  long last_steps = 4 * box + 1;  // last coordinate = (t - 2*box)/2, t in [0, 4*box]
  while (true) {
    RatVec lam(rs.rank());
    for (int i = 0; i + 1 < rs.rank(); ++i) lam[i] = Rat(idx[i]);
    lam[rs.rank() - 1] = frac(idx[rs.rank() - 1] - 2 * box, 2);
    AffineWeight cand = rs.make_weight(lam, level);
    if (rs.in_P0plus(cand)) {
      AdmissibilityReport rep = is_admissible(rs, cand, 2);
      if (rep.is_admissible) {
        SpectrumEntry e;
        e.weight = rep.weight;
        e.report = rep;
        e.relaxed = !rs.in_Pbarplus(lam);
        e.kind = e.relaxed ? "relaxed-simple" : "ordinary";
        if (sing) {
          const auto* cs = sing->find(lam);
          if (cs) {
            e.coset_resolved = true;
            e.excluded = *cs;
          }
        }
        out.push_back(std::move(e));
      }
    }
    // odometer
    int p = rs.rank() - 1;
    while (p >= 0) {
      ++idx[p];
      long lim = (p == rs.rank() - 1) ? last_steps : box + 1;
      if (idx[p] < lim) break;
      idx[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

bool same_weights(const std::vector<SpectrumEntry>& a, const std::vector<SpectrumEntry>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].weight.lam != b[i].weight.lam) return false;
  return true;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_spectrum(const RootSystem& rs, const Rat& level,
                                              const SingData* sing) {
  if (rs.rank() != 2) throw std::invalid_argument("enumerate_spectrum: rank must be 2");
  Rat kappa = level + Rat(rs.h_vee());
  if (kappa.get_den() != 2)
    throw std::invalid_argument("enumerate_spectrum: level must have kappa = p/2");
  Int p = kappa.get_num();  // reduced, so p is odd whenever the denominator is 2
  if (p < 3) throw std::invalid_argument("enumerate_spectrum: need odd numerator p >= 3");

  long box = p.get_si() + 2;
  auto base = spectrum_box(rs, level, sing, box);
  auto wider = spectrum_box(rs, level, sing, box + 2);
  if (!same_weights(base, wider))
    throw std::logic_error("enumerate_spectrum: search box is not stable");
  return base;
}

}  // namespace rlx
