#include "relaxedchar/characters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rlx {

namespace {

RatVec vadd(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vsub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// |rho_bar - kappa omega_l|^2 expanded through the closed forms
// |rho_bar|^2 = l(l+1)(l+2)/12, (rho_bar|omega_l) = l/2, |omega_l|^2 = l/(l+1)
Rat rho_shift_norm(int l, const Rat& kappa) {
  return frac(static_cast<long>(l) * (l + 1) * (l + 2), 12) - kappa * l +
         kappa * kappa * frac(l, l + 1);
}

// reflection in the i-th finite simple root, acting on fundamental-weight coords
RatVec finite_reflect(const RootSystem& rs, const RatVec& v, int i) {
  Rat p = rs.pairing(v, rs.alpha(i));
  RatVec a = rs.root_to_weight(rs.alpha(i));
  RatVec r = v;
  for (size_t t = 0; t < r.size(); ++t) r[t] -= p * a[t];
  return r;
}

RatVec finite_apply(const RootSystem& rs, const Word& w, RatVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = finite_reflect(rs, v, *it);
  return v;
}

// the Weyl group of the degree-zero Levi (generators 1..rank-1), with parities
std::vector<std::pair<Word, int>> levi_weyl_group(const RootSystem& rs) {
  std::vector<std::pair<Word, int>> out{{Word{}, +1}};
  if (rs.rank() < 2) return out;
  RatVec probe = rs.zero_weight();
  for (int i = 1; i < rs.rank(); ++i) probe[i - 1] = i;  // Levi-regular
  std::map<RatVec, bool, RatVecLess> seen;
  seen[probe] = true;
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int i = 1; i < rs.rank(); ++i) {
        Word wi = w;
        wi.insert(wi.begin(), i);  // s_i * w
        RatVec img = finite_apply(rs, wi, probe);
        if (seen.emplace(img, true).second) {
          out.push_back({wi, wi.size() % 2 == 0 ? +1 : -1});
          next.push_back(wi);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

RatVec finite_dot(const RootSystem& rs, const Word& w, const RatVec& lam) {
  return vsub(finite_apply(rs, w, vadd(lam, rs.rho_bar())), rs.rho_bar());
}

const QSeries& unique_string(const QZCharacter& ch) {
  if (ch.strings.size() != 1)
    throw std::logic_error("expected a single shared string on this character");
  return ch.strings.begin()->second;
}

}  // namespace

CentralData central(int rank, const Rat& level) {
  if (rank < 1) throw std::invalid_argument("central: rank must be positive");
  CentralData cd;
  cd.rank = rank;
  cd.level = level;
  cd.kappa = level + (rank + 1);
  if (cd.kappa == 0) throw std::domain_error("central: critical level");
  cd.c_affine = level * (static_cast<long>(rank) * (rank + 2)) / cd.kappa;
  cd.c_w = Rat(static_cast<long>(rank) * rank) - 12 * rho_shift_norm(rank, cd.kappa) / cd.kappa;
  return cd;
}

ConformalWeights conformal_weights(const RootSystem& rs, const AffineWeight& L) {
  Rat kappa = L.level + rs.h_vee();
  if (kappa == 0) throw std::domain_error("conformal_weights: critical level");
  ConformalWeights cw;
  cw.h = h_of(L);
  cw.hw = cw.h - kappa / 2 * frac(rs.rank(), rs.rank() + 1) + frac(rs.rank(), 2);
  return cw;
}

Rat exponent_identity_gap(const RootSystem& rs, const AffineWeight& L) {
  CentralData cd = central(rs.rank(), L.level);
  ConformalWeights cw = conformal_weights(rs, L);
  return (cw.h - cd.c_affine / 24) - (cw.hw - cd.c_w / 24 - frac(rs.rank(), 12));
}

QZCharacter relaxed_verma_character(const RootSystem& rs, const AffineWeight& L, long order,
                                    const RatVec* coset) {
  if (!rs.in_P0plus(L))
    throw std::domain_error("relaxed Verma character needs a Levi-dominant-integral top");
  QZCharacter ch;
  ch.level = L.level;
  ch.order = order;
  ch.coset_uniform = true;
  ch.base = base_exponent(rs, L);
  QSeries s = qs_shift(
      qs_scale(Rat(weyl_dim(rs, L.lam)), phi_inverse_power(rs.dim_g(), order)), ch.base);
  ch.strings.emplace(coset_representative(rs, coset ? *coset : L.lam), std::move(s));
  return ch;
}

QZCharacter relaxed_simple_character(const RootSystem& rs, const AffineWeight& L, long order,
                                     const RatVec* coset, KLConvention conv) {
  if (!rs.in_P0plus(L))
    throw std::domain_error("relaxed simple character needs a Levi-dominant-integral top");
  ParabolicExpansion pe = parabolic_coefficients(rs, L, Rat(order), conv);
  std::vector<CharacterTerm> terms;
  terms.reserve(pe.terms.size());
  for (const ParabolicTerm& t : pe.terms) terms.push_back({t.Xi, t.c});

  QSeries s = terms.empty() ? qs_zero(base_exponent(rs, L), order + 1)
                            : limiting_string(rs, terms, order);
  for (const Rat& x : s.c)
    if (!rat_is_int(x) || x < 0)
      throw std::logic_error(
          "relaxed simple character has a negative or fractional coefficient; "
          "inversion convention is inconsistent");

  QZCharacter ch;
  ch.level = L.level;
  ch.order = order;
  ch.coset_uniform = true;
  ch.base = s.base;
  ch.strings.emplace(coset_representative(rs, coset ? *coset : L.lam), std::move(s));
  return ch;
}

QSeries w_ordinary_character(const RootSystem& rs, const AffineWeight& L, long order,
                             KLConvention conv) {
  if (!rs.in_P0plus(L))
    throw std::domain_error("w_ordinary_character needs a Levi-dominant-integral top");
  ParabolicExpansion pe = parabolic_coefficients(rs, L, Rat(order), conv);
  CentralData cd = central(rs.rank(), L.level);
  ConformalWeights cw = conformal_weights(rs, L);
  Rat base = cw.hw - cd.c_w / 24;

  QSeries phil = phi_inverse_power(static_cast<long>(rs.rank()) * rs.rank(), order);
  QSeries acc = qs_zero(base, order + 1);
  for (const ParabolicTerm& t : pe.terms) {
    Rat w = Rat(t.c) * Rat(weyl_dim(rs, t.Xi.lam));
    acc = qs_add(acc, qs_shift(qs_scale(w, phil), base + t.dh));
  }
  return acc;
}

IdentityReport main_identity_check(const RootSystem& rs, const AffineWeight& L,
                                   const RatVec& mu, long order, KLConvention conv) {
  QZCharacter rel = relaxed_simple_character(rs, L, order, &mu, conv);
  QSeries lhs = string_of(rs, rel, mu);
  QSeries w = w_ordinary_character(rs, L, order, conv);
  QSeries rhs = qs_mul(w, eta_power(-2 * rs.rank(), order));

  IdentityReport rep;
  rep.max_abs_discrepancy = Rat(0);
  if (lhs.base != rhs.base) {
    // can only happen if the exponent identity failed, which would be a bug
    rep.equal = false;
    rep.first_bad_offset = 0;
    rep.orders_compared = 0;
    rep.max_abs_discrepancy = abs(lhs.base - rhs.base);
    return rep;
  }
  long len = std::min(lhs.len(), rhs.len());
  rep.orders_compared = len;
  rep.equal = true;
  for (long i = 0; i < len; ++i) {
    Rat d = lhs.c[i] - rhs.c[i];
    if (d != 0) {
      if (rep.equal) rep.first_bad_offset = i;
      rep.equal = false;
      Rat a = abs(d);
      if (a > rep.max_abs_discrepancy) rep.max_abs_discrepancy = a;
    }
  }
  if (rep.equal) rep.first_bad_offset = -1;
  return rep;
}

bool bgg_identity_check(const RootSystem& rs, const AffineWeight& L, long order) {
  if (!rs.in_P0plus(L))
    throw std::domain_error("bgg_identity_check needs a Levi-dominant-integral top");
  StringEngine eng(rs, order);
  FiniteCharacter top = finite_simple_character(rs, L.lam);
  std::vector<std::pair<Word, int>> group = levi_weyl_group(rs);

  // finite parts of the dotted tops, with parities
  std::vector<std::pair<AffineWeight, int>> tops;
  long spread = 0;
  for (const auto& [w, sign] : group) {
    AffineWeight Lw{finite_dot(rs, w, L.lam), L.level, L.d};
    RatVec diff = vsub(L.lam, Lw.lam);
    RatVec t = rs.weight_to_alpha_coords(diff);
    long h = 0;
    for (const Rat& x : t) {
      if (!rat_is_int(x)) throw std::logic_error("Levi dot image off the root lattice");
      h += int_to_long(rat_floor(x));
    }
    spread = std::max(spread, h);
    tops.push_back({Lw, sign});
  }

  // compare strings on a box of weights around the top: raising directions up
  // to `order`, lowering far enough to cover the spread between the tops
  std::vector<long> lo(rs.rank(), -order), hi(rs.rank(), order + spread);
  IVec off = IVec(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) off[i] = lo[i];
  for (;;) {
    RatVec mu = vsub(L.lam, rs.root_to_weight(off));
    QSeries lhs = eng.parabolic_string(L, top, mu);
    QSeries rhs = qs_zero(lhs.base, order + 1);
    for (const auto& [Lw, sign] : tops)
      rhs = sign > 0 ? qs_add(rhs, eng.verma_string(Lw, mu))
                     : qs_sub(rhs, eng.verma_string(Lw, mu));
    if (!qs_equal(lhs, rhs)) return false;

    int i = 0;
    while (i < rs.rank()) {
      ++off[i];
      if (off[i] <= hi[i]) break;
      off[i] = lo[i];
      ++i;
    }
    if (i == rs.rank()) break;
  }
  return true;
}

SpanReport modular_span(const RootSystem& rs, const std::vector<AffineWeight>& symbols,
                        const std::vector<long>& orders, KLConvention conv) {
  if (symbols.empty() || orders.empty())
    throw std::invalid_argument("modular_span: nothing to span");
  long nmax = *std::max_element(orders.begin(), orders.end());

  // one row per symbol at the largest order; smaller orders are windows
  std::vector<QSeries> rows;
  QSeries eta = eta_power(2 * rs.rank(), nmax);
  for (const AffineWeight& L : symbols) {
    QZCharacter ch = relaxed_simple_character(rs, L, nmax, nullptr, conv);
    rows.push_back(qs_mul(eta, unique_string(ch)));
  }

  SpanReport rep;
  std::vector<long> sorted = orders;
  std::sort(sorted.begin(), sorted.end());
  for (long N : sorted) {
    Rat emax = rows[0].base;
    for (const QSeries& r : rows) emax = std::min(emax, r.base);
    emax += N;  // highest exponent every row knows
    std::set<Rat> cols;
    for (const QSeries& r : rows)
      for (long j = 0; j <= N && j < r.len(); ++j)
        if (r.base + j <= emax && r.c[j] != 0) cols.insert(r.base + j);
    RatMat m;
    for (const QSeries& r : rows) {
      RatVec row;
      for (const Rat& e : cols) {
        Rat rel = e - r.base;
        if (rel < 0 || !rat_is_int(rel)) {
          row.push_back(Rat(0));
          continue;
        }
        long j = int_to_long(rat_floor(rel));
        row.push_back(j < r.len() ? r.c[j] : Rat(0));
      }
      m.push_back(std::move(row));
    }
    rep.rank_at_order.push_back({N, cols.empty() ? 0 : rat_rank(m)});
  }
  rep.rank = rep.rank_at_order.back().second;
  size_t n = rep.rank_at_order.size();
  rep.stable = n >= 2 && rep.rank_at_order[n - 1].second == rep.rank_at_order[n - 2].second;
  return rep;
}

}  // namespace rlx
