#include "relaxedchar/charring.hpp"

#include <cassert>
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

RatVec vscale(const Rat& s, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

IVec iadd(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// half-sum of the degree-zero positive roots, in fundamental-weight coords
RatVec levi_rho(const RootSystem& rs) {
  RatVec r = rs.zero_weight();
  for (const IVec& g : rs.positive_roots_g0()) r = vadd(r, rs.root_to_weight(g));
  return vscale(frac(1, 2), r);
}

long height(const IVec& v) {
  long h = 0;
  for (long x : v) h += x;
  return h;
}

// m_1 = s_1, m_i = s_i - s_{i-1}: the ladder is realizable with nonnegative
// integer multiplicities of beta_1..beta_l iff s starts >= 0 and never drops.
bool beta_ladder_ok(const IVec& s) {
  long prev = 0;
  for (long x : s) {
    if (x < prev) return false;
    prev = x;
  }
  return true;
}

bool integral_coords(const RatVec& t, IVec& out) {
  out.assign(t.size(), 0);
  for (size_t i = 0; i < t.size(); ++i) {
    if (!rat_is_int(t[i])) return false;
    out[i] = int_to_long(rat_floor(t[i]));
  }
  return true;
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const RatVec& lam) {
  if (!rs.in_Pbar0plus(lam))
    throw std::domain_error("weyl_dim: weight is not dominant integral for the degree-zero Levi");
  RatVec rho = levi_rho(rs);
  Rat dim(1);
  for (const IVec& g : rs.positive_roots_g0())
    dim *= (rs.form_wr(lam, g) + rs.form_wr(rho, g)) / rs.form_wr(rho, g);
  if (!rat_is_int(dim) || dim <= 0) throw std::logic_error("weyl_dim: bad product value");
  return dim.get_num();
}

FiniteCharacter finite_simple_character(const RootSystem& rs, const RatVec& lam) {
  if (!rs.in_Pbar0plus(lam))
    throw std::domain_error("finite character: weight is not dominant integral for the Levi");
  FiniteCharacter ch;
  ch.highest = lam;
  ch.mult[lam] = 1;
  const std::vector<IVec> pos = rs.positive_roots_g0();
  if (pos.empty()) return ch;  // rank 1: the Levi is a torus

  RatVec rho = levi_rho(rs);
  RatVec lr = vadd(lam, rho);
  const Rat nlam = rs.form_ww(lr, lr);

  std::vector<RatVec> frontier{lam};
  while (!frontier.empty()) {
    std::set<RatVec, RatVecLess> cand;
    for (const RatVec& v : frontier)
      for (int i = 1; i < rs.rank(); ++i)
        cand.insert(vsub(v, rs.root_to_weight(rs.alpha(i))));

    std::vector<RatVec> next;
    for (const RatVec& mu : cand) {
      if (ch.mult.count(mu)) continue;
      RatVec mr = vadd(mu, rho);
      Rat den = nlam - rs.form_ww(mr, mr);
      // every weight of the module except the highest sits strictly inside
      // the |.+rho| sphere, so den <= 0 certifies multiplicity zero
      if (den <= 0) continue;

      // Freudenthal: 2 sum_{g>0} sum_{j>=1} m(mu+jg) (mu+jg|g)
      IVec dcoords;
      if (!integral_coords(rs.weight_to_alpha_coords(vsub(lam, mu)), dcoords))
        throw std::logic_error("freudenthal: weight off the root lattice of the top");
      long ht = height(dcoords);
      Rat num(0);
      for (const IVec& g : pos) {
        long hg = height(g);
        RatVec gw = rs.root_to_weight(g);
        RatVec up = mu;
        for (long j = 1; j * hg <= ht; ++j) {
          up = vadd(up, gw);
          auto it = ch.mult.find(up);
          if (it == ch.mult.end()) continue;
          num += Rat(it->second) * rs.form_wr(up, g);
        }
      }
      num *= 2;
      if (num == 0) continue;
      Rat m = num / den;
      if (!rat_is_int(m) || m < 0) throw std::logic_error("freudenthal: non-integral multiplicity");
      if (m == 0) continue;
      ch.mult[mu] = m.get_num();
      next.push_back(mu);
    }
    frontier = std::move(next);
  }
  return ch;
}

Int parabolic_verma_finite_mult(const RootSystem& rs, const FiniteCharacter& top,
                                const RatVec& mu) {
  Int total(0);
  for (const auto& [nu, m] : top.mult) {
    IVec s;
    if (!integral_coords(rs.weight_to_alpha_coords(vsub(nu, mu)), s)) continue;
    if (beta_ladder_ok(s)) total += m;
  }
  return total;
}

KostantPartition::KostantPartition(const RootSystem& rs) : roots_(rs.positive_roots()) {}

Int KostantPartition::count(const IVec& v) {
  for (long x : v)
    if (x < 0) return Int(0);
  return rec(0, v);
}

Int KostantPartition::rec(size_t idx, const IVec& v) {
  bool zero = true;
  for (long x : v)
    if (x != 0) {
      zero = false;
      break;
    }
  if (zero) return Int(1);
  if (idx == roots_.size()) return Int(0);
  auto key = std::make_pair(idx, v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Int total(0);
  IVec rem = v;
  for (;;) {
    total += rec(idx + 1, rem);
    bool can = true;
    for (size_t t = 0; t < rem.size(); ++t) {
      rem[t] -= roots_[idx][t];
      if (rem[t] < 0) can = false;
    }
    if (!can) break;
  }
  memo_.emplace(key, total);
  return total;
}

ModeTable depth_modes(const RootSystem& rs, long order) {
  if (order < 0) throw std::invalid_argument("depth_modes: negative order");
  ModeTable mt;
  mt.order = order;
  mt.level.assign(static_cast<size_t>(order) + 1, {});
  mt.level[0][IVec(rs.rank(), 0)] = 1;

  std::vector<IVec> dirs;
  for (const IVec& g : rs.positive_roots()) {
    dirs.push_back(g);
    IVec neg(g.size());
    for (size_t t = 0; t < g.size(); ++t) neg[t] = -g[t];
    dirs.push_back(neg);
  }
  // unbounded multiset over classes (depth i, offset w): complete-knapsack
  for (long i = 1; i <= order; ++i)
    for (const IVec& w : dirs)
      for (long n = i; n <= order; ++n)
        for (const auto& [off, cnt] : mt.level[n - i]) mt.level[n][iadd(off, w)] += cnt;

  // the l Cartan modes per depth carry no weight: convolve with phi^{-l}
  QSeries pc = phi_inverse_power(rs.rank(), order);
  std::vector<Int> p(static_cast<size_t>(order) + 1, Int(0));
  for (long n = 0; n <= order && n < pc.len(); ++n) {
    assert(rat_is_int(pc.c[n]));
    p[n] = pc.c[n].get_num();
  }
  std::vector<std::map<IVec, Int>> out(static_cast<size_t>(order) + 1);
  for (long n = 0; n <= order; ++n)
    for (long m = 0; m <= n; ++m) {
      if (p[m] == 0) continue;
      for (const auto& [off, cnt] : mt.level[n - m]) out[n][off] += p[m] * cnt;
    }
  mt.level = std::move(out);
  return mt;
}

RatVec coset_representative(const RootSystem& rs, const RatVec& lam) {
  RatVec t = rs.weight_to_alpha_coords(lam);
  RatVec r = lam;
  for (int i = 1; i <= rs.rank(); ++i) {
    Int f = rat_floor(t[i - 1]);
    if (f != 0) r = vsub(r, vscale(Rat(f), rs.root_to_weight(rs.alpha(i))));
  }
  return r;
}

QSeries string_of(const RootSystem& rs, const QZCharacter& ch, const RatVec& mu) {
  if (ch.coset_uniform) {
    RatVec rep = coset_representative(rs, mu);
    auto it = ch.strings.find(rep);
    if (it == ch.strings.end())
      throw std::out_of_range("string_of: weight is not in a stored coset");
    return it->second;
  }
  auto it = ch.strings.find(mu);
  if (it == ch.strings.end())
    throw std::out_of_range(
        "string_of: weight outside the stored list; compute its string directly");
  return it->second;
}

Rat base_exponent(const RootSystem& rs, const AffineWeight& L) {
  Rat kappa = L.level + rs.h_vee();
  if (kappa == 0) throw std::domain_error("base_exponent: critical level");
  Rat c = L.level * rs.dim_g() / kappa;
  return h_of(L) - c / 24;
}

StringEngine::StringEngine(const RootSystem& rs, long order)
    : rs_(rs), order_(order), modes_(depth_modes(rs, order)), kostant_(rs) {}

QSeries StringEngine::verma_string(const AffineWeight& L, const RatVec& mu) {
  QSeries r = qs_zero(base_exponent(rs_, L), order_ + 1);
  IVec ofs;
  if (!integral_coords(rs_.weight_to_alpha_coords(vsub(L.lam, mu)), ofs)) return r;
  for (long n = 0; n <= order_; ++n) {
    Int cnt(0);
    for (const auto& [B, g] : modes_.level[n]) cnt += g * kostant_.count(iadd(ofs, B));
    r.c[n] = Rat(cnt);
  }
  return r;
}

QSeries StringEngine::parabolic_string(const AffineWeight& L, const FiniteCharacter& top,
                                       const RatVec& mu) {
  QSeries r = qs_zero(base_exponent(rs_, L), order_ + 1);
  // ladder targets per top weight: alpha-coords of nu - mu, when integral
  std::vector<std::pair<IVec, Int>> tops;
  for (const auto& [nu, m] : top.mult) {
    IVec t;
    if (integral_coords(rs_.weight_to_alpha_coords(vsub(nu, mu)), t)) tops.emplace_back(t, m);
  }
  for (long n = 0; n <= order_; ++n) {
    Int cnt(0);
    for (const auto& [B, g] : modes_.level[n])
      for (const auto& [t, m] : tops)
        if (beta_ladder_ok(iadd(t, B))) cnt += g * m;
    r.c[n] = Rat(cnt);
  }
  return r;
}

QZCharacter affine_parabolic_verma_char(const RootSystem& rs, const AffineWeight& Lambda,
                                        long order, const std::vector<RatVec>* targets) {
  if (!rs.in_P0plus(Lambda))
    throw std::domain_error("parabolic Verma needs a Levi-dominant-integral top weight");
  FiniteCharacter top = finite_simple_character(rs, Lambda.lam);
  StringEngine eng(rs, order);

  QZCharacter ch;
  ch.level = Lambda.level;
  ch.base = base_exponent(rs, Lambda);
  ch.order = order;
  ch.coset_uniform = false;

  std::set<RatVec, RatVecLess> keys;
  if (targets) {
    keys.insert(targets->begin(), targets->end());
  } else {
    // default window: nu + (depth offset) - sum m_i beta_i with sum m_i <= order
    std::set<IVec> depth_offsets;
    for (long n = 0; n <= order; ++n)
      for (const auto& [B, cnt] : eng.modes().level[n]) {
        (void)cnt;
        depth_offsets.insert(B);
      }
    std::vector<IVec> msums;
    IVec m(rs.rank(), 0);
    // compositions with total <= order
    for (;;) {
      IVec s(rs.rank(), 0);
      for (int i = 1; i <= rs.rank(); ++i) {
        // sum of m_j beta_j in simple-root coordinates: coordinate i sums m_j, j <= i
        long acc = 0;
        for (int j = 1; j <= i; ++j) acc += m[j - 1];
        s[i - 1] = acc;
      }
      msums.push_back(s);
      int i = 0;
      while (i < rs.rank()) {
        ++m[i];
        if (height(m) <= order) break;
        m[i] = 0;
        ++i;
      }
      if (i == rs.rank()) break;
    }
    for (const auto& [nu, cnt] : top.mult) {
      (void)cnt;
      for (const IVec& B : depth_offsets)
        for (const IVec& s : msums) {
          IVec off(rs.rank());
          for (int t = 0; t < rs.rank(); ++t) off[t] = B[t] - s[t];
          keys.insert(vadd(nu, rs.root_to_weight(off)));
        }
    }
  }

  for (const RatVec& mu : keys) {
    QSeries s = eng.parabolic_string(Lambda, top, mu);
    bool nonzero = false;
    for (const Rat& x : s.c)
      if (x != 0) {
        nonzero = true;
        break;
      }
    if (nonzero || targets) ch.strings.emplace(mu, std::move(s));
  }
  return ch;
}

QSeries limiting_string(const RootSystem& rs, const std::vector<CharacterTerm>& terms,
                        long order) {
  if (terms.empty()) return qs_zero(Rat(0), order + 1);
  QSeries phid = phi_inverse_power(rs.dim_g(), order);
  QSeries acc;
  bool first = true;
  for (const CharacterTerm& t : terms) {
    Rat w = Rat(t.c) * Rat(weyl_dim(rs, t.Omega.lam));
    QSeries s = qs_shift(qs_scale(w, phid), base_exponent(rs, t.Omega));
    acc = first ? std::move(s) : qs_add(acc, s);
    first = false;
  }
  return acc;
}

}  // namespace rlx
