#include "relaxedchar/kl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rlx {

namespace {

void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly scaled_shift(const IPoly& a, const Int& c, long k) {
  if (a.empty() || c == 0) return {};
  IPoly r(a.size() + k, Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i] * c;
  return r;
}

}  // namespace

IPoly ipoly_add(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IPoly ipoly_sub(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IPoly ipoly_shift(const IPoly& a, long k) { return scaled_shift(a, Int(1), k); }

int ipoly_deg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

Int ipoly_eval1(const IPoly& a) {
  Int s = 0;
  for (const Int& c : a) s += c;
  return s;
}

std::string ipoly_str(const IPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Int c = a[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Int ac = abs(c);
    if (ac != 1 || i == 0) os << ac.get_str();
    if (i >= 1) {
      os << "q";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

const std::vector<Word>& KLTable::lower_interval(const Word& y) {
  Word cy = ctx_->canonical(y);
  std::string key = word_str(cy);
  auto it = intervals_.find(key);
  if (it != intervals_.end()) return it->second;

  // closure under single-letter deletion; the strong exchange property makes
  // this reach every element below y
  std::set<std::string> seen;
  std::vector<Word> out;
  std::deque<Word> queue{cy};
  seen.insert(word_str(cy));
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (size_t i = 0; i < w.size(); ++i) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      for (size_t j = 0; j < w.size(); ++j)
        if (j != i) shorter.push_back(w[j]);
      Word c = ctx_->canonical(shorter);
      if (seen.insert(word_str(c)).second) queue.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return intervals_.emplace(key, std::move(out)).first->second;
}

const IPoly& KLTable::P(const Word& x0, const Word& y0) {
  Word x = ctx_->canonical(x0);
  Word y = ctx_->canonical(y0);
  auto key = std::make_pair(word_str(x), word_str(y));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  IPoly p = compute(x, y);
  if (!p.empty() && x != y) {
    long slack = static_cast<long>(y.size()) - static_cast<long>(x.size()) - 1;
    if (2 * ipoly_deg(p) > slack)
      throw std::logic_error("KL polynomial exceeds its degree bound: P(" + word_str(x) + "," +
                             word_str(y) + ") = " + ipoly_str(p));
  }
  return memo_.emplace(key, std::move(p)).first->second;
}

IPoly KLTable::compute(const Word& x, const Word& y) {
  if (x == y) return {Int(1)};
  if (x.size() >= y.size()) return {};
  if (!bruhat_leq(*ctx_, x, y)) return {};

  // the first letter of a canonical word is a left descent
  int s = y[0];
  Word v = ctx_->canonical(Word(y.begin() + 1, y.end()));
  Word sx_word;
  sx_word.push_back(s);
  sx_word.insert(sx_word.end(), x.begin(), x.end());
  Word sx = ctx_->canonical(sx_word);

  if (sx.size() > x.size()) return P(sx, y);

  IPoly r = ipoly_add(P(sx, v), ipoly_shift(P(x, v), 1));
  for (const Word& z : lower_interval(v)) {
    if (!ctx_->is_left_descent(z, s)) continue;
    if (!bruhat_leq(*ctx_, x, z)) continue;
    Int m = mu(z, v);
    if (m == 0) continue;
    long e = static_cast<long>(y.size()) - static_cast<long>(z.size());
    if (e % 2 != 0) throw std::logic_error("odd exponent in KL correction term");
    r = ipoly_sub(r, scaled_shift(P(x, z), m, e / 2));
  }
  return r;
}

Int KLTable::mu(const Word& x0, const Word& y0) {
  Word x = ctx_->canonical(x0);
  Word y = ctx_->canonical(y0);
  long e = static_cast<long>(y.size()) - static_cast<long>(x.size()) - 1;
  if (e < 0 || e % 2 != 0) return 0;
  const IPoly& p = P(x, y);
  size_t idx = static_cast<size_t>(e / 2);
  return idx < p.size() ? p[idx] : Int(0);
}

BlockCone block_cone(const IntegralWeylData& iw, const OrbitRep& rep, const Rat& energy_bound) {
  const CoxeterContext& ctx = iw.ctx;
  const RootSystem& rs = ctx.rs();
  if (rep.sign < 0) throw std::invalid_argument("block_cone expects a dominant representative");
  for (const Rat& p : iw.simple_pairings)
    if (p == 0) throw std::domain_error("singular block: cone expansion not defined");

  AffineWeight Lambda = dot(ctx, rep.w, rep.Omega);
  Rat h0 = h_of(Lambda);
  Rat H = h0 + energy_bound;

  // Reflections that can produce a cover inside the cone.  A cover raises h
  // by at least n(gamma) (regular dominant pairings are >= 1), so roots with
  // n beyond the energy bound cannot occur.
  AffineWeight omega_rho = rep.Omega;
  AffineWeight rho = rs.rho_aff();
  for (int i = 0; i < rs.rank(); ++i) omega_rho.lam[i] += rho.lam[i];
  omega_rho.level += rho.level;

  long nb = int_to_long(rat_ceil(energy_bound)) + 2;
  long nb_default = 2 * int_to_long(Int(rep.Omega.level.get_den())) + 2;
  nb = std::max(nb, nb_default);

  std::vector<Word> refl_words;
  for (const IVec& r : rs.positive_roots()) {
    for (int sgn : {+1, -1}) {
      IVec a = r;
      if (sgn < 0)
        for (long& c : a) c = -c;
      for (long n = 0; n <= nb; ++n) {
        AffineRoot g{a, n};
        if (!root_is_positive(g)) continue;
        if (!rat_is_int(rs.pairing_aff(omega_rho, g))) continue;
        refl_words.push_back(ctx.canonical_from_image(rs.reflect(ctx.base(), g)));
      }
    }
  }

  BlockCone cone;
  cone.rep = rep;
  cone.h_top = H;

  Word w0 = ctx.canonical(rep.w);
  std::set<std::string> seen{word_str(w0)};
  std::deque<Word> queue{w0};
  cone.elems.push_back({w0, Lambda, h0});
  while (!queue.empty()) {
    Word y = queue.front();
    queue.pop_front();
    for (const Word& t : refl_words) {
      Word z = ctx.product(t, y);
      if (z.size() != y.size() + 1) continue;  // covers only
      if (!seen.insert(word_str(z)).second) continue;
      AffineWeight wt = dot(ctx, z, rep.Omega);
      Rat h = h_of(wt);
      if (h > H) continue;
      cone.elems.push_back({z, wt, h});
      queue.push_back(z);
    }
  }
  std::sort(cone.elems.begin(), cone.elems.end(), [](const ConeEntry& a, const ConeEntry& b) {
    if (a.y.size() != b.y.size()) return a.y.size() < b.y.size();
    return a.y < b.y;
  });
  if (cone.elems.front().y != w0)
    throw std::logic_error("cone minimum is not the orbit representative");
  return cone;
}

namespace {

// antidominant side: the whole interval below w, exact and finite
BlockCone interval_cone(const IntegralWeylData& iw, const OrbitRep& rep) {
  const CoxeterContext& ctx = iw.ctx;
  BlockCone cone;
  cone.rep = rep;
  cone.h_top = h_of(iw.Lambda);
  for (const Word& y : bruhat_lower_interval(ctx, rep.w)) {
    AffineWeight wt = dot(ctx, y, rep.Omega);
    Rat h = h_of(wt);
    if (h > cone.h_top) cone.h_top = h;
    cone.elems.push_back({y, wt, h});
  }
  std::sort(cone.elems.begin(), cone.elems.end(), [](const ConeEntry& a, const ConeEntry& b) {
    if (a.y.size() != b.y.size()) return a.y.size() < b.y.size();
    return a.y < b.y;
  });
  return cone;
}

}  // namespace

VermaExpansion simple_in_verma(const IntegralWeylData& iw, const Rat& energy_bound,
                               KLConvention conv) {
  OrbitRep rep = dominant_representative(iw);
  const CoxeterContext& ctx = iw.ctx;
  KLTable kl(&ctx);

  if (rep.sign > 0) {
    BlockCone cone = block_cone(iw, rep, energy_bound);
    size_t n = cone.elems.size();
    std::vector<Int> a(n, Int(0));
    const Word& w = cone.elems[0].y;
    if (conv == KLConvention::DirectP) {
      for (size_t j = 0; j < n; ++j) {
        const Word& y = cone.elems[j].y;
        if (!bruhat_leq(ctx, w, y)) continue;
        Int v = ipoly_eval1(kl.P(w, y));
        a[j] = ((y.size() - w.size()) % 2 == 0) ? v : -v;
      }
    } else {
      // row w of the inverse of the unitriangular P(1) matrix on the cone;
      // valid because the cone is convex for the Bruhat order
      a[0] = 1;
      for (size_t j = 1; j < n; ++j) {
        Int s = 0;
        for (size_t i = 0; i < j; ++i) {
          if (a[i] == 0) continue;
          if (!bruhat_leq(ctx, cone.elems[i].y, cone.elems[j].y)) continue;
          s += a[i] * ipoly_eval1(kl.P(cone.elems[i].y, cone.elems[j].y));
        }
        a[j] = -s;
      }
    }
    return {std::move(cone), std::move(a), conv};
  }

  // antidominant branch: the classical finite formula, identical under both
  // conventions here
  BlockCone cone = interval_cone(iw, rep);
  size_t n = cone.elems.size();
  std::vector<Int> a(n, Int(0));
  Word w = ctx.canonical(rep.w);
  for (size_t j = 0; j < n; ++j) {
    const Word& y = cone.elems[j].y;
    Int v = ipoly_eval1(kl.P(y, w));
    a[j] = ((w.size() - y.size()) % 2 == 0) ? v : -v;
  }
  return {std::move(cone), std::move(a), conv};
}

VermaExpansion invert_to_simples(const IntegralWeylData& iw, const Rat& energy_bound,
                                 KLConvention conv) {
  OrbitRep rep = dominant_representative(iw);
  const CoxeterContext& ctx = iw.ctx;
  KLTable kl(&ctx);

  if (rep.sign > 0) {
    BlockCone cone = block_cone(iw, rep, energy_bound);
    size_t n = cone.elems.size();
    std::vector<Int> b(n, Int(0));
    const Word& w = cone.elems[0].y;
    if (conv == KLConvention::DirectP) {
      // inverse of the signed P(1) matrix on the cone
      b[0] = 1;
      for (size_t j = 1; j < n; ++j) {
        Int s = 0;
        for (size_t i = 0; i < j; ++i) {
          if (b[i] == 0) continue;
          const Word& z = cone.elems[i].y;
          const Word& y = cone.elems[j].y;
          if (!bruhat_leq(ctx, z, y)) continue;
          Int v = ipoly_eval1(kl.P(z, y));
          s += b[i] * (((y.size() - z.size()) % 2 == 0) ? v : -v);
        }
        b[j] = -s;
      }
    } else {
      for (size_t j = 0; j < n; ++j) {
        const Word& y = cone.elems[j].y;
        if (!bruhat_leq(ctx, w, y)) continue;
        b[j] = ipoly_eval1(kl.P(w, y));
      }
    }
    return {std::move(cone), std::move(b), conv};
  }

  BlockCone cone = interval_cone(iw, rep);
  size_t n = cone.elems.size();
  std::vector<Int> b(n, Int(0));
  Word w = ctx.canonical(rep.w);
  for (size_t j = 0; j < n; ++j) b[j] = ipoly_eval1(kl.P(cone.elems[j].y, w));
  return {std::move(cone), std::move(b), conv};
}

namespace {

std::string weight_key(const AffineWeight& v) {
  std::string k;
  for (const Rat& c : v.lam) {
    k += rat_str(c);
    k += ',';
  }
  k += ';';
  k += rat_str(v.d);
  return k;
}

struct LeviElement {
  std::vector<int> word;  // indices of finite simple reflections, 1-based
  int parity = 0;
};

// the Weyl group of the degree-zero Levi part: generated by the finite simple
// reflections other than the grading node
std::vector<LeviElement> levi_weyl(const RootSystem& rs) {
  const int l = rs.rank();
  std::vector<LeviElement> out{{{}, 0}};
  if (l <= 1) return out;

  auto act = [&](const std::vector<int>& word, RatVec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Rat p = rs.pairing(v, rs.alpha(*it));
      RatVec aw = rs.root_to_weight(rs.alpha(*it));
      for (int t = 0; t < l; ++t) v[t] -= p * aw[t];
    }
    return v;
  };

  RatVec probe = rs.rho_bar();
  std::set<std::string> seen;
  auto key = [&](const RatVec& v) {
    std::string k;
    for (const Rat& c : v) {
      k += rat_str(c);
      k += ',';
    }
    return k;
  };
  seen.insert(key(probe));
  std::deque<LeviElement> queue{out[0]};
  while (!queue.empty()) {
    LeviElement e = queue.front();
    queue.pop_front();
    for (int i = 1; i < l; ++i) {
      LeviElement f;
      f.word = e.word;
      f.word.insert(f.word.begin(), i);
      f.parity = (e.parity + 1) % 2;
      if (seen.insert(key(act(f.word, probe))).second) {
        out.push_back(f);
        queue.push_back(f);
      }
    }
  }
  return out;
}

// finite dot action of one Levi element on the lam part; d and level are fixed
AffineWeight levi_dot(const RootSystem& rs, const LeviElement& e, AffineWeight v) {
  RatVec rho = rs.rho_bar();
  for (int t = 0; t < rs.rank(); ++t) v.lam[t] += rho[t];
  for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
    Rat p = rs.pairing(v.lam, rs.alpha(*it));
    RatVec aw = rs.root_to_weight(rs.alpha(*it));
    for (int t = 0; t < rs.rank(); ++t) v.lam[t] -= p * aw[t];
  }
  for (int t = 0; t < rs.rank(); ++t) v.lam[t] -= rho[t];
  return v;
}

}  // namespace

ParabolicExpansion parabolic_coefficients(const RootSystem& rs, const AffineWeight& Lambda,
                                          const Rat& energy_bound, KLConvention conv) {
  IntegralWeylData iw = integral_data(rs, Lambda);
  VermaExpansion ve = simple_in_verma(iw, energy_bound, conv);
  const int l = rs.rank();

  // coefficients keyed by the Verma weight
  std::map<std::string, Int> aw;
  for (size_t j = 0; j < ve.cone.elems.size(); ++j) {
    auto ins = aw.emplace(weight_key(ve.cone.elems[j].wt), ve.a[j]);
    if (!ins.second) throw std::logic_error("repeated weight in a regular block cone");
  }

  std::vector<LeviElement> W0 = levi_weyl(rs);

  struct Acc {
    AffineWeight Xi;
    Int c;
  };
  std::map<std::string, Acc> acc;

  RatVec rho = rs.rho_bar();
  for (size_t j = 0; j < ve.cone.elems.size(); ++j) {
    if (ve.a[j] == 0) continue;
    AffineWeight nu = ve.cone.elems[j].wt;

    // walk nu to the Levi-dominant chamber under the dot action
    AffineWeight xi = nu;
    int parity = 0;
    bool singular = false;
    for (;;) {
      int bad = -1;
      for (int i = 1; i < l; ++i) {
        RatVec sh = xi.lam;
        for (int t = 0; t < l; ++t) sh[t] += rho[t];
        Rat p = rs.pairing(sh, rs.alpha(i));
        if (p == 0) {
          singular = true;
          break;
        }
        if (p < 0) {
          bad = i;
          break;
        }
      }
      if (singular || bad < 0) break;
      RatVec sh = xi.lam;
      for (int t = 0; t < l; ++t) sh[t] += rho[t];
      Rat p = rs.pairing(sh, rs.alpha(bad));
      RatVec awt = rs.root_to_weight(rs.alpha(bad));
      for (int t = 0; t < l; ++t) xi.lam[t] -= p * awt[t];
      parity ^= 1;
    }

    if (singular) {
      if (ve.a[j] != 0)
        throw std::logic_error("nonzero coefficient on a Levi-singular weight");
      continue;
    }

    Int c = parity ? -ve.a[j] : ve.a[j];
    std::string k = weight_key(xi);
    auto it = acc.find(k);
    if (it == acc.end()) {
      acc.emplace(k, Acc{xi, c});
    } else if (it->second.c != c) {
      throw std::logic_error("Levi antisymmetry violated in the Verma expansion");
    }
  }

  // every orbit member must carry the matching signed coefficient, including
  // members that fell outside the Bruhat cone (coefficient 0)
  for (const auto& [k, axi] : acc) {
    (void)k;
    if (axi.c == 0) continue;
    for (const LeviElement& e : W0) {
      AffineWeight nu = levi_dot(rs, e, axi.Xi);
      auto it = aw.find(weight_key(nu));
      Int have = it == aw.end() ? Int(0) : it->second;
      Int want = e.parity ? -axi.c : axi.c;
      if (have != want) throw std::logic_error("Levi antisymmetry violated in the Verma expansion");
    }
  }

  ParabolicExpansion pe;
  pe.Lambda = Lambda;
  pe.rep = ve.cone.rep;
  pe.conv = conv;
  Rat h0 = h_of(Lambda);
  for (const auto& [k, axi] : acc) {
    (void)k;
    if (axi.c == 0) continue;
    if (!rs.in_P0plus(axi.Xi))
      throw std::logic_error("Levi-dominant weight not integral on the Levi nodes");
    pe.terms.push_back({axi.Xi, axi.c, h_of(axi.Xi) - h0});
  }
  std::sort(pe.terms.begin(), pe.terms.end(), [](const ParabolicTerm& a, const ParabolicTerm& b) {
    if (a.dh != b.dh) return a.dh < b.dh;
    return ratvec_cmp(a.Xi.lam, b.Xi.lam) < 0;
  });
  return pe;
}

}  // namespace rlx
