#include "relaxedchar/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rlx {

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += 's' + std::to_string(w[i]);
  }
  return s;
}

Word word_parse(const std::string& s) {
  if (s.empty() || s == "e") return {};
  Word w;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 's') throw ParseError("bad Weyl word: " + s);
    ++i;
    size_t j = i;
    while (j < s.size() && s[j] != '.') ++j;
    w.push_back(std::stoi(s.substr(i, j - i)));
    i = (j < s.size()) ? j + 1 : j;
  }
  return w;
}

CoxeterContext::CoxeterContext(const RootSystem* rs, std::vector<AffineRoot> gens,
                               AffineWeight base)
    : rs_(rs), gens_(std::move(gens)), base_(std::move(base)) {
  for (const AffineRoot& g : gens_) {
    if (!root_is_real(g)) throw std::invalid_argument("generator root must be real");
    if (rs_->pairing_aff(base_, g) <= 0)
      throw std::invalid_argument("base weight not strictly dominant for generators");
  }
}

AffineWeight CoxeterContext::apply(const Word& w, AffineWeight v) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = rs_->reflect(v, gens_[*it]);
  return v;
}

AffineRoot CoxeterContext::apply_root(const Word& w, AffineRoot r) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const AffineRoot& g = gens_[*it];
    long c2 = 0;
    for (size_t a = 0; a < r.a.size(); ++a)
      for (size_t b = 0; b < g.a.size(); ++b)
        c2 += r.a[a] * rs_->cartan(static_cast<int>(a) + 1, static_cast<int>(b) + 1) * g.a[b];
    long norm = rs_->form_rr(g.a, g.a);
    long c = 2 * c2 / norm;  // integral for roots of a common system
    for (size_t t = 0; t < r.a.size(); ++t) r.a[t] -= c * g.a[t];
    r.n -= c * g.n;
  }
  return r;
}

bool CoxeterContext::sub_positive(const AffineRoot& r) const {
  int s = sgn(rs_->pairing_aff(base_, r));
  if (s == 0) throw std::logic_error("root not regular against base weight");
  return s > 0;
}

Word CoxeterContext::canonical_from_image(AffineWeight mu) const {
  Word out;
  const long cap = 100000;
  for (long step = 0; step <= cap; ++step) {
    int neg = -1;
    for (int i = 0; i < num_gens(); ++i) {
      if (rs_->pairing_aff(mu, gens_[i]) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) {
      if (!(mu == base_))
        throw std::logic_error("chamber walk ended away from base (image not in orbit)");
      return out;
    }
    out.push_back(neg);
    mu = rs_->reflect(mu, gens_[neg]);
  }
  throw std::logic_error("chamber walk did not terminate");
}

Word CoxeterContext::canonical(const Word& w) const { return canonical_from_image(apply(w, base_)); }

Word CoxeterContext::product(const Word& a, const Word& b) const {
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return canonical(ab);
}

Word CoxeterContext::inverse(const Word& a) const {
  Word r(a.rbegin(), a.rend());
  return canonical(r);
}

bool CoxeterContext::is_left_descent(const Word& w, int i) const {
  // l(s_i w) < l(w)  iff  w^{-1}(gamma_i) < 0
  Word winv(w.rbegin(), w.rend());
  return !sub_positive(apply_root(winv, gens_[i]));
}

bool CoxeterContext::is_right_descent(const Word& w, int i) const {
  return !sub_positive(apply_root(w, gens_[i]));
}

bool bruhat_leq(const CoxeterContext& ctx, const Word& x0, const Word& y0) {
  Word x = ctx.canonical(x0), y = ctx.canonical(y0);
  // standard recursion: strip a left descent s of y; replace x by sx when s
  // is also a left descent of x, and recurse into sy either way
  while (true) {
    if (x.empty()) return true;
    if (x.size() > y.size()) return false;
    int s = y[0];
    Word sy(y.begin() + 1, y.end());
    if (ctx.is_left_descent(x, s)) {
      Word sx = x;
      sx.insert(sx.begin(), s);
      x = ctx.canonical(sx);
    }
    y = std::move(sy);
  }
}

std::vector<Word> bruhat_lower_interval(const CoxeterContext& ctx, const Word& w) {
  std::set<Word> seen;
  std::vector<Word> queue{ctx.canonical(w)};
  seen.insert(queue[0]);
  for (size_t q = 0; q < queue.size(); ++q) {
    Word cur = queue[q];
    for (size_t i = 0; i < cur.size(); ++i) {
      Word sub = cur;
      sub.erase(sub.begin() + i);
      Word c = ctx.canonical(sub);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {queue.begin(), queue.end()};
}

CoxeterContext ambient_context(const RootSystem& rs) {
  // base: level 1, finite coords 1/(2 p_i) with distinct primes p_i — every
  // root pairing has nonzero fractional part, so the weight is regular and
  // the action on its orbit is free
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  const int l = rs.rank();
  if (l > 20) throw std::invalid_argument("ambient context supports rank <= 20");
  RatVec lam(l);
  Rat total(0);
  for (int i = 0; i < l; ++i) {
    lam[i] = frac(1, 2 * primes[i]);
    total += lam[i];
  }
  if (!(total < 1)) throw std::logic_error("generic base weight not dominant for s_0");
  std::vector<AffineRoot> gens;
  for (int i = 0; i <= l; ++i) gens.push_back(rs.alpha_aff(i));
  return CoxeterContext(&rs, std::move(gens), AffineWeight{lam, Rat(1), Rat(0)});
}

AffineWeight dot(const CoxeterContext& ctx, const Word& w, const AffineWeight& v) {
  const RootSystem& rs = ctx.rs();
  AffineWeight rho = rs.rho_aff();
  AffineWeight shifted = v;
  for (int i = 0; i < rs.rank(); ++i) shifted.lam[i] += rho.lam[i];
  shifted.level += rho.level;
  AffineWeight img = ctx.apply(w, shifted);
  for (int i = 0; i < rs.rank(); ++i) img.lam[i] -= rho.lam[i];
  img.level -= rho.level;
  return img;
}

AffineWeight translate(const RootSystem& rs, const IVec& alpha, const AffineWeight& v) {
  RatVec aw = rs.root_to_weight(alpha);
  Rat va = rs.form_wr(v.lam, alpha);
  Rat norm2 = rs.form_rr(alpha, alpha) / 2;
  AffineWeight out = v;
  for (int i = 0; i < rs.rank(); ++i) out.lam[i] += v.level * aw[i];
  out.d -= va + norm2 * v.level;
  return out;
}

Word translation_word(const CoxeterContext& ambient, const IVec& alpha) {
  return ambient.canonical_from_image(translate(ambient.rs(), alpha, ambient.base()));
}

namespace {

// first n >= lo with <Lambda+rho, (abar + n delta)^vee> integral, or -1
bool integral_at(const RootSystem& rs, const AffineWeight& lam_rho, const IVec& abar, long n) {
  return rat_is_int(rs.pairing_aff(lam_rho, AffineRoot{abar, n}));
}

}  // namespace

IntegralWeylData integral_data(const RootSystem& rs, const AffineWeight& Lambda,
                               long delta_bound) {
  Rat kappa = Lambda.level + rs.h_vee();
  if (kappa == 0) throw std::invalid_argument("critical level");
  if (delta_bound < 0) delta_bound = 2 * int_to_long(Int(Lambda.level.get_den())) + 2;

  IntegralWeylData iw;
  iw.Lambda = Lambda;
  AffineWeight lam_rho = Lambda;
  AffineWeight rho = rs.rho_aff();
  for (int i = 0; i < rs.rank(); ++i) lam_rho.lam[i] += rho.lam[i];
  lam_rho.level += rho.level;

  std::vector<IVec> finite;
  for (const IVec& r : rs.positive_roots()) {
    finite.push_back(r);
    IVec neg = r;
    for (long& c : neg) c = -c;
    finite.push_back(neg);
  }

  std::set<std::pair<IVec, long>> pos_set;
  for (const IVec& abar : finite) {
    for (long n = 0; n <= delta_bound; ++n) {
      AffineRoot cand{abar, n};
      if (!root_is_positive(cand)) continue;
      if (integral_at(rs, lam_rho, abar, n)) {
        iw.positive_roots.push_back(cand);
        pos_set.insert({abar, n});
      }
    }
  }
  std::sort(iw.positive_roots.begin(), iw.positive_roots.end(),
            [](const AffineRoot& x, const AffineRoot& y) {
              if (x.n != y.n) return x.n < y.n;
              return x.a < y.a;
            });

  // simples: gamma is simple iff s_gamma permutes the other positive roots of
  // the subsystem.  A witness to non-simplicity (some beta with s_gamma(beta)
  // negative) has delta-coordinate < 2 n(gamma), so testing candidates with
  // n(gamma) <= delta_bound/2 against the collected set is exact; genuine
  // simples always sit in that range when the default bound is used.
  for (const AffineRoot& g : iw.positive_roots) {
    if (2 * g.n > delta_bound) continue;
    bool simple = true;
    for (const AffineRoot& b : iw.positive_roots) {
      if (b.a == g.a && b.n == g.n) continue;
      // <beta, gamma^vee> sees only the finite parts: delta is isotropic
      Rat c = rs.pairing_aff(AffineWeight{rs.root_to_weight(b.a), Rat(0), Rat(b.n)}, g);
      if (!rat_is_int(c)) throw std::logic_error("non-integral pairing inside integral system");
      long ci = int_to_long(rat_floor(c));
      IVec ra(rs.rank());
      for (int t = 0; t < rs.rank(); ++t) ra[t] = b.a[t] - ci * g.a[t];
      AffineRoot refl{ra, b.n - ci * g.n};
      if (!root_is_positive(refl)) {
        simple = false;
        break;
      }
    }
    if (simple) iw.simple_roots.push_back(g);
  }

  // completeness: every collected positive integral root must be a nonnegative
  // integer combination of the simples, else the delta bound truncated the
  // simple system and the Coxeter data below would be silently wrong
  {
    RatMat M;  // columns = simple roots, rows = (alpha coords..., n)
    for (int t = 0; t < rs.rank() + 1; ++t) {
      RatVec row;
      for (const AffineRoot& s : iw.simple_roots)
        row.push_back(Rat(t < rs.rank() ? s.a[t] : s.n));
      M.push_back(row);
    }
    for (const AffineRoot& g : iw.positive_roots) {
      RatVec rhs;
      for (int t = 0; t < rs.rank(); ++t) rhs.push_back(Rat(g.a[t]));
      rhs.push_back(Rat(g.n));
      RatVec coef;
      try {
        coef = solve_linear(M, rhs);
      } catch (const std::runtime_error&) {
        throw std::runtime_error("integral simple system incomplete at this delta bound");
      }
      for (const Rat& c : coef)
        if (!rat_is_int(c) || c < 0)
          throw std::runtime_error("integral simple system incomplete at this delta bound");
    }
  }

  for (const AffineRoot& s : iw.simple_roots)
    iw.simple_pairings.push_back(rs.pairing_aff(lam_rho, s));
  for (size_t i = 0; i < iw.simple_roots.size(); ++i)
    if (iw.simple_pairings[i] == 0) iw.singular.push_back(static_cast<int>(i));

  // span of the integral subsystem inside Q Delta-bar + Q delta
  {
    RatMat M;
    for (const AffineRoot& s : iw.simple_roots) {
      RatVec row;
      for (long c : s.a) row.push_back(Rat(c));
      row.push_back(Rat(s.n));
      M.push_back(row);
    }
    iw.spans_all = !M.empty() && rat_rank(M) == rs.rank() + 1;
  }

  // base weight for the abstract Coxeter structure: pairing 1 with every
  // simple integral root (underdetermined systems take free coords = 0)
  if (!iw.simple_roots.empty()) {
    RatMat M;
    RatVec rhs;
    for (const AffineRoot& s : iw.simple_roots) {
      // <x, gamma^vee> = 1  <=>  (xbar|abar) + n*level = |gamma|^2/2
      RatVec row;
      for (long c : s.a) row.push_back(Rat(c));
      row.push_back(Rat(s.n));
      M.push_back(row);
      rhs.push_back(rs.form_rr(s.a, s.a) / 2);
    }
    RatVec sol = solve_linear(std::move(M), std::move(rhs));
    RatVec lam(sol.begin(), sol.begin() + rs.rank());
    AffineWeight base{lam, sol[rs.rank()], Rat(0)};
    iw.ctx = CoxeterContext(&rs, iw.simple_roots, base);
  } else {
    iw.ctx = CoxeterContext(&rs, {}, AffineWeight{rs.zero_weight(), Rat(1), Rat(0)});
  }
  return iw;
}

OrbitRep dominant_representative(const IntegralWeylData& iw, long length_bound) {
  const RootSystem& rs = iw.ctx.rs();
  Rat kappa = iw.Lambda.level + rs.h_vee();
  int sign = kappa > 0 ? +1 : -1;

  AffineWeight rho = rs.rho_aff();
  AffineWeight mu = iw.Lambda;
  for (int i = 0; i < rs.rank(); ++i) mu.lam[i] += rho.lam[i];
  mu.level += rho.level;

  Word collected;
  for (long step = 0;; ++step) {
    int bad = -1;
    for (int i = 0; i < iw.ctx.num_gens(); ++i) {
      Rat p = rs.pairing_aff(mu, iw.ctx.gen_root(i));
      if ((sign > 0 && p < 0) || (sign < 0 && p > 0)) {
        bad = i;
        break;
      }
    }
    if (bad < 0) break;
    if (step >= length_bound)
      throw NotFoundWithinBound("orbit representative not found within length bound");
    collected.push_back(bad);
    mu = rs.reflect(mu, iw.ctx.gen_root(bad));
  }

  AffineWeight Omega = mu;
  for (int i = 0; i < rs.rank(); ++i) Omega.lam[i] -= rho.lam[i];
  Omega.level -= rho.level;
  return OrbitRep{Omega, iw.ctx.canonical(collected), sign};
}

Word coset_extremal(const CoxeterContext& ctx, const Word& w0, const std::vector<int>& c_gens,
                    bool longest, long cap) {
  Word w = ctx.canonical(w0);
  for (long step = 0; step <= cap; ++step) {
    int move = -1;
    for (int i : c_gens) {
      bool desc = ctx.is_right_descent(w, i);
      if ((longest && !desc) || (!longest && desc)) {
        move = i;
        break;
      }
    }
    if (move < 0) return w;
    w = ctx.product(w, Word{move});
  }
  throw std::runtime_error("coset extremal search exceeded cap");
}

}  // namespace rlx
