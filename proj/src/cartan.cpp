#include "relaxedchar/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlx {

int affw_cmp(const AffineWeight& x, const AffineWeight& y) {
  int c = ratvec_cmp(x.lam, y.lam);
  if (c != 0) return c;
  c = cmp(x.level, y.level);
  if (c != 0) return c;
  return cmp(x.d, y.d);
}

bool operator==(const AffineWeight& x, const AffineWeight& y) { return affw_cmp(x, y) == 0; }
bool operator<(const AffineWeight& x, const AffineWeight& y) { return affw_cmp(x, y) < 0; }

bool operator==(const AffineRoot& x, const AffineRoot& y) { return x.n == y.n && x.a == y.a; }

bool root_is_real(const AffineRoot& r) {
  return std::any_of(r.a.begin(), r.a.end(), [](long c) { return c != 0; });
}

bool root_is_positive(const AffineRoot& r) {
  if (r.n != 0) return r.n > 0;
  for (long c : r.a)
    if (c != 0) return c > 0;  // finite roots of type A have coords of one sign
  return false;
}

AffineRoot root_negate(const AffineRoot& r) {
  AffineRoot s{IVec(r.a.size()), -r.n};
  for (size_t i = 0; i < r.a.size(); ++i) s.a[i] = -r.a[i];
  return s;
}

RootSystem::RootSystem(int rank) : l_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  cartan_.assign(l_, std::vector<long>(l_, 0));
  for (int i = 0; i < l_; ++i) {
    cartan_[i][i] = 2;
    if (i + 1 < l_) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
  }
  // (Cartan^{-1})_{ij} = min(i,j) * (l+1-max(i,j)) / (l+1), 1-based
  cartan_inv_.assign(l_, RatVec(l_, Rat(0)));
  for (int i = 1; i <= l_; ++i)
    for (int j = 1; j <= l_; ++j)
      cartan_inv_[i - 1][j - 1] = frac(std::min(i, j) * (l_ + 1 - std::max(i, j)), l_ + 1);
}

Rat RootSystem::form_ww(const RatVec& a, const RatVec& b) const {
  if (static_cast<int>(a.size()) != l_ || static_cast<int>(b.size()) != l_)
    throw std::invalid_argument("rank mismatch in bilinear form");
  Rat s(0);
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) s += a[i] * cartan_inv_[i][j] * b[j];
  return s;
}

Rat RootSystem::form_wr(const RatVec& a, const IVec& r) const {
  // (omega_i | alpha_j) = delta_ij at this normalization
  if (static_cast<int>(a.size()) != l_ || static_cast<int>(r.size()) != l_)
    throw std::invalid_argument("rank mismatch in bilinear form");
  Rat s(0);
  for (int i = 0; i < l_; ++i) s += a[i] * r[i];
  return s;
}

long RootSystem::form_rr(const IVec& r, const IVec& s) const {
  long acc = 0;
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) acc += r[i] * cartan_[i][j] * s[j];
  return acc;
}

Rat RootSystem::pairing(const RatVec& lam, const IVec& alpha) const {
  long norm = form_rr(alpha, alpha);
  if (norm == 0) throw std::invalid_argument("pairing against zero root");
  return 2 * form_wr(lam, alpha) / norm;
}

Rat RootSystem::pairing_aff(const AffineWeight& w, const AffineRoot& r) const {
  if (!root_is_real(r)) throw std::invalid_argument("pairing against imaginary root");
  long norm = form_rr(r.a, r.a);
  return (2 * form_wr(w.lam, r.a) + 2 * r.n * w.level) / norm;
}

RatVec RootSystem::root_to_weight(const IVec& r) const {
  RatVec w(l_, Rat(0));
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) w[i] += cartan_[i][j] * r[j];
  return w;
}

RatVec RootSystem::weight_to_alpha_coords(const RatVec& w) const {
  RatVec x(l_, Rat(0));
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) x[i] += cartan_inv_[i][j] * w[j];
  return x;
}

bool RootSystem::is_root(const IVec& r) const {
  if (static_cast<int>(r.size()) != l_) return false;
  // positive roots of A_l are consecutive runs of ones; roots are +-those
  int sign = 0;
  int first = -1, last = -1;
  for (int i = 0; i < l_; ++i) {
    if (r[i] == 0) continue;
    if (r[i] != 1 && r[i] != -1) return false;
    if (sign == 0) sign = static_cast<int>(r[i]);
    if (r[i] != sign) return false;
    if (first < 0) first = i;
    last = i;
  }
  if (sign == 0) return false;
  for (int i = first; i <= last; ++i)
    if (r[i] != sign) return false;
  return true;
}

std::vector<IVec> RootSystem::positive_roots() const {
  std::vector<IVec> out;
  for (int i = 0; i < l_; ++i)
    for (int j = i; j < l_; ++j) {
      IVec r(l_, 0);
      for (int t = i; t <= j; ++t) r[t] = 1;
      out.push_back(r);
    }
  return out;
}

std::vector<IVec> RootSystem::positive_roots_g0() const {
  std::vector<IVec> out;
  for (const IVec& r : positive_roots())
    if (r[l_ - 1] == 0) out.push_back(r);
  return out;
}

int RootSystem::grading_degree(const IVec& r) const {
  if (!is_root(r)) throw std::invalid_argument("grading_degree: not a root");
  return static_cast<int>(r[l_ - 1]);
}

IVec RootSystem::alpha(int i) const {
  IVec r(l_, 0);
  r[i - 1] = 1;
  return r;
}

IVec RootSystem::beta(int i) const {
  IVec r(l_, 0);
  for (int t = i - 1; t < l_; ++t) r[t] = 1;
  return r;
}

IVec RootSystem::beta0() const {
  IVec r(l_, 0);
  for (int i = 0; i < l_; ++i) r[i] = i + 1;  // sum of beta_1..beta_l
  return r;
}

IVec RootSystem::theta() const {
  IVec r(l_, 1);
  return r;
}

AffineRoot RootSystem::alpha_aff(int i) const {
  if (i == 0) {
    AffineRoot r{theta(), 1};
    for (long& c : r.a) c = -c;
    return r;  // delta - theta
  }
  return AffineRoot{alpha(i), 0};
}

RatVec RootSystem::omega(int i) const {
  RatVec w(l_, Rat(0));
  w[i - 1] = 1;
  return w;
}

RatVec RootSystem::rho_bar() const { return RatVec(l_, Rat(1)); }

AffineWeight RootSystem::rho_aff() const { return AffineWeight{rho_bar(), Rat(h_vee()), Rat(0)}; }

bool RootSystem::in_Pbar0plus(const RatVec& lam) const {
  for (int i = 0; i + 1 < l_; ++i)
    if (!rat_is_int(lam[i]) || lam[i] < 0) return false;
  return true;
}

bool RootSystem::in_Pbarplus(const RatVec& lam) const {
  if (!in_Pbar0plus(lam)) return false;
  return rat_is_int(lam[l_ - 1]) && lam[l_ - 1] >= 0;
}

bool RootSystem::in_P0plus(const AffineWeight& w) const { return in_Pbar0plus(w.lam); }

AffineWeight RootSystem::reflect(const AffineWeight& w, const AffineRoot& r) const {
  Rat p = pairing_aff(w, r);
  return add_root(w, r, -p);
}

AffineWeight RootSystem::add_root(const AffineWeight& w, const AffineRoot& r, const Rat& c) const {
  AffineWeight out = w;
  RatVec rw = root_to_weight(r.a);
  for (int i = 0; i < l_; ++i) out.lam[i] += c * rw[i];
  out.d += c * r.n;
  return out;
}

Rat RootSystem::sugawara_d(const RatVec& lam, const Rat& level) const {
  Rat kappa = level + h_vee();
  if (kappa == 0) throw std::invalid_argument("critical level");
  RatVec shifted = lam;
  for (int i = 0; i < l_; ++i) shifted[i] += 2;  // lam + 2 rho_bar
  return -form_ww(lam, shifted) / (2 * kappa);
}

AffineWeight RootSystem::make_weight(const RatVec& lam, const Rat& level) const {
  return AffineWeight{lam, level, sugawara_d(lam, level)};
}

AffineWeight RootSystem::make_weight(const RatVec& lam, const Rat& level, const Rat& d) const {
  return AffineWeight{lam, level, d};
}

}  // namespace rlx
