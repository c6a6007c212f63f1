#include "relaxedchar/shapovalov.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "relaxedchar/charring.hpp"

namespace rlx {

namespace {

IVec ivadd(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool all_zero(const IVec& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

RatVec rv_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(int rank) : l_(rank) {
  if (rank < 1) throw std::invalid_argument("ChevalleyBasis: rank must be positive");
  const int N = l_ + 1;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      units_.push_back({a, b});
      units_.push_back({b, a});
    }
  for (auto& [a, b] : units_) {
    IVec w(l_, 0);
    if (a < b)
      for (int i = a; i < b; ++i) w[i - 1] = 1;
    else
      for (int i = b; i < a; ++i) w[i - 1] = -1;
    weights_.push_back(w);
  }
  for (int i = 1; i <= l_; ++i) weights_.push_back(IVec(l_, 0));

  for (const IVec& w : weights_) {
    long h = 0;
    for (long x : w) h += x;
    heights_.push_back(h);
  }

  const int nr = static_cast<int>(units_.size());
  sigma_.resize(weights_.size());
  for (int r = 0; r < nr; r += 2) {
    sigma_[r] = r + 1;
    sigma_[r + 1] = r;
  }
  for (int i = 0; i < l_; ++i) sigma_[nr + i] = nr + i;

  const int d = dim();
  std::vector<Mat> mats(d);
  for (int b = 0; b < d; ++b) mats[b] = mat_of(b);

  form_.assign(d * d, 0);
  brackets_.resize(d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      long tr = 0;
      Mat c(N * N, 0);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          long xy = 0, yx = 0;
          for (int k = 0; k < N; ++k) {
            xy += mats[x][i * N + k] * mats[y][k * N + j];
            yx += mats[y][i * N + k] * mats[x][k * N + j];
          }
          c[i * N + j] = xy - yx;
          if (i == j) tr += xy;
        }
      form_[x * d + y] = tr;
      brackets_[x * d + y] = decompose(c);
    }
}

ChevalleyBasis::Mat ChevalleyBasis::mat_of(int b) const {
  const int N = l_ + 1;
  Mat m(N * N, 0);
  if (b < n_roots()) {
    auto [a, c] = units_[b];
    m[(a - 1) * N + (c - 1)] = 1;
  } else {
    int i = b - n_roots() + 1;
    m[(i - 1) * N + (i - 1)] = 1;
    m[i * N + i] = -1;
  }
  return m;
}

std::vector<std::pair<int, long>> ChevalleyBasis::decompose(const Mat& m) const {
  const int N = l_ + 1;
  std::vector<std::pair<int, long>> out;
  for (int r = 0; r < n_roots(); ++r) {
    auto [a, c] = units_[r];
    long v = m[(a - 1) * N + (c - 1)];
    if (v != 0) out.push_back({r, v});
  }
  long trace = 0, prefix = 0;
  for (int i = 0; i < N; ++i) trace += m[i * N + i];
  if (trace != 0) throw std::logic_error("ChevalleyBasis: decomposing a matrix with nonzero trace");
  for (int i = 1; i <= l_; ++i) {
    prefix += m[(i - 1) * N + (i - 1)];
    if (prefix != 0) out.push_back({n_roots() + i - 1, prefix});
  }
  return out;
}

int ChevalleyBasis::root_index(const IVec& gamma) const {
  for (int r = 0; r < n_roots(); ++r)
    if (weights_[r] == gamma) return r;
  throw std::invalid_argument("ChevalleyBasis: not a root");
}

Rat ChevalleyBasis::cartan_eval(const RatVec& lam, int b) const {
  if (!is_cartan(b)) throw std::invalid_argument("cartan_eval: not a Cartan element");
  return lam[b - n_roots()];
}

std::string ChevalleyBasis::name(int b) const {
  std::ostringstream os;
  if (b < n_roots()) {
    auto [a, c] = units_[b];
    os << 'E' << a << c;
  } else {
    os << 'H' << (b - n_roots() + 1);
  }
  return os.str();
}

void ChevalleyBasis::self_check() const {
  const int N = l_ + 1, d = dim();
  std::vector<Mat> mats(d);
  for (int b = 0; b < d; ++b) mats[b] = mat_of(b);
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat r(N * N, 0);
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k)
        if (x[i * N + k] != 0)
          for (int j = 0; j < N; ++j) r[i * N + j] += x[i * N + k] * y[k * N + j];
    return r;
  };
  auto brk = [&](const Mat& x, const Mat& y) {
    Mat a = mul(x, y), b = mul(y, x);
    for (int i = 0; i < N * N; ++i) a[i] -= b[i];
    return a;
  };
  auto tr = [&](const Mat& x) {
    long t = 0;
    for (int i = 0; i < N; ++i) t += x[i * N + i];
    return t;
  };
  auto trm = [&](const Mat& x, const Mat& y) { return tr(mul(x, y)); };

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      // bracket table reproduces the matrix bracket
      Mat lhs = brk(mats[x], mats[y]);
      for (auto& [bi, co] : bracket(x, y))
        for (int i = 0; i < N * N; ++i) lhs[i] -= co * mats[bi][i];
      for (int i = 0; i < N * N; ++i)
        if (lhs[i] != 0) throw std::logic_error("ChevalleyBasis: bracket table mismatch");
      if (form(x, y) != trm(mats[x], mats[y]))
        throw std::logic_error("ChevalleyBasis: form table mismatch");
      for (int z = 0; z < d; ++z) {
        Mat j = brk(brk(mats[x], mats[y]), mats[z]);
        Mat j2 = brk(brk(mats[y], mats[z]), mats[x]);
        Mat j3 = brk(brk(mats[z], mats[x]), mats[y]);
        for (int i = 0; i < N * N; ++i)
          if (j[i] + j2[i] + j3[i] != 0) throw std::logic_error("ChevalleyBasis: Jacobi fails");
        if (trm(brk(mats[x], mats[y]), mats[z]) != trm(mats[x], brk(mats[y], mats[z])))
          throw std::logic_error("ChevalleyBasis: form not invariant");
      }
      // transpose is an anti-involution: sigma([x,y]) = [sigma(y), sigma(x)]
      Mat s = brk(mats[transpose(y)], mats[transpose(x)]);
      Mat t2 = brk(mats[x], mats[y]);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (s[i * N + j] != t2[j * N + i])
            throw std::logic_error("ChevalleyBasis: transpose is not an anti-involution");
    }
  for (int r = 0; r < n_roots(); ++r)
    if (form(r, transpose(r)) != 1) throw std::logic_error("ChevalleyBasis: (e|f) != 1");
}

ShapovalovOracle::ShapovalovOracle(const RootSystem& rs, const AffineWeight& Lambda,
                                   bool parabolic, long depth_cap)
    : rs_(rs), cb_(rs.rank()), Lambda_(Lambda), parabolic_(parabolic) {
  cb_.self_check();
  if (depth_cap >= 0)
    cap_ = depth_cap;
  else
    cap_ = rs.rank() == 1 ? 4 : rs.rank() == 2 ? 3 : 2;
  if (parabolic_) {
    for (int i = 1; i < rs.rank(); ++i)
      if (Lambda_.lam[i - 1] != 0)
        throw std::domain_error(
            "parabolic oracle needs a one-dimensional top (Levi coordinates must vanish)");
  }
}

bool ShapovalovOracle::storable(const Gen& g) const {
  if (g.n < 0) return true;
  if (g.n > 0) return false;
  if (cb_.is_cartan(g.b) || cb_.height(g.b) >= 0) return false;
  if (!parabolic_) return true;
  return cb_.weight(g.b)[rs_.rank() - 1] == -1;  // the minus-one grading piece
}

namespace {
inline std::array<long, 3> gen_key(const ChevalleyBasis& cb, ShapovalovOracle::Gen g) {
  return {std::labs(static_cast<long>(g.n)), cb.height(g.b), static_cast<long>(g.b)};
}
}  // namespace

void ShapovalovOracle::mul(const Gen& g, const Mono& m, const Rat& c, Vec& out) const {
  if (c == 0) return;
  if (m.empty()) {
    if (g.n > 0) return;
    if (g.n == 0) {
      if (cb_.is_cartan(g.b)) {
        out[Mono{}] += c * cb_.cartan_eval(Lambda_.lam, g.b);
        return;
      }
      if (!storable(g)) return;  // raising, or annihilated by the induced line
    }
    out[Mono{g}] += c;
    return;
  }
  const Gen h = m.front();
  if (storable(g) && gen_key(cb_, g) >= gen_key(cb_, h)) {
    Mono mm;
    mm.reserve(m.size() + 1);
    mm.push_back(g);
    mm.insert(mm.end(), m.begin(), m.end());
    out[mm] += c;
    return;
  }
  Mono rest(m.begin() + 1, m.end());
  Vec sub;
  mul(g, rest, Rat(1), sub);
  for (auto& [m2, c2] : sub) mul(h, m2, c * c2, out);
  for (auto& [bi, co] : cb_.bracket(g.b, h.b)) mul(Gen{g.n + h.n, bi}, rest, c * Rat(co), out);
  if (g.n != 0 && g.n + h.n == 0) {
    long f = cb_.form(g.b, h.b);
    if (f != 0) out[rest] += c * Rat(f) * Rat(g.n) * Lambda_.level;
  }
}

ShapovalovOracle::Vec ShapovalovOracle::apply(const Gen& g, const Vec& v) const {
  Vec out;
  for (auto& [m, c] : v) mul(g, m, c, out);
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Rat ShapovalovOracle::gram_entry(const Mono& u, const Mono& w) const {
  Vec v;
  v[w] = Rat(1);
  for (const Gen& g : u) {
    v = apply(Gen{-g.n, cb_.transpose(g.b)}, v);
    if (v.empty()) return Rat(0);
  }
  auto it = v.find(Mono{});
  return it == v.end() ? Rat(0) : it->second;
}

std::vector<ShapovalovOracle::Mono> ShapovalovOracle::weight_basis(const IVec& offset,
                                                                   long depth) const {
  const int l = rs_.rank();
  if (static_cast<int>(offset.size()) != l)
    throw std::invalid_argument("weight_basis: offset has wrong rank");
  if (depth < 0) throw std::invalid_argument("weight_basis: negative depth");

  std::vector<std::pair<int, int>> cls;  // (mode n >= 1, basis index)
  for (int n = 1; n <= depth; ++n)
    for (int b = 0; b < cb_.dim(); ++b) cls.push_back({n, b});

  std::vector<int> pos_roots;
  for (int r = 0; r < cb_.n_roots(); ++r)
    if (cb_.height(r) > 0) pos_roots.push_back(r);

  std::vector<Mono> out;
  std::vector<Gen> cur;

  auto emit = [&](std::vector<Gen> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Gen& a, const Gen& b) {
      return gen_key(cb_, a) > gen_key(cb_, b);
    });
    out.push_back(std::move(gens));
  };

  // zero-mode lowering content C as a sum of positive roots
  std::function<void(size_t, IVec)> zeros = [&](size_t i, IVec C) {
    if (all_zero(C)) {
      emit(cur);
      return;
    }
    if (i == pos_roots.size()) return;
    const IVec& g = cb_.weight(pos_roots[i]);
    int fidx = cb_.transpose(pos_roots[i]);
    size_t mark = cur.size();
    IVec rem = C;
    for (int t = 0;; ++t) {
      if (t > 0) {
        bool ok = true;
        for (int j = 0; j < l; ++j) {
          rem[j] -= g[j];
          if (rem[j] < 0) ok = false;
        }
        if (!ok) break;
        cur.push_back(Gen{0, fidx});
      }
      zeros(i + 1, rem);
    }
    cur.resize(mark);
  };

  std::function<void(size_t, long, IVec)> modes = [&](size_t i, long rem, IVec acc) {
    if (rem == 0 || i == cls.size()) {
      if (rem != 0) return;
      IVec C = ivadd(offset, acc);
      for (long x : C)
        if (x < 0) return;
      if (!parabolic_) {
        zeros(0, C);
      } else {
        // beta-ladder: alpha-coordinates of sum m_i beta_i are prefix sums
        std::vector<long> m(l);
        long prev = 0;
        for (int j = 0; j < l; ++j) {
          m[j] = C[j] - prev;
          if (m[j] < 0) return;
          prev = C[j];
        }
        size_t mark = cur.size();
        for (int j = 0; j < l; ++j) {
          IVec nb(l, 0);
          for (int t = j; t < l; ++t) nb[t] = -1;  // -beta_{j+1}
          int fidx = cb_.root_index(nb);
          for (long t = 0; t < m[j]; ++t) cur.push_back(Gen{0, fidx});
        }
        emit(cur);
        cur.resize(mark);
      }
      return;
    }
    auto [n, b] = cls[i];
    size_t mark = cur.size();
    IVec acc2 = acc;
    for (long t = 0; t * n <= rem; ++t) {
      if (t > 0) {
        cur.push_back(Gen{-n, b});
        for (int j = 0; j < l; ++j) acc2[j] += cb_.weight(b)[j];
      }
      modes(i + 1, rem - t * n, acc2);
    }
    cur.resize(mark);
  };

  modes(0, depth, IVec(l, 0));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ShapovalovOracle::mono_name(const Mono& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << '.';
    os << cb_.name(m[i].b) << '(' << m[i].n << ')';
  }
  return os.str();
}

GramBlock ShapovalovOracle::block(const IVec& offset, long depth) {
  if (depth > cap_)
    throw std::domain_error("ShapovalovOracle: depth " + std::to_string(depth) +
                            " above the cap " + std::to_string(cap_));
  GramBlock B;
  B.offset = offset;
  B.depth = depth;
  B.weight = AffineWeight{rv_sub(Lambda_.lam, rs_.root_to_weight(offset)), Lambda_.level,
                          Lambda_.d - depth};
  auto mons = weight_basis(offset, depth);
  B.dim = static_cast<long>(mons.size());
  for (auto& m : mons) B.basis.push_back(mono_name(m));
  B.matrix.assign(B.dim, RatVec(B.dim, Rat(0)));
  for (long i = 0; i < B.dim; ++i)
    for (long j = i; j < B.dim; ++j) {
      Rat v = gram_entry(mons[i], mons[j]);
      B.matrix[i][j] = v;
      B.matrix[j][i] = v;
    }
  B.rank = B.dim == 0 ? 0 : rat_rank(B.matrix);
  return B;
}

long ShapovalovOracle::simple_mult(const IVec& offset, long depth) {
  auto key = std::make_pair(offset, depth);
  auto it = rank_memo_.find(key);
  if (it != rank_memo_.end()) return it->second;
  long r = block(offset, depth).rank;
  rank_memo_[key] = r;
  return r;
}

long ShapovalovOracle::space_dim(const IVec& offset, long depth) {
  return static_cast<long>(weight_basis(offset, depth).size());
}

StringLimitResult oracle_string_limit(const RootSystem& rs, const AffineWeight& Lambda,
                                      long q_order, long n_range, bool parabolic_dims) {
  if (q_order < 0 || q_order > 3)
    throw std::invalid_argument("oracle_string_limit: q_order must lie in 0..3");
  if (n_range < 2)
    throw std::invalid_argument("oracle_string_limit: need at least two probes");
  ShapovalovOracle o(rs, Lambda, parabolic_dims);
  IVec b0 = rs.beta0();
  StringLimitResult R;
  R.prefix = qs_zero(base_exponent(rs, Lambda), q_order + 1);
  for (long j = 0; j <= q_order; ++j) {
    long prev = -1;
    bool got = false;
    for (long n = 1; n <= n_range; ++n) {
      IVec off(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) off[i] = n * b0[i];
      long v = parabolic_dims ? o.space_dim(off, j) : o.simple_mult(off, j);
      if (n > 1 && v == prev) {
        R.prefix.c[j] = Rat(v);
        R.n_reached = std::max(R.n_reached, n);
        got = true;
        break;
      }
      prev = v;
    }
    if (!got) {
      R.stabilized = false;
      R.note = "no stabilization at q-power " + std::to_string(j) + " within n range " +
               std::to_string(n_range);
      return R;
    }
  }
  R.stabilized = true;
  return R;
}

long levi_gram_mult(const RootSystem& rs, const RatVec& lam, const IVec& levi_offset) {
  if (rs.rank() == 1) {
    if (!levi_offset.empty() && !all_zero(levi_offset))
      throw std::invalid_argument("levi_gram_mult: rank-1 Levi is a torus");
    return 1;
  }
  RootSystem lrs(rs.rank() - 1);
  RatVec llam(lam.begin(), lam.begin() + (rs.rank() - 1));
  AffineWeight L{llam, Rat(0), Rat(0)};
  ShapovalovOracle o(lrs, L, false, 0);
  return o.simple_mult(levi_offset, 0);
}

}  // namespace rlx
