#include "relaxedchar/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relaxedchar/admissible.hpp"
#include "relaxedchar/characters.hpp"
#include "relaxedchar/charring.hpp"
#include "relaxedchar/kl.hpp"
#include "relaxedchar/shapovalov.hpp"

namespace rlx {
namespace {

using json = nlohmann::ordered_json;

// ----------------------------------------------------------------------
// Option bag shared by all subcommands.  Each subcommand registers only
// the flags it understands; dispatch happens on the parsed subcommand.

struct Job {
  int rank = 1;
  std::string level;
  std::string weight;
  std::string delta;
  long order = 6;
  long depth = -1;
  std::string format = "table";
  std::string out;
  std::string sing;
  std::string convention = "inverse-p";
  std::string target;  // --string / --mu: a single finite weight
  std::string coset;
  std::string offset;
  std::string window = "-2:4";
  std::string orders = "10,15,20";
  bool parabolic = false;
  bool with_matrix = false;
  bool parabolic_dims = false;
  long n_range = 8;
  long samples = 50;
  unsigned long seed = 12345;
  std::string dir = "tests/fixtures";
};

// ----------------------------------------------------------------------
// Parsing helpers.  All failures are reported as std::invalid_argument and
// turned into exit code 2 by the driver.

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_brackets(const std::string& s) {
  std::string t = s;
  while (!t.empty() && (t.front() == ' ' || t.front() == '[')) t.erase(t.begin());
  while (!t.empty() && (t.back() == ' ' || t.back() == ']')) t.pop_back();
  return t;
}

RatVec parse_weight(const std::string& s, int rank) {
  std::string body = strip_brackets(s);
  RatVec v;
  if (!body.empty()) {
    for (const std::string& p : split(body, ',')) v.push_back(rat_parse(p));
  }
  if (static_cast<int>(v.size()) != rank) {
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " weight coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

IVec parse_offset(const std::string& s, int rank) {
  std::string body = strip_brackets(s);
  IVec v;
  if (!body.empty()) {
    for (const std::string& p : split(body, ',')) v.push_back(std::stol(p));
  }
  if (static_cast<int>(v.size()) != rank) {
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " offset coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> v;
  for (const std::string& p : split(strip_brackets(s), ',')) {
    if (!p.empty()) v.push_back(std::stol(p));
  }
  if (v.empty()) throw std::invalid_argument("empty integer list");
  return v;
}

std::pair<long, long> parse_window(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 2) throw std::invalid_argument("window must be lo:hi");
  long lo = std::stol(parts[0]);
  long hi = std::stol(parts[1]);
  if (lo > hi) throw std::invalid_argument("window must satisfy lo <= hi");
  return {lo, hi};
}

KLConvention conv_of(const Job& j) {
  if (j.convention == "inverse-p") return KLConvention::InverseP;
  if (j.convention == "direct-p") return KLConvention::DirectP;
  throw std::invalid_argument("unknown convention: " + j.convention);
}

AffineWeight weight_of(const RootSystem& rs, const Job& j) {
  if (j.weight.empty()) throw std::invalid_argument("--weight is required");
  RatVec lam = parse_weight(j.weight, rs.rank());
  Rat k = rat_parse(j.level);
  if (j.delta.empty()) return rs.make_weight(lam, k);
  return rs.make_weight(lam, k, rat_parse(j.delta));
}

// ----------------------------------------------------------------------
// Serialization.  Rationals are always rendered as "p/q" strings; integer
// coefficients become plain JSON numbers when they fit, and strings when
// they do not, so the bytes never depend on platform float formatting.



json ratvec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

json coeff_json(const Rat& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return json(c.get_num().get_si());
  return json(rat_str(c));
}

json qseries_json(const QSeries& s) {
  json o = json::object();
  o["base"] = rat_str(s.base);
  json cs = json::array();
  for (const Rat& c : s.c) cs.push_back(coeff_json(c));
  o["coeffs"] = cs;
  return o;
}

// Plain-text table: two-space gutter, headers underlined, numeric columns
// right-aligned.

struct TextTable {
  std::vector<std::string> head;
  std::string align;  // one char per column: 'l' or 'r'
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const TextTable& t) {
  std::vector<size_t> w(t.head.size());
  for (size_t i = 0; i < t.head.size(); ++i) w[i] = t.head[i].size();
  for (const auto& r : t.rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      size_t pad = w[i] - cell.size();
      if (i) s += "  ";
      if (t.align[i] == 'r') s += std::string(pad, ' ') + cell;
      else s += cell + std::string(pad, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(t.head);
  std::string rule;
  for (size_t i = 0; i < t.head.size(); ++i) {
    if (i) rule += "  ";
    rule += std::string(w[i], '-');
  }
  out += rule + "\n";
  for (const auto& r : t.rows) out += line(r);
  return out;
}

std::string render_csv(const TextTable& t) {
  auto line = [](const std::vector<std::string>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) s += ",";
      s += r[i];
    }
    return s + "\n";
  };
  std::string out = line(t.head);
  for (const auto& r : t.rows) out += line(r);
  return out;
}

std::string coeff_str(const Rat& c) { return rat_str(c); }

// Series rendered as (n, q-exponent, coefficient) rows.
TextTable series_table(const QSeries& s) {
  TextTable t;
  t.head = {"n", "exponent", "coeff"};
  t.align = "rrr";
  for (size_t i = 0; i < s.c.size(); ++i) {
    t.rows.push_back({std::to_string(i), rat_str(s.base + Rat(static_cast<long>(i))),
                      coeff_str(s.c[i])});
  }
  return t;
}

void emit(const Job& j, const std::string& text) {
  if (j.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(j.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + j.out);
  f << text;
}

std::string render(const Job& j, const json& o, const TextTable& t) {
  if (j.format == "json") return o.dump(2) + "\n";
  if (j.format == "csv") return render_csv(t);
  if (j.format == "table") return render_table(t);
  throw std::invalid_argument("unknown format: " + j.format);
}

json job_header(const char* command, const Job&, const RootSystem& rs,
                const AffineWeight& L) {
  json o = json::object();
  o["command"] = command;
  o["rank"] = rs.rank();
  o["level"] = rat_str(L.level);
  o["weight"] = ratvec_json(L.lam);
  o["d"] = rat_str(L.d);
  return o;
}

// ----------------------------------------------------------------------
// char subcommands

int do_char_verma(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  QSeries s;
  json o = job_header("char verma", j, rs, L);
  if (j.target.empty()) {
    // Default: the limiting string, shared by all weights deep in the cone.
    s = limiting_string(rs, {{L, Int(1)}}, j.order);
    o["string"] = "limit";
  } else {
    RatVec mu = parse_weight(j.target, rs.rank());
    StringEngine eng(rs, j.order);
    s = eng.verma_string(L, mu);
    o["string"] = ratvec_json(mu);
  }
  o["order"] = j.order;
  o["base"] = rat_str(s.base);
  json cs = json::array();
  for (const Rat& c : s.c) cs.push_back(coeff_json(c));
  o["coeffs"] = cs;
  emit(j, render(j, o, series_table(s)));
  return 0;
}

int do_char_parabolic(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  json o = job_header("char parabolic-verma", j, rs, L);
  o["order"] = j.order;
  if (!j.target.empty()) {
    RatVec mu = parse_weight(j.target, rs.rank());
    StringEngine eng(rs, j.order);
    QSeries s = eng.parabolic_string(L, finite_simple_character(rs, L.lam), mu);
    o["string"] = ratvec_json(mu);
    o["base"] = rat_str(s.base);
    json cs = json::array();
    for (const Rat& c : s.c) cs.push_back(coeff_json(c));
    o["coeffs"] = cs;
    emit(j, render(j, o, series_table(s)));
    return 0;
  }
  QZCharacter ch = affine_parabolic_verma_char(rs, L, j.order);
  o["base"] = rat_str(ch.base);
  o["coset_uniform"] = ch.coset_uniform;
  json strings = json::array();
  TextTable t;
  t.head = {"weight", "base"};
  for (long n = 0; n <= j.order; ++n) t.head.push_back("q^" + std::to_string(n));
  t.align = std::string(t.head.size(), 'r');
  for (const auto& [mu, s] : ch.strings) {
    json e = json::object();
    e["mu"] = ratvec_json(mu);
    e["base"] = rat_str(s.base);
    json cs = json::array();
    for (const Rat& c : s.c) cs.push_back(coeff_json(c));
    e["coeffs"] = cs;
    strings.push_back(e);
    std::vector<std::string> row;
    std::string ws;
    for (size_t i = 0; i < mu.size(); ++i) ws += (i ? "," : "") + rat_str(mu[i]);
    row.push_back(ws);
    row.push_back(rat_str(s.base));
    for (const Rat& c : s.c) row.push_back(coeff_str(c));
    t.rows.push_back(row);
  }
  o["strings"] = strings;
  emit(j, render(j, o, t));
  return 0;
}

int do_char_relaxed(const Job& j, bool simple) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  RatVec coset;
  const RatVec* cp = nullptr;
  if (!j.coset.empty()) {
    coset = parse_weight(j.coset, rs.rank());
    cp = &coset;
  }
  QZCharacter ch = simple ? relaxed_simple_character(rs, L, j.order, cp, conv_of(j))
                          : relaxed_verma_character(rs, L, j.order, cp);
  json o = job_header(simple ? "char simple-relaxed" : "char relaxed", j, rs, L);
  o["order"] = j.order;
  if (simple) o["convention"] = j.convention;
  const auto& [rep, s] = *ch.strings.begin();
  o["coset"] = ratvec_json(rep);
  o["base"] = rat_str(s.base);
  json cs = json::array();
  for (const Rat& c : s.c) cs.push_back(coeff_json(c));
  o["coeffs"] = cs;
  emit(j, render(j, o, series_table(s)));
  return 0;
}

int do_char_word(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  QSeries s = w_ordinary_character(rs, L, j.order, conv_of(j));
  json o = job_header("char w-ord", j, rs, L);
  o["order"] = j.order;
  o["convention"] = j.convention;
  o["base"] = rat_str(s.base);
  json cs = json::array();
  for (const Rat& c : s.c) cs.push_back(coeff_json(c));
  o["coeffs"] = cs;
  emit(j, render(j, o, series_table(s)));
  return 0;
}

// ----------------------------------------------------------------------
// kl table

int do_kl_table(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  KLConvention conv = conv_of(j);
  json o = job_header("kl table", j, rs, L);
  o["energy_bound"] = j.order;
  o["convention"] = j.convention;
  TextTable t;
  if (j.parabolic) {
    ParabolicExpansion pe = parabolic_coefficients(rs, L, Rat(j.order), conv);
    json rows = json::array();
    t.head = {"weight", "d", "dh", "c"};
    t.align = "rrrr";
    for (const ParabolicTerm& p : pe.terms) {
      json r = json::object();
      r["weight"] = ratvec_json(p.Xi.lam);
      r["d"] = rat_str(p.Xi.d);
      r["dh"] = rat_str(p.dh);
      r["c"] = coeff_json(Rat(p.c));
      rows.push_back(r);
      std::string ws;
      for (size_t i = 0; i < p.Xi.lam.size(); ++i)
        ws += (i ? "," : "") + rat_str(p.Xi.lam[i]);
      t.rows.push_back({ws, rat_str(p.Xi.d), rat_str(p.dh), Rat(p.c).get_str()});
    }
    o["terms"] = rows;
  } else {
    IntegralWeylData iw = integral_data(rs, L);
    VermaExpansion inv = simple_in_verma(iw, Rat(j.order), conv);
    VermaExpansion fwd = invert_to_simples(iw, Rat(j.order), conv);
    json rows = json::array();
    t.head = {"y", "weight", "d", "h", "a", "b"};
    t.align = "lrrrrr";
    for (size_t i = 0; i < inv.cone.elems.size(); ++i) {
      const ConeEntry& e = inv.cone.elems[i];
      json r = json::object();
      r["y"] = word_str(e.y);
      r["weight"] = ratvec_json(e.wt.lam);
      r["d"] = rat_str(e.wt.d);
      r["h"] = rat_str(e.h);
      r["a"] = coeff_json(Rat(inv.a[i]));
      r["b"] = coeff_json(Rat(fwd.a[i]));
      rows.push_back(r);
      std::string ws;
      for (size_t q = 0; q < e.wt.lam.size(); ++q)
        ws += (q ? "," : "") + rat_str(e.wt.lam[q]);
      t.rows.push_back({word_str(e.y), ws, rat_str(e.wt.d), rat_str(e.h),
                        inv.a[i].get_str(), fwd.a[i].get_str()});
    }
    o["rows"] = rows;
  }
  emit(j, render(j, o, t));
  return 0;
}

// ----------------------------------------------------------------------
// check subcommands

int do_check_identity(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  RatVec mu = j.target.empty() ? L.lam : parse_weight(j.target, rs.rank());
  IdentityReport rep = main_identity_check(rs, L, mu, j.order, conv_of(j));
  json o = job_header("check identity", j, rs, L);
  o["mu"] = ratvec_json(mu);
  o["order"] = j.order;
  o["convention"] = j.convention;
  o["equal"] = rep.equal;
  o["orders_compared"] = rep.orders_compared;
  o["max_abs_discrepancy"] = rat_str(rep.max_abs_discrepancy);
  o["first_bad_offset"] = rep.first_bad_offset;
  TextTable t;
  t.head = {"quantity", "value"};
  t.align = "lr";
  t.rows = {{"equal", rep.equal ? "yes" : "no"},
            {"orders_compared", std::to_string(rep.orders_compared)},
            {"max_abs_discrepancy", rat_str(rep.max_abs_discrepancy)},
            {"first_bad_offset", std::to_string(rep.first_bad_offset)}};
  emit(j, render(j, o, t));
  return rep.equal ? 0 : 1;
}

int do_check_bgg(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  bool ok = bgg_identity_check(rs, L, j.order);
  json o = job_header("check bgg", j, rs, L);
  o["order"] = j.order;
  o["equal"] = ok;
  TextTable t;
  t.head = {"quantity", "value"};
  t.align = "lr";
  t.rows = {{"equal", ok ? "yes" : "no"}};
  emit(j, render(j, o, t));
  return ok ? 0 : 1;
}

int do_check_exponents(const Job& j) {
  RootSystem rs(j.rank);
  Rat k = rat_parse(j.level);
  long n_checked = 0;
  Rat max_gap(0);
  if (!j.weight.empty()) {
    AffineWeight L = weight_of(rs, j);
    Rat g = exponent_identity_gap(rs, L);
    max_gap = abs(g);
    n_checked = 1;
  } else {
    std::mt19937_64 rng(j.seed);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<long> dd(-3, 3);
    for (long s = 0; s < j.samples; ++s) {
      RatVec lam(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) lam[i] = frac(num(rng), den(rng));
      AffineWeight L = rs.make_weight(lam, k);
      L = rs.make_weight(lam, k, L.d + Rat(dd(rng)));
      Rat g = abs(exponent_identity_gap(rs, L));
      if (g > max_gap) max_gap = g;
      ++n_checked;
    }
  }
  bool ok = max_gap == 0;
  json o = json::object();
  o["command"] = "check exponents";
  o["rank"] = j.rank;
  o["level"] = rat_str(k);
  o["samples"] = n_checked;
  o["seed"] = j.seed;
  o["max_abs_gap"] = rat_str(max_gap);
  o["all_zero"] = ok;
  TextTable t;
  t.head = {"quantity", "value"};
  t.align = "lr";
  t.rows = {{"samples", std::to_string(n_checked)},
            {"max_abs_gap", rat_str(max_gap)},
            {"all_zero", ok ? "yes" : "no"}};
  emit(j, render(j, o, t));
  return ok ? 0 : 1;
}

int do_check_modular_span(const Job& j) {
  RootSystem rs(j.rank);
  Rat k = rat_parse(j.level);
  std::vector<SpectrumEntry> spec = enumerate_spectrum(rs, k);
  std::vector<AffineWeight> symbols;
  for (const SpectrumEntry& e : spec) symbols.push_back(e.weight);
  std::vector<long> orders = parse_long_list(j.orders);
  SpanReport rep = modular_span(rs, symbols, orders, conv_of(j));
  bool all_equal = true;
  for (const auto& [o_, r] : rep.rank_at_order) all_equal = all_equal && r == rep.rank;
  json o = json::object();
  o["command"] = "check modular-span";
  o["rank"] = j.rank;
  o["level"] = rat_str(k);
  o["symbols"] = static_cast<long>(symbols.size());
  json ro = json::array();
  TextTable t;
  t.head = {"order", "rank"};
  t.align = "rr";
  for (const auto& [ord, r] : rep.rank_at_order) {
    ro.push_back(json::array({ord, r}));
    t.rows.push_back({std::to_string(ord), std::to_string(r)});
  }
  o["rank_at_order"] = ro;
  o["span_rank"] = rep.rank;
  o["stable"] = rep.stable && all_equal;
  emit(j, render(j, o, t));
  return (rep.stable && all_equal) ? 0 : 1;
}

// KL-side string multiplicities of the simple module L(Lambda) at finite
// weight mu, as exact coefficients at depths 0..depth below h(Lambda).
RatVec kl_simple_string(const RootSystem& rs, const AffineWeight& L, const RatVec& mu,
                        long depth, KLConvention conv, bool unsigned_coeffs) {
  IntegralWeylData iw = integral_data(rs, L);
  VermaExpansion ve = simple_in_verma(iw, Rat(depth), conv);
  StringEngine eng(rs, depth);
  QSeries acc = qs_zero(base_exponent(rs, L), depth + 1);
  for (size_t i = 0; i < ve.cone.elems.size(); ++i) {
    Int a = ve.a[i];
    if (a == 0) continue;
    if (unsigned_coeffs) a = abs(a);
    QSeries s = eng.verma_string(ve.cone.elems[i].wt, mu);
    acc = qs_add(acc, qs_scale(Rat(a), s));
  }
  return acc.c;
}

struct OracleVariant {
  const char* name;
  KLConvention conv;
  bool unsigned_coeffs;
};

int do_check_oracle(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  long depth = j.depth < 0 ? 2 : j.depth;
  auto [lo, hi] = parse_window(j.window);

  // All finite-weight offsets in the box window (rank-many coordinates).
  std::vector<IVec> offsets;
  IVec cur(rs.rank(), lo);
  for (;;) {
    offsets.push_back(cur);
    int i = 0;
    while (i < rs.rank() && cur[i] == hi) cur[i++] = lo;
    if (i == rs.rank()) break;
    ++cur[i];
  }

  ShapovalovOracle oracle(rs, L, false, depth);
  std::map<std::pair<IVec, long>, long> gram;
  for (const IVec& c : offsets)
    for (long n = 0; n <= depth; ++n) gram[{c, n}] = oracle.simple_mult(c, n);

  const OracleVariant variants[] = {
      {"inverse-p", KLConvention::InverseP, false},
      {"direct-p", KLConvention::DirectP, false},
      {"inverse-p, unsigned", KLConvention::InverseP, true},
      {"direct-p, unsigned", KLConvention::DirectP, true},
  };

  auto run_variant = [&](const OracleVariant& v, json* mismatches) {
    bool ok = true;
    for (const IVec& c : offsets) {
      RatVec mu = L.lam;
      RatVec drop = rs.root_to_weight(c);
      for (int i = 0; i < rs.rank(); ++i) mu[i] -= drop[i];
      RatVec kl = kl_simple_string(rs, L, mu, depth, v.conv, v.unsigned_coeffs);
      for (long n = 0; n <= depth; ++n) {
        Rat g(gram[{c, n}]);
        if (kl[n] != g) {
          ok = false;
          if (mismatches && mismatches->size() < 10) {
            json m = json::object();
            json co = json::array();
            for (long x : c) co.push_back(x);
            m["offset"] = co;
            m["depth"] = n;
            m["gram_rank"] = coeff_json(g);
            m["kl_coeff"] = coeff_json(kl[n]);
            mismatches->push_back(m);
          }
        }
      }
    }
    return ok;
  };

  json mism = json::array();
  bool ok = run_variant(variants[0], &mism);
  std::string agreeing = ok ? variants[0].name : "";
  if (!ok) {
    for (int vi = 1; vi < 4 && agreeing.empty(); ++vi)
      if (run_variant(variants[vi], nullptr)) agreeing = variants[vi].name;
  }

  json o = job_header("check oracle", j, rs, L);
  o["depth"] = depth;
  o["window"] = j.window;
  o["points"] = static_cast<long>(offsets.size() * (depth + 1));
  o["agree"] = ok;
  o["convention"] = variants[0].name;
  if (!ok) {
    o["mismatches"] = mism;
    o["agreeing_variant"] = agreeing.empty() ? json(nullptr) : json(agreeing);
  }
  TextTable t;
  t.head = {"quantity", "value"};
  t.align = "lr";
  t.rows = {{"points", std::to_string(offsets.size() * (depth + 1))},
            {"agree", ok ? "yes" : "no"}};
  if (!ok)
    t.rows.push_back({"agreeing_variant", agreeing.empty() ? "none" : agreeing});
  emit(j, render(j, o, t));
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------------
// Fixture regression: recompute every fixture payload and byte-compare the
// serialized JSON with the stored expectation.

std::string first_divergence(const json& a, const json& b, std::string path) {
  if (a.type() != b.type()) return path + ": type differs";
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) return path + "/" + it.key() + ": missing in actual";
      std::string d = first_divergence(it.value(), b[it.key()], path + "/" + it.key());
      if (!d.empty()) return d;
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) return path + "/" + it.key() + ": extra in actual";
    return "";
  }
  if (a.is_array()) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      std::string d = first_divergence(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    if (a.size() != b.size())
      return path + ": length " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return "";
  }
  if (a.dump() != b.dump())
    return path + ": expected " + a.dump() + ", got " + b.dump();
  return "";
}

json fixture_payload(const json& f) {
  std::string op = f.at("op").get<std::string>();
  const json& p = f.at("params");
  int rank = p.at("rank").get<int>();
  RootSystem rs(rank);
  Rat k = rat_parse(p.at("level").get<std::string>());

  auto weight_from = [&](const json& arr) {
    RatVec lam;
    for (const auto& e : arr) lam.push_back(rat_parse(e.get<std::string>()));
    if (static_cast<int>(lam.size()) != rank)
      throw std::invalid_argument("fixture weight has wrong length");
    return rs.make_weight(lam, k);
  };

  if (op == "spectrum") {
    std::vector<SpectrumEntry> spec = enumerate_spectrum(rs, k);
    json o = json::object();
    o["count"] = static_cast<long>(spec.size());
    json es = json::array();
    for (const SpectrumEntry& e : spec) {
      json r = json::object();
      r["kind"] = e.kind;
      r["weight"] = ratvec_json(e.weight.lam);
      es.push_back(r);
    }
    o["entries"] = es;
    return o;
  }
  if (op == "gram-ranks") {
    AffineWeight L = weight_from(p.at("weight"));
    bool parab = p.value("parabolic", false);
    long depth = p.at("depth").get<long>();
    long lo = p.at("lo").get<long>();
    long hi = p.at("hi").get<long>();
    if (rank != 1) throw std::invalid_argument("gram-ranks fixtures are rank-1 windows");
    ShapovalovOracle oracle(rs, L, parab, depth);
    json rows = json::array();
    for (long c = lo; c <= hi; ++c) {
      json row = json::array();
      for (long n = 0; n <= depth; ++n) row.push_back(oracle.simple_mult(IVec{c}, n));
      rows.push_back(row);
    }
    json o = json::object();
    o["lo"] = lo;
    o["hi"] = hi;
    o["depth"] = depth;
    o["ranks"] = rows;
    return o;
  }
  if (op == "series") {
    AffineWeight L = weight_from(p.at("weight"));
    long order = p.at("order").get<long>();
    std::string kind = p.at("kind").get<std::string>();
    QSeries s;
    if (kind == "relaxed") {
      s = relaxed_verma_character(rs, L, order).strings.begin()->second;
    } else if (kind == "simple-relaxed") {
      s = relaxed_simple_character(rs, L, order).strings.begin()->second;
    } else if (kind == "w-ord") {
      s = w_ordinary_character(rs, L, order);
    } else if (kind == "verma-limit") {
      s = limiting_string(rs, {{L, Int(1)}}, order);
    } else {
      throw std::invalid_argument("unknown series kind: " + kind);
    }
    return qseries_json(s);
  }
  if (op == "modular-rank") {
    std::vector<SpectrumEntry> spec = enumerate_spectrum(rs, k);
    std::vector<AffineWeight> symbols;
    for (const SpectrumEntry& e : spec) symbols.push_back(e.weight);
    std::vector<long> orders;
    for (const auto& e : p.at("orders")) orders.push_back(e.get<long>());
    SpanReport rep = modular_span(rs, symbols, orders);
    json o = json::object();
    json ro = json::array();
    for (const auto& [ord, r] : rep.rank_at_order) ro.push_back(json::array({ord, r}));
    o["rank_at_order"] = ro;
    o["rank"] = rep.rank;
    o["stable"] = rep.stable;
    return o;
  }
  throw std::invalid_argument("unknown fixture op: " + op);
}

int do_check_fixtures(const Job& j) {
  namespace fs = std::filesystem;
  fs::path dir(j.dir);
  if (!fs::exists(dir) || !fs::is_directory(dir))
    throw std::invalid_argument("fixture directory not found: " + j.dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  json results = json::array();
  TextTable t;
  t.head = {"fixture", "status"};
  t.align = "ll";
  bool all_ok = true;
  for (const fs::path& fp : files) {
    std::ifstream in(fp);
    if (!in) throw std::invalid_argument("cannot read fixture: " + fp.string());
    json f = json::parse(in);
    std::string name = f.value("name", fp.filename().string());
    json expected = f.at("expected");
    json actual = fixture_payload(f);
    bool ok = expected.dump() == actual.dump();
    json r = json::object();
    r["name"] = name;
    r["ok"] = ok;
    if (!ok) {
      std::string d = first_divergence(expected, actual, "");
      r["first_divergence"] = d;
      t.rows.push_back({name, "FAIL " + d});
      all_ok = false;
    } else {
      t.rows.push_back({name, "ok"});
    }
    results.push_back(r);
  }
  json o = json::object();
  o["command"] = "check fixtures";
  o["fixtures"] = static_cast<long>(files.size());
  o["all_ok"] = all_ok;
  o["results"] = results;
  emit(j, render(j, o, t));
  return all_ok ? 0 : 1;
}

// ----------------------------------------------------------------------
// oracle subcommands

int do_oracle_rank(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  if (j.offset.empty()) throw std::invalid_argument("--offset is required");
  IVec off = parse_offset(j.offset, rs.rank());
  long depth = j.depth < 0 ? 0 : j.depth;
  ShapovalovOracle oracle(rs, L, j.parabolic, std::max(depth, 1L));
  GramBlock b = oracle.block(off, depth);
  json o = job_header("oracle rank", j, rs, L);
  json co = json::array();
  for (long x : off) co.push_back(x);
  o["offset"] = co;
  o["depth"] = depth;
  o["parabolic"] = j.parabolic;
  o["dim"] = b.dim;
  o["gram_rank"] = b.rank;
  json bs = json::array();
  for (const std::string& m : b.basis) bs.push_back(m);
  o["basis"] = bs;
  if (j.with_matrix) {
    json rows = json::array();
    for (const RatVec& r : b.matrix) rows.push_back(ratvec_json(r));
    o["matrix"] = rows;
  }
  TextTable t;
  t.head = {"quantity", "value"};
  t.align = "lr";
  t.rows = {{"dim", std::to_string(b.dim)}, {"gram_rank", std::to_string(b.rank)}};
  emit(j, render(j, o, t));
  return 0;
}

int do_oracle_string_limit(const Job& j) {
  RootSystem rs(j.rank);
  AffineWeight L = weight_of(rs, j);
  long q_order = j.order > 3 ? 3 : j.order;
  StringLimitResult r = oracle_string_limit(rs, L, q_order, j.n_range, j.parabolic_dims);
  json o = job_header("oracle string-limit", j, rs, L);
  o["q_order"] = q_order;
  o["n_range"] = j.n_range;
  o["parabolic_dims"] = j.parabolic_dims;
  o["stabilized"] = r.stabilized;
  o["n_reached"] = r.n_reached;
  if (!r.note.empty()) o["note"] = r.note;
  o["base"] = rat_str(r.prefix.base);
  json cs = json::array();
  for (const Rat& c : r.prefix.c) cs.push_back(coeff_json(c));
  o["coeffs"] = cs;
  emit(j, render(j, o, series_table(r.prefix)));
  return 0;
}

// ----------------------------------------------------------------------
// list admissible

int do_list_admissible(const Job& j) {
  RootSystem rs(j.rank);
  Rat k = rat_parse(j.level);
  SingData sing;
  const SingData* sp = nullptr;
  if (!j.sing.empty()) {
    std::ifstream in(j.sing);
    if (!in) throw std::invalid_argument("cannot read sing data: " + j.sing);
    std::stringstream ss;
    ss << in.rdbuf();
    sing = load_sing_data(rs, ss.str());
    sp = &sing;
  }
  std::vector<SpectrumEntry> spec = enumerate_spectrum(rs, k, sp);
  json o = json::object();
  o["command"] = "list admissible";
  o["rank"] = j.rank;
  o["level"] = rat_str(k);
  o["count"] = static_cast<long>(spec.size());
  json es = json::array();
  TextTable t;
  t.head = {"kind", "weight", "d", "relaxed", "span", "resolved"};
  t.align = "lrrlll";
  for (const SpectrumEntry& e : spec) {
    json r = json::object();
    r["kind"] = e.kind;
    r["weight"] = ratvec_json(e.weight.lam);
    r["d"] = rat_str(e.weight.d);
    r["is_admissible"] = e.report.is_admissible;
    r["integral_span_ok"] = e.report.integral_span_ok;
    r["relaxed"] = e.relaxed;
    r["coset_resolved"] = e.coset_resolved;
    json ex = json::array();
    for (const SingCoset& c : e.excluded) {
      json ce = json::object();
      ce["normal"] = ratvec_json(c.normal);
      ce["offset"] = rat_str(c.offset);
      ex.push_back(ce);
    }
    r["excluded"] = ex;
    es.push_back(r);
    std::string ws;
    for (size_t i = 0; i < e.weight.lam.size(); ++i)
      ws += (i ? "," : "") + rat_str(e.weight.lam[i]);
    t.rows.push_back({e.kind, ws, rat_str(e.weight.d), e.relaxed ? "yes" : "no",
                      e.report.integral_span_ok ? "yes" : "no",
                      e.coset_resolved ? "yes" : "no"});
  }
  o["entries"] = es;
  emit(j, render(j, o, t));
  return 0;
}

// ----------------------------------------------------------------------
// App construction

void add_weight_opts(CLI::App* c, Job& j, bool need_weight) {
  c->add_option("--rank", j.rank, "rank of the finite type-A root system")->required();
  c->add_option("--level", j.level, "level k as an exact rational p/q")->required();
  auto* w = c->add_option("--weight", j.weight,
                          "finite highest weight, fundamental-weight coordinates [a,b,...]");
  if (need_weight) w->required();
  c->add_option("--delta", j.delta, "override the delta coefficient d (default: Sugawara)");
  c->add_option("--format", j.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  c->add_option("--out", j.out, "write output to this file instead of stdout");
}

void add_conv_opt(CLI::App* c, Job& j) {
  c->add_option("--convention", j.convention, "linkage coefficient convention")
      ->check(CLI::IsMember({"inverse-p", "direct-p"}));
}

int dispatch(const CLI::App& app, const Job& j);

int run_app(int argc, const char* const* argv) {
  // Parallelism cap.  Computations in this build are sequential, which
  // trivially respects any positive cap; the variable is still validated so
  // that configuration mistakes surface as exit 2.
  if (const char* tc = std::getenv("RELAXEDCHAR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(tc, &end, 10);
    if (end == tc || *end != '\0' || v < 1) {
      std::cerr << "RELAXEDCHAR_THREADS must be a positive integer\n";
      return 2;
    }
  }

  Job j;
  CLI::App app{"exact characters of relaxed modules over affine sl(l+1) and their W-algebras"};
  app.require_subcommand(1);
  app.footer("example: relaxedchar char verma --rank 1 --level -1/2 --weight [0] --order 3 --format json");

  CLI::App* ch = app.add_subcommand("char", "compute a character or string function");
  ch->require_subcommand(1);
  ch->footer("example: relaxedchar char simple-relaxed --rank 1 --level -1/2 --weight [-1/2] --order 6");
  CLI::App* cv = ch->add_subcommand("verma", "Verma-type string (default: the limiting string)");
  add_weight_opts(cv, j, true);
  cv->add_option("--order", j.order, "q-order of the expansion");
  cv->add_option("--string", j.target, "specific finite weight instead of the limit");
  cv->footer("example: relaxedchar char verma --rank 1 --level -1/2 --weight [0] --order 3 --format json");

  CLI::App* cp = ch->add_subcommand("parabolic-verma", "strings of the parabolic Verma module");
  add_weight_opts(cp, j, true);
  cp->add_option("--order", j.order, "q-order of the expansion");
  cp->add_option("--string", j.target, "one finite weight instead of the default window");
  cp->footer("example: relaxedchar char parabolic-verma --rank 2 --level -3/2 --weight [0,0] --order 4");

  CLI::App* cr = ch->add_subcommand("relaxed", "dense Verma-type character (one shared string)");
  add_weight_opts(cr, j, true);
  cr->add_option("--order", j.order, "q-order of the expansion");
  cr->add_option("--coset", j.coset, "coset tag (any weight in mu + Q)");
  cr->footer("example: relaxedchar char relaxed --rank 1 --level -1/2 --weight [-1/2] --order 6");

  CLI::App* cs = ch->add_subcommand("simple-relaxed", "simple quotient of the dense module");
  add_weight_opts(cs, j, true);
  cs->add_option("--order", j.order, "q-order of the expansion");
  cs->add_option("--coset", j.coset, "coset tag (any weight in mu + Q)");
  add_conv_opt(cs, j);
  cs->footer("example: relaxedchar char simple-relaxed --rank 1 --level -1/2 --weight [-1/2] --order 6");

  CLI::App* cw = ch->add_subcommand("w-ord", "ordinary character of the minimal W-algebra module");
  add_weight_opts(cw, j, true);
  cw->add_option("--order", j.order, "q-order of the expansion");
  add_conv_opt(cw, j);
  cw->footer("example: relaxedchar char w-ord --rank 1 --level -1/2 --weight [0] --order 8");

  CLI::App* ck = app.add_subcommand("check", "run a verification and exit 0/1");
  ck->require_subcommand(1);
  ck->footer("example: relaxedchar check exponents --rank 2 --level -3/2");
  CLI::App* ci = ck->add_subcommand("identity", "relaxed string vs eta-shifted W character");
  add_weight_opts(ci, j, true);
  ci->add_option("--order", j.order, "q-order compared");
  ci->add_option("--mu", j.target, "string weight (default: the highest weight itself)");
  add_conv_opt(ci, j);
  ci->footer("example: relaxedchar check identity --rank 1 --level -1/2 --weight [-1/2] --order 8");

  CLI::App* cb = ck->add_subcommand("bgg", "parabolic Verma vs alternating Verma sum");
  add_weight_opts(cb, j, true);
  cb->add_option("--order", j.order, "q-order compared");
  cb->footer("example: relaxedchar check bgg --rank 2 --level -3/2 --weight [0,0] --order 4");

  CLI::App* ce = ck->add_subcommand("exponents", "h - c/24 exponent identity on sampled weights");
  ce->add_option("--rank", j.rank, "rank of the finite type-A root system")->required();
  ce->add_option("--level", j.level, "level k as an exact rational p/q")->required();
  ce->add_option("--weight", j.weight, "check one weight instead of sampling");
  ce->add_option("--samples", j.samples, "number of sampled weights");
  ce->add_option("--seed", j.seed, "PRNG seed");
  ce->add_option("--format", j.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  ce->add_option("--out", j.out, "write output to this file instead of stdout");
  ce->footer("example: relaxedchar check exponents --rank 2 --level -3/2");

  CLI::App* cm = ck->add_subcommand("modular-span", "rank stability of the eta-shifted strings");
  cm->add_option("--rank", j.rank, "rank (the spectrum enumeration supports rank 2)")->required();
  cm->add_option("--level", j.level, "level k as an exact rational p/q")->required();
  cm->add_option("--orders", j.orders, "comma-separated truncation orders");
  add_conv_opt(cm, j);
  cm->add_option("--format", j.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cm->add_option("--out", j.out, "write output to this file instead of stdout");
  cm->footer("example: relaxedchar check modular-span --rank 2 --level -3/2 --orders 6,8");

  CLI::App* co = ck->add_subcommand("oracle", "Gram ranks vs linkage string coefficients");
  add_weight_opts(co, j, true);
  co->add_option("--depth", j.depth, "maximum depth below the top (default 2)");
  co->add_option("--window", j.window, "offset window lo:hi per simple-root coordinate");
  add_conv_opt(co, j);
  co->footer("example: relaxedchar check oracle --rank 1 --level -1/2 --weight [0] --depth 2 --window -2:4");

  CLI::App* cf = ck->add_subcommand("fixtures", "recompute stored fixtures and diff exactly");
  cf->add_option("--dir", j.dir, "fixture directory");
  cf->add_option("--format", j.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cf->add_option("--out", j.out, "write output to this file instead of stdout");
  cf->footer("example: relaxedchar check fixtures --dir tests/fixtures");

  CLI::App* kl = app.add_subcommand("kl", "linkage data");
  kl->require_subcommand(1);
  kl->footer("example: relaxedchar kl table --rank 1 --level -1/2 --weight [0] --order 4");
  CLI::App* kt = kl->add_subcommand("table", "block cone with both expansion coefficient sets");
  add_weight_opts(kt, j, true);
  kt->add_option("--order", j.order, "energy bound for the cone");
  kt->add_flag("--parabolic", j.parabolic, "antisymmetrized parabolic coefficients instead");
  add_conv_opt(kt, j);
  kt->footer("example: relaxedchar kl table --rank 1 --level -1/2 --weight [0] --order 4");

  CLI::App* orc = app.add_subcommand("oracle", "brute-force Shapovalov computations");
  orc->require_subcommand(1);
  orc->footer("example: relaxedchar oracle rank --rank 1 --level -1/2 --weight [0] --offset [0] --depth 1");
  CLI::App* orr = orc->add_subcommand("rank", "Gram matrix of one weight space");
  add_weight_opts(orr, j, true);
  orr->add_option("--offset", j.offset, "simple-root coordinates of the drop [c,...]")->required();
  orr->add_option("--depth", j.depth, "depth below the top (default 0)");
  orr->add_flag("--parabolic", j.parabolic, "parabolic Verma instead of the full Verma");
  orr->add_flag("--matrix", j.with_matrix, "include the Gram matrix entries");
  orr->footer("example: relaxedchar oracle rank --rank 1 --level -1/2 --weight [0] --offset [0] --depth 1");

  CLI::App* ors = orc->add_subcommand("string-limit", "deep-weight stabilization of Gram ranks");
  add_weight_opts(ors, j, true);
  ors->add_option("--order", j.order, "q-order of the probed prefix (at most 3)");
  ors->add_option("--n-range", j.n_range, "how far down the coset line to probe");
  ors->add_flag("--parabolic-dims", j.parabolic_dims,
                "use parabolic weight-space dimensions instead of ranks");
  ors->footer("example: relaxedchar oracle string-limit --rank 1 --level -1/2 --weight [-1/2] --order 2 --n-range 6");

  CLI::App* li = app.add_subcommand("list", "enumerate classified module data");
  li->require_subcommand(1);
  li->footer("example: relaxedchar list admissible --rank 2 --level -3/2");
  CLI::App* la = li->add_subcommand("admissible", "admissible spectrum at the given level");
  la->add_option("--rank", j.rank, "rank (the spectrum enumeration supports rank 2)")->required();
  la->add_option("--level", j.level, "level k as an exact rational p/q")->required();
  la->add_option("--sing", j.sing, "JSON file with excluded-coset data");
  la->add_option("--format", j.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  la->add_option("--out", j.out, "write output to this file instead of stdout");
  la->footer("example: relaxedchar list admissible --rank 2 --level -3/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(app, j);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int dispatch(const CLI::App& app, const Job& j) {
  const CLI::App* sub = app.get_subcommands().front();
  std::string top = sub->get_name();
  const CLI::App* leaf = sub->get_subcommands().front();
  std::string name = leaf->get_name();
  if (top == "char") {
    if (name == "verma") return do_char_verma(j);
    if (name == "parabolic-verma") return do_char_parabolic(j);
    if (name == "relaxed") return do_char_relaxed(j, false);
    if (name == "simple-relaxed") return do_char_relaxed(j, true);
    if (name == "w-ord") return do_char_word(j);
  }
  if (top == "check") {
    if (name == "identity") return do_check_identity(j);
    if (name == "bgg") return do_check_bgg(j);
    if (name == "exponents") return do_check_exponents(j);
    if (name == "modular-span") return do_check_modular_span(j);
    if (name == "oracle") return do_check_oracle(j);
    if (name == "fixtures") return do_check_fixtures(j);
  }
  if (top == "kl" && name == "table") return do_kl_table(j);
  if (top == "oracle") {
    if (name == "rank") return do_oracle_rank(j);
    if (name == "string-limit") return do_oracle_string_limit(j);
  }
  if (top == "list" && name == "admissible") return do_list_admissible(j);
  throw std::invalid_argument("unknown subcommand");
}

}  // namespace

int cli_run(int argc, const char* const* argv) { return run_app(argc, argv); }

int cli_run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.push_back("relaxedchar");
  for (const std::string& a : args) full.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : full) argv.push_back(a.c_str());
  return cli_run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rlx
