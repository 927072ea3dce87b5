#pragma once
// Dense Cayley-table groups. Element indices are uint16_t, index 0 is always
// the identity, and every construction path funnels through finalize(), which
// enforces the identity/Latin-square structure and computes inverses and
// element orders. Associativity is audited per BuildOptions (exhaustively for
// small orders and for tables loaded from files, sampled above the threshold).

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "census/arith.hpp"
#include "census/error.hpp"
#include "census/spec.hpp"

namespace census {

using ElementSet = boost::dynamic_bitset<uint64_t>;

inline std::vector<int> set_members(const ElementSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back((int)i);
  return out;
}

inline uint64_t set_hash(const ElementSet& s) {
  std::vector<uint64_t> blocks(s.num_blocks());
  boost::to_block_range(s, blocks.begin());
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ (uint64_t)s.size();
  for (uint64_t b : blocks) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

struct BuildOptions {
  i64 cap = 8192;               // maximum group order we agree to materialize
  i64 exhaustive_audit_max = 512;  // audit all n^3 triples up to this order
  i64 sample_factor = 10;       // above that, sample factor*n^2 random triples
  uint64_t seed = 0;            // RNG seed for sampled audits
  bool force_exhaustive = false;   // table files are always fully audited
};

class Group {
 public:
  int n = 1;
  std::vector<uint16_t> table;    // row-major: table[a*n+b] = a*b
  std::vector<uint16_t> inverse;  // two-sided inverses
  std::vector<i64> elem_order;
  std::string name;
  bool audited_exhaustive = false;
  i64 audit_samples = 0;

  int mul(int a, int b) const { return table[(size_t)a * (size_t)n + (size_t)b]; }
  int inv(int a) const { return inverse[(size_t)a]; }
  i64 order_of(int a) const { return elem_order[(size_t)a]; }

  int pow(int a, i64 e) const {
    i64 o = elem_order[(size_t)a];
    e %= o;
    if (e < 0) e += o;
    int acc = 0, base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  ElementSet full_set() const {
    ElementSet s((size_t)n);
    s.set();
    return s;
  }
};

namespace detail {

// Identity element, Latin-square rows/columns, two-sided inverses. Returns a
// description of the first violation, or nullopt when the table is clean.
inline std::optional<std::string> structural_violation(const Group& g) {
  const int n = g.n;
  for (int b = 0; b < n; ++b)
    if (g.mul(0, b) != b)
      return "identity row broken at column " + std::to_string(b);
  for (int a = 0; a < n; ++a)
    if (g.mul(a, 0) != a)
      return "identity column broken at row " + std::to_string(a);
  std::vector<int> seen_row(n, -1), seen_col(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int rv = g.mul(a, b);
      if (rv < 0 || rv >= n) return "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (seen_row[rv] == a)
        return "row " + std::to_string(a) + " repeats value " + std::to_string(rv);
      seen_row[rv] = a;
      int cv = g.mul(b, a);
      if (seen_col[cv] == a)
        return "column " + std::to_string(a) + " repeats value " + std::to_string(cv);
      seen_col[cv] = a;
    }
  }
  for (int a = 0; a < n; ++a) {
    int r = 0;
    while (g.mul(a, r) != 0) ++r;  // exists: row a is a permutation
    if (g.mul(r, a) != 0)
      return "element " + std::to_string(a) + " has mismatched left and right inverses";
  }
  return std::nullopt;
}

inline void finalize(Group& g) {
  if (auto bad = structural_violation(g)) fail(Err::Internal, "table check failed: " + *bad);
  const int n = g.n;
  g.inverse.assign((size_t)n, 0);
  for (int a = 0; a < n; ++a) {
    int r = 0;
    while (g.mul(a, r) != 0) ++r;
    g.inverse[(size_t)a] = (uint16_t)r;
  }
  g.elem_order.assign((size_t)n, 1);
  for (int a = 1; a < n; ++a) {
    i64 o = 1;
    int x = a;
    while (x != 0) {
      x = g.mul(x, a);
      ++o;
    }
    g.elem_order[(size_t)a] = o;
  }
}

}  // namespace detail

// Associativity audit: nullopt on pass, else a description of the first bad
// triple. Exhaustive when n <= opts.exhaustive_audit_max or forced; otherwise
// checks opts.sample_factor * n^2 uniformly random triples.
inline std::optional<std::string> associativity_violation(const Group& g, const BuildOptions& opts) {
  const int n = g.n;
  auto bad_triple = [&](int a, int b, int c) -> bool {
    return g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c));
  };
  auto describe = [&](int a, int b, int c) {
    return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  if (opts.force_exhaustive || (i64)n <= opts.exhaustive_audit_max) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (bad_triple(a, b, c)) return describe(a, b, c);
    return std::nullopt;
  }
  std::mt19937_64 rng(opts.seed ^ 0xa0761d6478bd642fULL);
  std::uniform_int_distribution<int> pick(0, n - 1);
  i64 samples = opts.sample_factor * (i64)n * (i64)n;
  for (i64 i = 0; i < samples; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (bad_triple(a, b, c)) return describe(a, b, c);
  }
  return std::nullopt;
}

// Full audit used on tables whose entries were modified after construction.
inline std::optional<std::string> audit_group(const Group& g, const BuildOptions& opts) {
  if (auto bad = detail::structural_violation(g)) return bad;
  return associativity_violation(g, opts);
}

namespace detail {

inline void apply_audit_policy(Group& g, const BuildOptions& opts) {
  if (auto bad = associativity_violation(g, opts)) fail(Err::Internal, g.name + ": " + *bad);
  g.audited_exhaustive = opts.force_exhaustive || (i64)g.n <= opts.exhaustive_audit_max;
  g.audit_samples = g.audited_exhaustive ? (i64)g.n * g.n * g.n
                                         : opts.sample_factor * (i64)g.n * (i64)g.n;
}

inline void check_cap(i64 order, const BuildOptions& opts, const std::string& what) {
  if (order > 65535) fail(Err::OrderCap, what + ": order " + std::to_string(order) + " exceeds table index limit 65535");
  if (order > opts.cap)
    fail(Err::OrderCap, what + ": order " + std::to_string(order) + " exceeds cap " + std::to_string(opts.cap));
  if (order < 1) fail(Err::InvalidSpec, what + ": empty group");
}

inline Group build_cyclic(i64 n) {
  Group g;
  g.n = (int)n;
  g.table.resize((size_t)n * (size_t)n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[(size_t)i * n + j] = (uint16_t)((i + j) % n);
  return g;
}

inline Group build_abelian(const std::vector<i64>& ds, i64 order) {
  const int k = (int)ds.size();
  std::vector<std::vector<int>> digit((size_t)order, std::vector<int>(k));
  for (i64 e = 0; e < order; ++e) {
    i64 rest = e;
    for (int f = k - 1; f >= 0; --f) {  // last factor varies fastest
      digit[(size_t)e][(size_t)f] = (int)(rest % ds[(size_t)f]);
      rest /= ds[(size_t)f];
    }
  }
  Group g;
  g.n = (int)order;
  g.table.resize((size_t)order * (size_t)order);
  for (i64 a = 0; a < order; ++a) {
    for (i64 b = 0; b < order; ++b) {
      i64 e = 0;
      for (int f = 0; f < k; ++f)
        e = e * ds[(size_t)f] + (digit[(size_t)a][(size_t)f] + digit[(size_t)b][(size_t)f]) % ds[(size_t)f];
      g.table[(size_t)a * order + b] = (uint16_t)e;
    }
  }
  return g;
}

// Order 2n: indices i < n are r^i, indices n+i are s*r^i.
inline Group build_dihedral(i64 n) {
  Group g;
  g.n = (int)(2 * n);
  g.table.resize((size_t)g.n * (size_t)g.n);
  auto rot = [&](i64 i) { return (uint16_t)(((i % n) + n) % n); };
  auto refl = [&](i64 i) { return (uint16_t)(n + (((i % n) + n) % n)); };
  for (i64 i = 0; i < n; ++i) {
    for (i64 j = 0; j < n; ++j) {
      g.table[(size_t)i * g.n + j] = rot(i + j);               // r^i r^j
      g.table[(size_t)i * g.n + (n + j)] = refl(j - i);        // r^i (s r^j) = s r^{j-i}
      g.table[(size_t)(n + i) * g.n + j] = refl(i + j);        // (s r^i) r^j
      g.table[(size_t)(n + i) * g.n + (n + j)] = rot(j - i);   // (s r^i)(s r^j) = r^{j-i}
    }
  }
  return g;
}

// Order 4n: indices i < 2n are a^i, indices 2n+i are a^i b, with b^2 = a^n and
// b a b^-1 = a^-1.
inline Group build_dicyclic(i64 n) {
  const i64 m = 2 * n;
  Group g;
  g.n = (int)(4 * n);
  g.table.resize((size_t)g.n * (size_t)g.n);
  auto cyc = [&](i64 i) { return (((i % m) + m) % m); };
  for (i64 i = 0; i < m; ++i) {
    for (i64 j = 0; j < m; ++j) {
      g.table[(size_t)i * g.n + j] = (uint16_t)cyc(i + j);                 // a^i a^j
      g.table[(size_t)i * g.n + (m + j)] = (uint16_t)(m + cyc(i + j));     // a^i (a^j b)
      g.table[(size_t)(m + i) * g.n + j] = (uint16_t)(m + cyc(i - j));     // (a^i b) a^j
      g.table[(size_t)(m + i) * g.n + (m + j)] = (uint16_t)cyc(i - j + n); // (a^i b)(a^j b)
    }
  }
  return g;
}

// C_m ⋊ C_n with action b a b^-1 = a^k; element a^i b^j sits at index i*n + j.
inline Group build_semidirect(i64 m, i64 n, i64 k) {
  std::vector<i64> kpow((size_t)n);
  kpow[0] = 1 % m;
  for (i64 j = 1; j < n; ++j) kpow[(size_t)j] = (kpow[(size_t)j - 1] * k) % m;
  Group g;
  g.n = (int)(m * n);
  g.table.resize((size_t)g.n * (size_t)g.n);
  for (i64 i1 = 0; i1 < m; ++i1)
    for (i64 j1 = 0; j1 < n; ++j1) {
      const size_t row = (size_t)(i1 * n + j1) * g.n;
      for (i64 i2 = 0; i2 < m; ++i2)
        for (i64 j2 = 0; j2 < n; ++j2)
          g.table[row + (size_t)(i2 * n + j2)] =
              (uint16_t)(((i1 + i2 * kpow[(size_t)j1]) % m) * n + (j1 + j2) % n);
    }
  return g;
}

inline Group build_product_table(const Group& s, const Group& t) {
  Group g;
  g.n = s.n * t.n;
  g.table.resize((size_t)g.n * (size_t)g.n);
  for (int i1 = 0; i1 < s.n; ++i1)
    for (int j1 = 0; j1 < t.n; ++j1) {
      const size_t row = ((size_t)i1 * t.n + j1) * (size_t)g.n;
      for (int i2 = 0; i2 < s.n; ++i2) {
        const int si = s.mul(i1, i2);
        for (int j2 = 0; j2 < t.n; ++j2)
          g.table[row + (size_t)i2 * t.n + j2] = (uint16_t)(si * t.n + t.mul(j1, j2));
      }
    }
  return g;
}

inline Group load_cayley_file(const std::string& path, const BuildOptions& opts) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, path + ": cannot open file");
  std::string line;
  i64 lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  auto where = [&]() { return path + ":" + std::to_string(lineno); };
  if (!next_line()) fail(Err::ParseError, path + ": empty file");
  {
    std::istringstream hs(line);
    std::string word;
    i64 n = -1;
    if (!(hs >> word >> n) || word != "order" || n < 1)
      fail(Err::ParseError, where() + ": expected header \"order N\"");
    std::string junk;
    if (hs >> junk) fail(Err::ParseError, where() + ": trailing tokens after header");
    check_cap(n, opts, path);
    Group g;
    g.n = (int)n;
    g.table.resize((size_t)n * (size_t)n);
    for (i64 r = 0; r < n; ++r) {
      if (!next_line())
        fail(Err::ParseError, path + ": expected " + std::to_string(n) + " table rows, got " + std::to_string(r));
      std::istringstream rs(line);
      for (i64 c = 0; c < n; ++c) {
        i64 v = -1;
        if (!(rs >> v))
          fail(Err::ParseError, where() + ": row " + std::to_string(r) + " has fewer than " +
                                    std::to_string(n) + " entries (stopped at entry " + std::to_string(c) + ")");
        if (v < 0 || v >= n)
          fail(Err::ParseError, where() + ": entry " + std::to_string(c) + " value " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
        g.table[(size_t)r * n + c] = (uint16_t)v;
      }
      std::string junk2;
      if (rs >> junk2) fail(Err::ParseError, where() + ": row " + std::to_string(r) + " has extra entries");
    }
    if (next_line()) fail(Err::ParseError, where() + ": unexpected content after table");
    if (auto bad = structural_violation(g)) fail(Err::ParseError, path + ": " + *bad);
    return g;
  }
}

}  // namespace detail

// Build the group a spec describes: validates, enforces the order cap,
// finalizes structure, and runs the associativity audit policy.
inline Group build_group(const GroupSpec& spec, const BuildOptions& opts = {}) {
  using K = GroupSpec::Kind;
  validate_spec(spec);
  Group g;
  BuildOptions eff = opts;
  switch (spec.kind) {
    case K::Cyclic:
      detail::check_cap(spec.n, opts, spec_text(spec));
      g = detail::build_cyclic(spec.n);
      break;
    case K::Abelian: {
      i64 order = spec_order(spec);
      detail::check_cap(order, opts, spec_text(spec));
      g = detail::build_abelian(spec.factors, order);
      break;
    }
    case K::Dihedral:
      detail::check_cap(2 * spec.n, opts, spec_text(spec));
      g = detail::build_dihedral(spec.n);
      break;
    case K::Dicyclic:
      detail::check_cap(4 * spec.n, opts, spec_text(spec));
      g = detail::build_dicyclic(spec.n);
      break;
    case K::Semidirect:
      detail::check_cap(spec.m * spec.n, opts, spec_text(spec));
      g = detail::build_semidirect(spec.m, spec.n, spec.k);
      break;
    case K::Product: {
      i64 order = spec_order(spec);
      detail::check_cap(order, opts, spec_text(spec));
      BuildOptions child = opts;  // children skip their own audit; the product is audited whole
      Group a = build_group(*spec.left, child);
      Group b = build_group(*spec.right, child);
      g = detail::build_product_table(a, b);
      break;
    }
    case K::CayleyFile:
      g = detail::load_cayley_file(spec.text, opts);
      eff.force_exhaustive = true;  // external tables are never trusted
      break;
    case K::Derived:
      fail(Err::InvalidSpec, "a derived spec cannot be rebuilt: " + spec_text(spec));
  }
  g.name = spec_text(spec);
  detail::finalize(g);
  detail::apply_audit_policy(g, eff);
  return g;
}

// Re-index a subgroup (given as a sorted member list containing 0) as a
// standalone Group. Structure is inherited, so no associativity audit.
inline Group induced_subgroup(const Group& g, const std::vector<int>& members, std::string name) {
  CENSUS_CHECK(!members.empty() && members[0] == 0, "subgroup member list must start with the identity");
  std::vector<int> pos((size_t)g.n, -1);
  for (size_t i = 0; i < members.size(); ++i) pos[(size_t)members[i]] = (int)i;
  Group h;
  h.n = (int)members.size();
  h.table.resize((size_t)h.n * (size_t)h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      int prod = g.mul(members[(size_t)a], members[(size_t)b]);
      if (pos[(size_t)prod] < 0)
        fail(Err::NotSubgroup, name + ": member list is not closed under multiplication");
      h.table[(size_t)a * h.n + b] = (uint16_t)pos[(size_t)prod];
    }
  h.name = std::move(name);
  h.audited_exhaustive = g.audited_exhaustive;
  h.audit_samples = 0;
  detail::finalize(h);
  return h;
}

// The set {x^e : x in G}; closed under taking powers, so cyclic-subgroup
// counting applies to it directly.
inline ElementSet power_image(const Group& g, i64 e) {
  ElementSet s((size_t)g.n);
  for (int x = 0; x < g.n; ++x) s.set((size_t)g.pow(x, e));
  return s;
}

}  // namespace census
