#pragma once
// Brute-force oracles for the tests. Everything here recomputes answers by a
// different (deliberately naive) route than the library: set-of-sets instead
// of an indexed lattice, subset enumeration instead of branch-and-bound,
// trial gcd instead of factorization. Slow and obviously correct.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "census/group.hpp"

namespace oracle {

using census::Group;
using census::i64;

inline i64 phi(i64 n) {
  i64 out = 0;
  for (i64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++out;
  return out;
}

inline i64 tau(i64 n) {
  i64 out = 0;
  for (i64 d = 1; d <= n; ++d)
    if (n % d == 0) ++out;
  return out;
}

inline int element_order(const Group& g, int x) {
  int y = x, ord = 1;
  while (y != 0) {
    y = g.mul(y, x);
    ++ord;
  }
  return ord;
}

// The cyclic subgroup <x> as a sorted element list.
inline std::vector<int> cyclic_span(const Group& g, int x) {
  std::vector<int> members;
  int y = 0;
  do {
    members.push_back(y);
    y = g.mul(y, x);
  } while (y != 0);
  std::sort(members.begin(), members.end());
  return members;
}

inline std::set<std::vector<int>> distinct_cyclic_subgroups(const Group& g) {
  std::set<std::vector<int>> subs;
  for (int x = 0; x < g.n; ++x) subs.insert(cyclic_span(g, x));
  return subs;
}

inline i64 cyclic_subgroup_count(const Group& g) {
  return (i64)distinct_cyclic_subgroups(g).size();
}

inline i64 maximal_cyclic_count(const Group& g) {
  std::set<std::vector<int>> uniq = distinct_cyclic_subgroups(g);
  std::vector<std::vector<int>> subs(uniq.begin(), uniq.end());
  i64 out = 0;
  for (size_t i = 0; i < subs.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < subs.size() && maximal; ++j)
      if (i != j && subs[j].size() > subs[i].size() &&
          std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(), subs[i].end()))
        maximal = false;
    if (maximal) ++out;
  }
  return out;
}

// Cyclic-subgroup count of a direct product of cyclic groups, by walking all
// tuples: ord(a) = lcm_i f_i/gcd(f_i, a_i), then total = sum 1/phi(ord).
inline i64 abelian_census_tuples(const std::vector<i64>& factors) {
  i64 order = 1;
  for (i64 f : factors) order *= f;
  std::vector<i64> digits(factors.size(), 0);
  std::vector<std::pair<i64, i64>> by_order;  // (element order, count)
  auto bump = [&](i64 ord) {
    for (auto& [o, c] : by_order)
      if (o == ord) {
        ++c;
        return;
      }
    by_order.emplace_back(ord, 1);
  };
  for (i64 idx = 0; idx < order; ++idx) {
    i64 ord = 1;
    for (size_t i = 0; i < factors.size(); ++i)
      ord = std::lcm(ord, factors[i] / std::gcd(factors[i], digits[i]));
    bump(ord);
    for (size_t i = factors.size(); i-- > 0;) {
      if (++digits[i] < factors[i]) break;
      digits[i] = 0;
    }
  }
  i64 total = 0;
  for (auto [o, c] : by_order) {
    i64 p = phi(o);
    if (c % p != 0) return -1;  // cannot happen in a group; poison the answer
    total += c / p;
  }
  return total;
}

inline std::vector<int> closure_of(const Group& g, std::vector<int> seed) {
  std::vector<char> in((size_t)g.n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[(size_t)x]) {
      in[(size_t)x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      add(g.mul(members[i], members[j]));
      if (members.size() > (size_t)g.n) break;
    }
  std::sort(members.begin(), members.end());
  return members;
}

// All subgroups of a tiny group: closures of every generating set of size
// <= 3 (n <= 16) or <= 2 (n <= 24), plus the whole group. Complete for every
// group whose proper subgroups need at most that many generators — true for
// all groups this suite feeds it (checked against published subgroup counts).
inline std::vector<std::vector<int>> small_subgroups(const Group& g) {
  std::set<std::vector<int>> subs;
  subs.insert(closure_of(g, {}));
  std::vector<int> all((size_t)g.n);
  for (int i = 0; i < g.n; ++i) all[(size_t)i] = i;
  subs.insert(all);
  for (int a = 0; a < g.n; ++a) {
    subs.insert(closure_of(g, {a}));
    for (int b = a + 1; b < g.n; ++b) {
      subs.insert(closure_of(g, {a, b}));
      if (g.n <= 16)
        for (int c = b + 1; c < g.n; ++c) subs.insert(closure_of(g, {a, b, c}));
    }
  }
  return {subs.begin(), subs.end()};
}

// Exhaustive max pairwise non-commuting subset, elements tried in order.
inline i64 max_noncommuting_brute(const Group& g) {
  i64 best = 1;
  std::vector<int> cur;
  auto commute = [&](int a, int b) { return g.mul(a, b) == g.mul(b, a); };
  auto rec = [&](auto&& self, int next) -> void {
    best = std::max(best, (i64)cur.size());
    for (int x = next; x < g.n; ++x) {
      bool ok = true;
      for (int y : cur)
        if (commute(x, y)) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(x);
        self(self, x + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

// Exhaustive max irredundant covering size over all subsets of the proper
// nontrivial subgroups (bitmask enumeration; caller keeps the count small).
inline std::optional<i64> max_irredundant_brute(const Group& g) {
  std::vector<std::vector<int>> proper;
  for (const auto& s : small_subgroups(g))
    if (s.size() > 1 && (int)s.size() < g.n) proper.push_back(s);
  if (proper.size() > 20) return std::nullopt;
  i64 best = -1;
  for (uint32_t mask = 1; mask < (1u << proper.size()); ++mask) {
    std::vector<int> count((size_t)g.n, 0);
    int picked = 0;
    for (size_t i = 0; i < proper.size(); ++i)
      if (mask >> i & 1) {
        ++picked;
        for (int x : proper[i]) ++count[(size_t)x];
      }
    bool covers = true;
    for (int x = 1; x < g.n; ++x)
      if (count[(size_t)x] == 0) covers = false;
    if (!covers) continue;
    bool irredundant = true;
    for (size_t i = 0; i < proper.size() && irredundant; ++i)
      if (mask >> i & 1) {
        bool has_private = false;
        for (int x : proper[i])
          if (x != 0 && count[(size_t)x] == 1) has_private = true;
        if (!has_private) irredundant = false;
      }
    if (irredundant) best = std::max(best, (i64)picked);
  }
  if (best < 0) return std::nullopt;
  return best;
}

// Cayley table of the alternating group A5 (order 60): even permutations of
// five symbols in lexicographic order (identity first), (p*q)[i] = p[q[i]].
inline std::string a5_table_text() {
  std::vector<std::array<int, 5>> perms;
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 5>& q) {
    return (int)(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::string out = "order 60\n";
  for (const auto& a : perms) {
    for (size_t j = 0; j < perms.size(); ++j) {
      std::array<int, 5> r;
      for (int i = 0; i < 5; ++i) r[i] = a[perms[j][i]];
      if (j) out += ' ';
      out += std::to_string(index_of(r));
    }
    out += '\n';
  }
  return out;
}

inline std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace oracle
