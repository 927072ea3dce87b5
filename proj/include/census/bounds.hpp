#pragma once
// Bound checkers: non-commuting clique, p-group order bound, subgroup and
// quotient monotonicity, center index, and the solvable derived-length bound.

#include <algorithm>
#include <string>
#include <vector>

#include "census/arith.hpp"
#include "census/cyclic.hpp"
#include "census/error.hpp"
#include "census/group.hpp"
#include "census/structure.hpp"

namespace census {

struct BoundReport {
  std::string group;   // spec text
  std::string bound;   // SOLBOUND, PGROUP_TT, NONCOMMUTING_LE_LAMBDA, SUBQUO,
                       // KERNEL_Z2, LAMBDA_ABELIAN, COPRIME_MULT, and friends
  std::string lhs;     // decimal string (values can exceed 64 bits)
  std::string rhs;
  bool holds = false;
  std::vector<i64> witness;  // offending element/subgroup indices, empty when holding
  std::string detail;        // free-form context (relation, subject)
};

inline BoundReport make_report(std::string group, std::string bound, const BigInt& lhs,
                               const BigInt& rhs, bool holds, std::string detail = {},
                               std::vector<i64> witness = {}) {
  BoundReport r;
  r.group = std::move(group);
  r.bound = std::move(bound);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.holds = holds;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

// Exact maximum clique of the non-commuting graph (branch and bound with a
// greedy-coloring bound). Abelian groups give 1: a single element is a
// pairwise non-commuting set vacuously.
inline i64 max_noncommuting_set_size(const Group& g) {
  if (g.n > 128) fail(Err::OrderCap, "non-commuting clique search is limited to order <= 128");
  std::vector<int> verts;
  ElementSet z = center(g);
  for (int x = 0; x < g.n; ++x)
    if (!z.test((size_t)x)) verts.push_back(x);
  if (verts.empty()) return 1;
  const int m = (int)verts.size();
  std::vector<ElementSet> adj((size_t)m, ElementSet((size_t)m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.mul(verts[(size_t)i], verts[(size_t)j]) != g.mul(verts[(size_t)j], verts[(size_t)i])) {
        adj[(size_t)i].set((size_t)j);
        adj[(size_t)j].set((size_t)i);
      }
  i64 best = 1;
  // expand(R size, P): candidates P colored greedily; explore highest colors first.
  auto expand = [&](auto&& self, std::vector<int>& p, i64 rsize) -> void {
    if (p.empty()) {
      if (rsize > best) best = rsize;
      return;
    }
    // Greedy coloring of p in order; color[i] = 1-based class index.
    std::vector<std::vector<int>> classes;
    for (int v : p) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = false;
        for (int u : cls)
          if (adj[(size_t)v].test((size_t)u)) {
            clash = true;
            break;
          }
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<std::pair<int, int>> order;  // (color, vertex), ascending color
    for (size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) order.emplace_back((int)c + 1, v);
    ElementSet pset((size_t)m);
    for (int v : p) pset.set((size_t)v);
    for (size_t idx = order.size(); idx-- > 0;) {
      auto [color, v] = order[idx];
      if (rsize + color <= best) return;  // remaining colors cannot beat best
      pset.reset((size_t)v);
      ElementSet nextset = adj[(size_t)v] & pset;
      std::vector<int> next;
      for (auto i = nextset.find_first(); i != ElementSet::npos; i = nextset.find_next(i))
        next.push_back((int)i);
      if (rsize + 1 + (i64)next.size() > best) self(self, next, rsize + 1);
      if (rsize + 1 > best) best = rsize + 1;
    }
  };
  std::vector<int> all((size_t)m);
  for (int i = 0; i < m; ++i) all[(size_t)i] = i;
  expand(expand, all, 0);
  return best;
}

// Noncyclic p-group order bound |G| <= t^t with t the cyclic-subgroup count.
inline BoundReport check_pgroup_bound(const Group& g, const CyclicLattice& lat) {
  auto fs = factorize((i64)g.n);
  if (fs.size() != 1) fail(Err::NotPGroup, g.name + ": order is not a prime power");
  i64 t = lat.c();
  if (lat.lambda() == 1) fail(Err::IsCyclic, g.name + ": bound applies to noncyclic groups only");
  BigInt rhs = big_pow(BigInt(t), (uint64_t)t);
  BigInt lhs = (i64)g.n;
  return make_report(g.name, "PGROUP_TT", lhs, rhs, lhs <= rhs, "order <= c^c");
}

inline BoundReport check_pgroup_bound(const Group& g) {
  return check_pgroup_bound(g, cyclic_lattice(g));
}

// One report per subgroup (lambda monotone down) and per normal subgroup
// (lambda monotone onto quotients).
inline std::vector<BoundReport> check_subquo(const Group& g, const std::vector<Subgroup>& subs) {
  CyclicLattice lat = cyclic_lattice(g);
  i64 lam = lat.lambda();
  std::vector<BoundReport> out;
  out.reserve(subs.size() * 2);
  for (size_t i = 0; i < subs.size(); ++i) {
    Group h = induced_subgroup(g, set_members(subs[i].set), g.name + "#sub" + std::to_string(i));
    i64 lh = lambda_of(h);
    out.push_back(make_report(g.name, "SUBQUO", lh, lam, lh <= lam,
                              "subgroup #" + std::to_string(i) + " (order " +
                                  std::to_string(subs[i].set.count()) + ")",
                              lh <= lam ? std::vector<i64>{} : std::vector<i64>{(i64)i}));
  }
  for (size_t i = 0; i < subs.size(); ++i) {
    if (!is_normal(g, subs[i].set)) continue;
    Group q = quotient(g, subs[i].set);
    i64 lq = lambda_of(q);
    out.push_back(make_report(g.name, "SUBQUO", lq, lam, lq <= lam,
                              "quotient by normal #" + std::to_string(i) + " (order " +
                                  std::to_string(subs[i].set.count()) + ")",
                              lq <= lam ? std::vector<i64>{} : std::vector<i64>{(i64)i}));
  }
  return out;
}

inline i64 center_index(const Group& g) { return (i64)g.n / (i64)center(g).count(); }

// Solvable derived-length bound in integer form: 3^{2(dl-2)} <= lambda^5 for
// dl >= 2 (trivially true below that).
inline BoundReport check_solbound(const Group& g, int derived_length, i64 lambda) {
  CENSUS_CHECK(derived_length >= 1, "solvable bound needs a solvable group");
  BigInt lhs = derived_length >= 2 ? big_pow(BigInt(3), (uint64_t)(2 * (derived_length - 2))) : BigInt(0);
  BigInt rhs = big_pow(BigInt(lambda), 5);
  return make_report(g.name, "SOLBOUND", lhs, rhs, lhs <= rhs,
                     "3^(2(dl-2)) <= lambda^5, dl=" + std::to_string(derived_length));
}

}  // namespace census
