#pragma once
// Cyclic-subgroup census: the lattice of cyclic subgroups, the counting
// invariants c (all cyclic subgroups) and lambda (maximal ones), primitive
// elements, and the averaged count over power-closed element sets.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "census/error.hpp"
#include "census/group.hpp"
#include "census/rational.hpp"

namespace census {

struct CyclicLattice {
  // Distinct cyclic subgroups, sorted by (order, numeric value of bitset).
  std::vector<ElementSet> subs;
  std::vector<i64> sub_order;      // |subs[i]|
  std::vector<int> canonical_gen;  // least generator of subs[i]
  std::vector<int> sub_of_elem;    // x -> index of <x>
  std::vector<bool> maximal;       // subs[i] maximal among cyclic subgroups
  ElementSet primitive;            // x whose <x> is maximal

  i64 c() const { return (i64)subs.size(); }
  i64 lambda() const {
    i64 k = 0;
    for (bool m : maximal) k += m ? 1 : 0;
    return k;
  }
};

// Averaged cyclic count of an element set X closed under taking powers:
// sum over x in X of 1/phi(order(x)). For power-closed X this equals the
// number of distinct <x>, x in X, and in particular is an integer.
inline RationalCount cyclic_count_sum(const Group& g, const ElementSet& x) {
  std::map<i64, i64> by_order;
  for (auto i = x.find_first(); i != ElementSet::npos; i = x.find_next(i))
    by_order[g.order_of((int)i)] += 1;
  RationalCount total(0);
  for (auto [o, cnt] : by_order) {
    RationalCount term = phi_reciprocal(o);
    term.num *= cnt;
    term.reduce();
    total += term;
  }
  return total;
}

// Integer form; refuses non-integral sums (i.e. sets that are not
// power-closed).
inline i64 c_of_subset(const Group& g, const ElementSet& x) {
  RationalCount r = cyclic_count_sum(g, x);
  CENSUS_CHECK(r.is_integer(), "cyclic count over a power-closed set must be an integer");
  BigInt v = r.as_integer();
  return (i64)v;
}

inline CyclicLattice cyclic_lattice(const Group& g) {
  CyclicLattice lat;
  lat.sub_of_elem.assign((size_t)g.n, -1);
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  struct Raw {
    ElementSet set;
    i64 order;
    int gen;
  };
  std::vector<Raw> raw;
  for (int x = 0; x < g.n; ++x) {
    if (lat.sub_of_elem[(size_t)x] >= 0) continue;
    ElementSet cyc((size_t)g.n);
    int y = 0;
    do {
      cyc.set((size_t)y);
      y = g.mul(y, x);
    } while (y != 0);
    uint64_t h = set_hash(cyc);
    int found = -1;
    for (int idx : buckets[h])
      if (raw[(size_t)idx].set == cyc) {
        found = idx;
        break;
      }
    if (found < 0) {
      found = (int)raw.size();
      raw.push_back(Raw{cyc, g.order_of(x), x});
      buckets[h].push_back(found);
    }
    // Every generator of this subgroup maps to it; other members may generate
    // proper subgroups and are handled by their own pass.
    i64 o = g.order_of(x);
    for (auto i = cyc.find_first(); i != ElementSet::npos; i = cyc.find_next(i))
      if (g.order_of((int)i) == o && lat.sub_of_elem[i] < 0) lat.sub_of_elem[i] = found;
  }
  // Deterministic order: (order, numeric bitset value).
  std::vector<int> perm((size_t)raw.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (raw[(size_t)a].order != raw[(size_t)b].order) return raw[(size_t)a].order < raw[(size_t)b].order;
    return raw[(size_t)a].set < raw[(size_t)b].set;
  });
  std::vector<int> where((size_t)raw.size());
  for (size_t i = 0; i < perm.size(); ++i) where[(size_t)perm[i]] = (int)i;
  lat.subs.reserve(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    const Raw& r = raw[(size_t)perm[i]];
    lat.subs.push_back(r.set);
    lat.sub_order.push_back(r.order);
    lat.canonical_gen.push_back(r.gen);
  }
  for (int& s : lat.sub_of_elem) s = where[(size_t)s];
  // Canonical generator should be the least one; the discovery scan already
  // visits elements ascending, so the recorded generator is least. Primitive
  // elements: x is primitive when every cyclic subgroup containing x is <x>.
  lat.primitive.resize((size_t)g.n);
  lat.primitive.set();
  for (size_t s = 0; s < lat.subs.size(); ++s) {
    const ElementSet& set = lat.subs[s];
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
      if (lat.sub_of_elem[i] != (int)s) lat.primitive.reset(i);
  }
  lat.maximal.assign(lat.subs.size(), false);
  for (auto i = lat.primitive.find_first(); i != ElementSet::npos; i = lat.primitive.find_next(i))
    lat.maximal[(size_t)lat.sub_of_elem[i]] = true;
  // Cross-check maximality against direct poset inspection (strict supersets
  // must be larger, so only larger orders can dominate). Skipped for huge
  // lattices, where the quadratic sweep would dwarf everything else.
  if (lat.subs.size() <= 4096) {
    for (size_t a = 0; a < lat.subs.size(); ++a) {
      bool dominated = false;
      for (size_t b = a + 1; b < lat.subs.size() && !dominated; ++b)
        if (lat.sub_order[b] > lat.sub_order[a] && lat.subs[a].is_subset_of(lat.subs[b]))
          dominated = true;
      CENSUS_CHECK(lat.maximal[a] == !dominated, "maximality disagrees with poset inspection");
    }
  }
  // Cross-check c against the averaged-count identity over the whole group,
  // and lambda against the same identity restricted to primitive elements.
  RationalCount avg = cyclic_count_sum(g, g.full_set());
  CENSUS_CHECK(avg.is_integer() && avg.as_integer() == BigInt((i64)lat.subs.size()),
               "cyclic subgroup count disagrees with the averaged-count identity");
  RationalCount prim_avg = cyclic_count_sum(g, lat.primitive);
  CENSUS_CHECK(prim_avg.is_integer() && prim_avg.as_integer() == BigInt(lat.lambda()),
               "maximal-cyclic count disagrees with the averaged count over primitive elements");
  bool has_full_order = false;
  for (int x = 0; x < g.n && !has_full_order; ++x) has_full_order = g.order_of(x) == (i64)g.n;
  CENSUS_CHECK((lat.lambda() == 1) == has_full_order,
               "a single maximal cyclic subgroup must mean the group is cyclic");
  return lat;
}

inline i64 c_of(const Group& g) { return cyclic_lattice(g).c(); }
inline i64 lambda_of(const Group& g) { return cyclic_lattice(g).lambda(); }

inline bool is_primitive(const CyclicLattice& lat, int x) { return lat.primitive.test((size_t)x); }

// Indices (into lat.subs) of the maximal cyclic subgroups.
inline std::vector<int> maximal_cyclic_indices(const CyclicLattice& lat) {
  std::vector<int> out;
  for (size_t i = 0; i < lat.subs.size(); ++i)
    if (lat.maximal[i]) out.push_back((int)i);
  return out;
}

}  // namespace census
