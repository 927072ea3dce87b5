#pragma once
// Subgroup machinery: closures, center, second center, derived series,
// normalizers, the full subgroup lattice (join-closure over cyclic
// subgroups), normal subgroups, and quotient groups.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "census/error.hpp"
#include "census/group.hpp"

namespace census {

// Subgroup generated by `gens`: worklist closure under right multiplication
// by the generator list. Returns sorted members (always contains 0).
inline std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens) {
  ElementSet in((size_t)g.n);
  in.set(0);
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int w = queue[head];
    for (int x : gens) {
      int y = g.mul(w, x);
      if (!in.test((size_t)y)) {
        in.set((size_t)y);
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline ElementSet closure_set(const Group& g, const std::vector<int>& gens) {
  ElementSet in((size_t)g.n);
  in.set(0);
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head)
    for (int x : gens) {
      int y = g.mul(queue[head], x);
      if (!in.test((size_t)y)) {
        in.set((size_t)y);
        queue.push_back(y);
      }
    }
  return in;
}

inline bool is_subgroup_set(const Group& g, const ElementSet& s) {
  if (!s.test(0)) return false;
  auto mem = set_members(s);
  for (int a : mem)
    for (int b : mem)
      if (!s.test((size_t)g.mul(a, b))) return false;
  return true;
}

inline ElementSet center(const Group& g) {
  ElementSet z((size_t)g.n);
  for (int x = 0; x < g.n; ++x) {
    bool central = true;
    for (int y = 0; y < g.n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.set((size_t)x);
  }
  return z;
}

inline int commutator(const Group& g, int x, int y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

// Second center: elements whose commutator with everything lands in Z(G).
inline ElementSet second_center(const Group& g) {
  ElementSet z = center(g);
  ElementSet z2((size_t)g.n);
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int y = 0; y < g.n && ok; ++y) ok = z.test((size_t)commutator(g, x, y));
    if (ok) z2.set((size_t)x);
  }
  return z2;
}

// Commutator subgroup of the subgroup spanned by `members`.
inline std::vector<int> derived_subgroup_of(const Group& g, const std::vector<int>& members) {
  ElementSet comms((size_t)g.n);
  for (int x : members)
    for (int y : members) comms.set((size_t)commutator(g, x, y));
  return subgroup_closure(g, set_members(comms));
}

struct DerivedSeries {
  std::vector<std::vector<int>> terms;  // starts at the whole group
  bool solvable = false;
  int derived_length = -1;              // meaningful only when solvable
};

// Successive commutator subgroups. When the series hits the trivial group the
// terms are the strictly descending chain down to {1} and derived_length
// counts the steps; when it stabilizes above {1} the stable term appears
// twice at the end and the group is flagged unsolvable.
inline DerivedSeries derived_series_of(const Group& g, std::vector<int> start) {
  DerivedSeries out;
  out.terms.push_back(std::move(start));
  while (out.terms.back().size() > 1) {
    std::vector<int> next = derived_subgroup_of(g, out.terms.back());
    if (next.size() == out.terms.back().size()) {   // stabilized above {1}
      out.terms.push_back(std::move(next));
      out.solvable = false;
      out.derived_length = -1;
      return out;
    }
    out.terms.push_back(std::move(next));
  }
  out.solvable = true;
  out.derived_length = (int)out.terms.size() - 1;
  return out;
}

inline DerivedSeries derived_series(const Group& g) {
  std::vector<int> all((size_t)g.n);
  for (int i = 0; i < g.n; ++i) all[(size_t)i] = i;
  return derived_series_of(g, std::move(all));
}

// Elements normalizing the subgroup `h` (conjugation stabilizer).
inline std::vector<int> normalizer(const Group& g, const ElementSet& h) {
  std::vector<int> mem = set_members(h);
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x) {
    int xi = g.inv(x);
    bool ok = true;
    for (int m : mem) {
      if (!h.test((size_t)g.mul(g.mul(x, m), xi))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

inline bool is_normal(const Group& g, const ElementSet& h) {
  std::vector<int> mem = set_members(h);
  for (int x = 0; x < g.n; ++x) {
    int xi = g.inv(x);
    for (int m : mem)
      if (!h.test((size_t)g.mul(g.mul(x, m), xi))) return false;
  }
  return true;
}

struct Subgroup {
  ElementSet set;
  std::vector<int> gens;  // small generating list kept from the join-closure
  size_t size() const { return set.count(); }
};

namespace detail {

// Dedup helper over bitsets.
class SetIndex {
 public:
  // Returns existing index, or stores and returns fresh index.
  int intern(const ElementSet& s, std::vector<Subgroup>& pool, std::vector<int> gens) {
    uint64_t h = set_hash(s);
    auto [it, _] = buckets_.try_emplace(h);
    for (int idx : it->second)
      if (pool[(size_t)idx].set == s) return idx;
    pool.push_back(Subgroup{s, std::move(gens)});
    it->second.push_back((int)pool.size() - 1);
    return (int)pool.size() - 1;
  }

  int find(const ElementSet& s, const std::vector<Subgroup>& pool) const {
    auto it = buckets_.find(set_hash(s));
    if (it == buckets_.end()) return -1;
    for (int idx : it->second)
      if (pool[(size_t)idx].set == s) return idx;
    return -1;
  }

 private:
  std::unordered_map<uint64_t, std::vector<int>> buckets_;
};

}  // namespace detail

// Every subgroup of g, sorted by (order, then numeric value of the member
// bitset). Join-closure: seed with all cyclic subgroups, then repeatedly join
// known subgroups with prime-power cyclic subgroups. Any overgroup of H inside
// a target K is reachable by adjoining an element of minimal order outside H,
// and such an element always has prime-power order, so the closure is
// complete. Refused above order 256: lattice sizes explode beyond it.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  if (g.n > 256) fail(Err::OrderCap, "subgroup lattice is limited to groups of order <= 256");
  std::vector<Subgroup> pool;
  detail::SetIndex index;
  // Trivial subgroup first, then every cyclic subgroup.
  {
    ElementSet triv((size_t)g.n);
    triv.set(0);
    index.intern(triv, pool, {});
  }
  struct Seed {
    ElementSet set;
    int gen;
  };
  std::vector<Seed> ppow_cyclics;  // join partners: prime-power order only
  ElementSet seen((size_t)g.n);
  seen.set(0);
  for (int x = 1; x < g.n; ++x) {
    if (seen.test((size_t)x)) continue;
    ElementSet cyc((size_t)g.n);
    int y = 0;
    do {
      cyc.set((size_t)y);
      y = g.mul(y, x);
    } while (y != 0);
    for (int m : set_members(cyc))
      if (g.order_of(m) == g.order_of(x)) seen.set((size_t)m);  // same subgroup, skip later
    index.intern(cyc, pool, {x});
    i64 o = g.order_of(x);
    if (factorize(o).size() == 1) ppow_cyclics.push_back(Seed{cyc, x});
  }
  // Join worklist. Scratch buffers reused across joins.
  ElementSet scratch((size_t)g.n);
  std::vector<int> queue;
  queue.reserve((size_t)g.n);
  for (size_t h = 0; h < pool.size(); ++h) {
    for (const Seed& c : ppow_cyclics) {
      if (c.set.is_subset_of(pool[h].set)) continue;
      std::vector<int> gens = pool[h].gens;
      gens.push_back(c.gen);
      scratch.reset();
      scratch.set(0);
      queue.clear();
      queue.push_back(0);
      for (size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int x : gens) {
          int y2 = g.mul(w, x);
          if (!scratch.test((size_t)y2)) {
            scratch.set((size_t)y2);
            queue.push_back(y2);
          }
        }
      }
      index.intern(scratch, pool, std::move(gens));
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Subgroup& a, const Subgroup& b) {
    size_t ca = a.set.count(), cb = b.set.count();
    if (ca != cb) return ca < cb;
    return a.set < b.set;
  });
  return pool;
}

inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (is_normal(g, h.set)) out.push_back(h);
  return out;
}

// Quotient by a normal subgroup. Coset ids follow the ascending scan of
// elements, so the coset of a representative is the set's minimal member and
// the identity coset gets id 0.
inline Group quotient(const Group& g, const ElementSet& nset, std::vector<int>* coset_of_out = nullptr) {
  if (!is_subgroup_set(g, nset)) fail(Err::NotSubgroup, "quotient needs a subgroup");
  if (!is_normal(g, nset)) fail(Err::NotNormal, "quotient needs a normal subgroup");
  std::vector<int> nmem = set_members(nset);
  std::vector<int> coset_of((size_t)g.n, -1);
  std::vector<int> rep;
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[(size_t)x] >= 0) continue;
    int id = (int)rep.size();
    rep.push_back(x);
    for (int m : nmem) coset_of[(size_t)g.mul(x, m)] = id;
  }
  Group q;
  q.n = (int)rep.size();
  q.table.resize((size_t)q.n * (size_t)q.n);
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      q.table[(size_t)a * q.n + b] = (uint16_t)coset_of[(size_t)g.mul(rep[(size_t)a], rep[(size_t)b])];
  q.name = g.name + "/(order " + std::to_string(nmem.size()) + ")";
  q.audited_exhaustive = g.audited_exhaustive;
  detail::finalize(q);
  if (coset_of_out) *coset_of_out = std::move(coset_of);
  return q;
}

}  // namespace census
