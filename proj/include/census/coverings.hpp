#pragma once
// Coverings by subgroups: covering/irredundancy predicates, the kernel of the
// conjugation action on maximal cyclic subgroups, and exhaustive search for
// the largest irredundant covering.

#include <optional>
#include <vector>

#include "census/cyclic.hpp"
#include "census/error.hpp"
#include "census/group.hpp"
#include "census/structure.hpp"

namespace census {

// True iff the family of proper subgroups covers every element.
inline bool is_covering(const Group& g, const std::vector<ElementSet>& family) {
  ElementSet un((size_t)g.n);
  for (const ElementSet& h : family) {
    if (!is_subgroup_set(g, h)) fail(Err::NotProperSubgroup, "covering member is not a subgroup");
    if (h.count() == (size_t)g.n) fail(Err::NotProperSubgroup, "covering member is the whole group");
    un |= h;
  }
  return un.count() == (size_t)g.n;
}

// True iff dropping any single member breaks the covering.
inline bool is_irredundant(const Group& g, const std::vector<ElementSet>& family) {
  if (!is_covering(g, family)) fail(Err::NotCovering, "family does not cover the group");
  for (size_t skip = 0; skip < family.size(); ++skip) {
    ElementSet un((size_t)g.n);
    for (size_t i = 0; i < family.size(); ++i)
      if (i != skip) un |= family[i];
    if (un.count() == (size_t)g.n) return false;
  }
  return true;
}

// Kernel of the conjugation action on maximal cyclic subgroups: the elements
// normalizing every maximal cyclic subgroup.
inline ElementSet covering_kernel(const Group& g, const CyclicLattice& lat) {
  ElementSet kernel = g.full_set();
  for (size_t s = 0; s < lat.subs.size(); ++s) {
    if (!lat.maximal[s]) continue;
    ElementSet norm((size_t)g.n);
    for (int x : normalizer(g, lat.subs[s])) norm.set((size_t)x);
    kernel &= norm;
  }
  return kernel;
}

inline ElementSet covering_kernel(const Group& g) { return covering_kernel(g, cyclic_lattice(g)); }

// The elements normalizing every subgroup (needs the full lattice).
inline ElementSet all_normalizing_set(const Group& g, const std::vector<Subgroup>& subgroups) {
  ElementSet out = g.full_set();
  for (const Subgroup& h : subgroups) {
    ElementSet norm((size_t)g.n);
    for (int x : normalizer(g, h.set)) norm.set((size_t)x);
    out &= norm;
  }
  return out;
}

// Largest irredundant covering, exhaustively. Candidates are proper
// nontrivial subgroups; a partial choice is extended only while every chosen
// member keeps a private element (an element no other chosen member covers),
// since private sets only shrink as members are added. For cyclic groups no
// proper covering exists and the convention is 1. Returns nullopt (unknown)
// when the subgroup count exceeds search_cap.
inline std::optional<i64> max_irredundant_covering_size(const Group& g,
                                                        const std::vector<Subgroup>& subgroups,
                                                        i64 search_cap = 24) {
  for (int x = 0; x < g.n; ++x)
    if (g.order_of(x) == (i64)g.n) return 1;  // cyclic: no proper covering
  if ((i64)subgroups.size() > search_cap) return std::nullopt;
  std::vector<ElementSet> cands;
  for (const Subgroup& h : subgroups) {
    size_t c = h.set.count();
    if (c > 1 && c < (size_t)g.n) cands.push_back(h.set);
  }
  i64 best = 0;
  std::vector<ElementSet> privates;  // privates[i]: elements only chosen[i] covers
  ElementSet covered((size_t)g.n);
  covered.set(0);  // identity is in every subgroup; never private
  // DFS over candidate indices in order; chosen set implicit in `privates`.
  auto rec = [&](auto&& self, size_t from, const ElementSet& cov) -> void {
    if (cov.count() == (size_t)g.n && (i64)privates.size() > best) best = (i64)privates.size();
    for (size_t i = from; i < cands.size(); ++i) {
      const ElementSet& s = cands[i];
      // Remaining candidates (including s) must be able to finish the cover.
      // Each chosen member must keep a private element after adding s.
      bool ok = true;
      for (const ElementSet& p : privates)
        if (p.is_subset_of(s)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ElementSet mine = s - cov;
      if (mine.none()) continue;  // s itself would be redundant
      std::vector<ElementSet> saved;
      saved.reserve(privates.size());
      for (ElementSet& p : privates) {
        saved.push_back(p);
        p -= s;
      }
      privates.push_back(mine);
      self(self, i + 1, cov | s);
      privates.pop_back();
      for (size_t j = 0; j < saved.size(); ++j) privates[j] = saved[j];
    }
  };
  rec(rec, 0, covered);
  CENSUS_CHECK(best >= 1, "noncyclic group admits no covering");
  return best;
}

inline std::optional<i64> max_irredundant_covering_size(const Group& g, i64 search_cap = 24) {
  for (int x = 0; x < g.n; ++x)
    if (g.order_of(x) == (i64)g.n) return 1;
  return max_irredundant_covering_size(g, all_subgroups(g), search_cap);
}

}  // namespace census
