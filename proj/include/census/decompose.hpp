#pragma once
// Coprime cyclic direct-factor extraction: detect a central cyclic Sylow
// subgroup, split it off as a direct factor, and iterate. The residual core
// has no cyclic coprime direct factor left.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "census/arith.hpp"
#include "census/cyclic.hpp"
#include "census/error.hpp"
#include "census/group.hpp"
#include "census/structure.hpp"

namespace census {

// Elements whose order is a power of p (includes the identity).
inline ElementSet p_part_elements(const Group& g, i64 p) {
  ElementSet s((size_t)g.n);
  for (int x = 0; x < g.n; ++x) {
    i64 o = g.order_of(x);
    while (o % p == 0) o /= p;
    if (o == 1) s.set((size_t)x);
  }
  return s;
}

namespace detail {

// The split criterion at p: the p-elements form a full-Sylow-order set that is
// a cyclic subgroup inside the center. Returns a generator on success.
inline std::optional<int> central_cyclic_sylow_gen(const Group& g, i64 p, const ElementSet& zcenter) {
  i64 pk = p_part((i64)g.n, p);
  if (pk == 1) return std::nullopt;
  ElementSet sp = p_part_elements(g, p);
  if ((i64)sp.count() != pk) return std::nullopt;
  if (!sp.is_subset_of(zcenter)) return std::nullopt;
  int gen = -1;
  for (auto i = sp.find_first(); i != ElementSet::npos; i = sp.find_next(i))
    if (g.order_of((int)i) == pk) {
      gen = (int)i;
      break;
    }
  if (gen < 0) return std::nullopt;  // full order but no single generator: noncyclic
  if (!is_subgroup_set(g, sp)) return std::nullopt;
  return gen;
}

}  // namespace detail

// Smallest prime whose Sylow subgroup is central, cyclic, and consists of all
// p-elements; returns (p, generator index) or nullopt.
inline std::optional<std::pair<i64, int>> find_central_cyclic_sylow(const Group& g) {
  ElementSet z = center(g);
  for (auto [p, e] : factorize((i64)g.n)) {
    (void)e;
    if (auto gen = detail::central_cyclic_sylow_gen(g, p, z)) return std::make_pair(p, *gen);
  }
  return std::nullopt;
}

// Split off the central cyclic Sylow at p. Returns (p^k, complement group on
// the elements of order coprime to p). The criterion is re-verified here:
// calling this without find_central_cyclic_sylow agreeing is an error.
inline std::pair<i64, Group> split_off(const Group& g, i64 p) {
  ElementSet z = center(g);
  if (!detail::central_cyclic_sylow_gen(g, p, z))
    fail(Err::SplitFailed, g.name + ": no central cyclic Sylow subgroup at p=" + std::to_string(p));
  i64 pk = p_part((i64)g.n, p);
  std::vector<int> kmem;
  for (int x = 0; x < g.n; ++x)
    if (std::gcd(g.order_of(x), p) == 1) kmem.push_back(x);
  if ((i64)kmem.size() * pk != (i64)g.n)
    fail(Err::SplitFailed, g.name + ": coprime-order elements do not complement the Sylow subgroup");
  Group k = induced_subgroup(g, kmem, g.name + "#coprime-to-" + std::to_string(p));
  return {pk, std::move(k)};
}

struct Decomposition {
  std::string original;                       // spec text of the input
  std::vector<std::pair<i64, i64>> cyclic_part;  // [(p, k)] peeled, p ascending
  std::vector<std::pair<i64, int>> certificates;  // (p, generator index at peel time)
  Group core;
  i64 cyclic_order = 1;  // product of p^k

  i64 core_order() const { return (i64)core.n; }
};

// Peel central cyclic Sylows (smallest prime first) until none remain, then
// cross-check the counting identities on the result.
inline Decomposition decompose(const Group& g) {
  Decomposition d;
  d.original = g.name;
  Group cur = g;
  while (auto hit = find_central_cyclic_sylow(cur)) {
    auto [p, gen] = *hit;
    i64 pk = p_part((i64)cur.n, p);
    i64 k = 0;
    for (i64 t = pk; t > 1; t /= p) ++k;
    auto [order, rest] = split_off(cur, p);
    CENSUS_CHECK(order == pk, "split size disagrees with the p-part");
    d.cyclic_part.emplace_back(p, k);
    d.certificates.emplace_back(p, gen);
    d.cyclic_order *= pk;
    cur = std::move(rest);
  }
  d.core = std::move(cur);
  CENSUS_CHECK(std::gcd(d.cyclic_order, (i64)d.core.n) == 1,
               "peeled cyclic order must be coprime to the core");
  CENSUS_CHECK(d.cyclic_order * (i64)d.core.n == (i64)g.n, "decomposition must preserve order");
  // Counting identities: the cyclic factor contributes one cyclic subgroup
  // per divisor and exactly one maximal cyclic subgroup.
  i64 c_cyclic = 1;
  for (auto [p, k] : d.cyclic_part) {
    (void)p;
    c_cyclic *= (k + 1);
  }
  CyclicLattice lg = cyclic_lattice(g);
  CyclicLattice lb = cyclic_lattice(d.core);
  CENSUS_CHECK(lg.c() == c_cyclic * lb.c(), "cyclic-subgroup count must factor through the split");
  CENSUS_CHECK(lg.lambda() == lb.lambda(), "maximal-cyclic count must be carried by the core");
  return d;
}

}  // namespace census
