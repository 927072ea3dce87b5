#pragma once
// Catalog generation (the group families every sweep runs over), the
// membership predicate for the distinguished count set {1,4,6,9} ∪ primes,
// witness families realizing composite counts, and catalog search by count.
// Also: an arithmetic cyclic-subgroup census for abelian groups, usable far
// beyond the dense-table cap.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "census/arith.hpp"
#include "census/cyclic.hpp"
#include "census/error.hpp"
#include "census/grammar.hpp"
#include "census/group.hpp"
#include "census/spec.hpp"

namespace census {

struct CatalogEntry {
  GroupSpec spec;
  std::string family;  // cyclic, abelian, dihedral, dicyclic, semidirect, product
  i64 order = 0;
};

struct Catalog {
  i64 bound = 0;
  std::vector<CatalogEntry> entries;
};

namespace detail {

inline void emit(Catalog& cat, std::unordered_set<std::string>& seen, GroupSpec spec,
                 const char* family) {
  i64 order = spec_order(spec);
  if (order < 1 || order > cat.bound) return;
  std::string text = spec_text(spec);
  if (!seen.insert(text).second) return;
  cat.entries.push_back(CatalogEntry{std::move(spec), family, order});
}

inline void abelian_chains(Catalog& cat, std::unordered_set<std::string>& seen, i64 bound) {
  // Divisibility chains d1 | d2 | ... | dk, k >= 2, product <= bound,
  // emitted in lexicographic DFS order.
  std::vector<i64> chain;
  auto deeper = [&](auto&& self, i64 product) -> void {
    if (chain.size() >= 2) emit(cat, seen, spec_abelian(chain), "abelian");
    i64 last = chain.back();
    for (i64 d = last; d <= bound / product; d += last) {
      chain.push_back(d);
      self(self, product * d);
      chain.pop_back();
    }
  };
  for (i64 d1 = 2; d1 * d1 <= bound; ++d1) {
    chain.assign(1, d1);
    deeper(deeper, d1);
  }
}

}  // namespace detail

// Deterministic family enumeration, deduplicated by spec text, all orders
// within the bound. Products are kept to two restricted shapes so sweeps stay
// tractable: (cyclic prime power) x (noncyclic entry) and small-noncyclic x
// large-noncyclic, coprime orders in both.
inline Catalog generate_catalog(i64 bound) {
  Catalog cat;
  cat.bound = bound;
  std::unordered_set<std::string> seen;
  for (i64 n = 1; n <= bound; ++n) detail::emit(cat, seen, spec_cyclic(n), "cyclic");
  detail::abelian_chains(cat, seen, bound);
  for (i64 n = 1; 2 * n <= bound; ++n) detail::emit(cat, seen, spec_dihedral(n), "dihedral");
  for (i64 n = 2; 4 * n <= bound; ++n) detail::emit(cat, seen, spec_dicyclic(n), "dicyclic");
  for (i64 m = 3; 2 * m <= bound; ++m)
    for (i64 k = 2; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      i64 d = 1, t = k % m;
      while (t != 1) {
        t = (t * k) % m;
        ++d;
      }
      for (i64 n = d; m * n <= bound; n += d)
        if (n >= 2) detail::emit(cat, seen, spec_semidirect(m, n, k), "semidirect");
    }
  // Noncyclic bases collected before adding products (so products never
  // nest). Order >= 4 keeps out the order-2 dihedral, which is cyclic.
  std::vector<size_t> noncyclic;
  for (size_t i = 0; i < cat.entries.size(); ++i)
    if (cat.entries[i].family != std::string("cyclic") && cat.entries[i].order >= 4)
      noncyclic.push_back(i);
  for (size_t ti : noncyclic) {
    GroupSpec t = cat.entries[ti].spec;
    i64 to = cat.entries[ti].order;
    for (i64 s = 2; s <= bound / to; ++s) {
      if (factorize(s).size() != 1) continue;  // prime powers only
      if (std::gcd(s, to) != 1) continue;
      detail::emit(cat, seen, spec_product(spec_cyclic(s), t), "product");
    }
  }
  for (size_t si : noncyclic) {
    if (cat.entries[si].order > 16) continue;
    for (size_t ti : noncyclic) {
      if (cat.entries[ti].order < 16) continue;
      if (std::gcd(cat.entries[si].order, cat.entries[ti].order) != 1) continue;
      if (cat.entries[si].order > bound / cat.entries[ti].order) continue;
      detail::emit(cat, seen, spec_product(cat.entries[si].spec, cat.entries[ti].spec), "product");
    }
  }
  return cat;
}

// Membership in {1, 4, 6, 9} ∪ primes.
inline bool is_in_B(i64 n) {
  CENSUS_CHECK(n >= 1, "membership test needs a positive integer");
  return n == 1 || n == 4 || n == 6 || n == 9 || is_prime(n);
}

// Cyclic-subgroup count of an abelian group given as a list of cyclic factor
// orders (any order, no chain condition needed). Pure arithmetic: counts
// elements of each exact order via the divisor lattice of the exponent, then
// divides each class by its totient. Independent of any group table.
inline i64 abelian_cyclic_count(const std::vector<i64>& factors) {
  i64 expo = 1;
  for (i64 f : factors) {
    CENSUS_CHECK(f >= 1, "factor orders must be positive");
    expo = std::lcm(expo, f);
  }
  std::vector<i64> divs = divisors(expo);  // sorted ascending
  std::vector<i64> below(divs.size());     // elements of order dividing divs[i]
  for (size_t i = 0; i < divs.size(); ++i) {
    i64 cnt = 1;
    for (i64 f : factors) cnt *= std::gcd(f, divs[i]);
    below[i] = cnt;
  }
  std::vector<i64> exact(divs.size());
  i64 c = 0;
  for (size_t i = 0; i < divs.size(); ++i) {
    i64 e = below[i];
    for (size_t j = 0; j < i; ++j)
      if (divs[i] % divs[j] == 0) e -= exact[j];
    exact[i] = e;
    i64 phi = euler_phi(divs[i]);
    CENSUS_CHECK(exact[i] % phi == 0, "order class size must be divisible by the totient");
    c += exact[i] / phi;
  }
  return c;
}

// Cyclic factor orders of a spec built purely from cyclic/abelian pieces;
// nullopt when any non-abelian constructor appears.
inline std::optional<std::vector<i64>> abelian_factors_of(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return std::vector<i64>{s.n};
    case K::Abelian: return s.factors;
    case K::Product: {
      auto l = abelian_factors_of(*s.left);
      auto r = abelian_factors_of(*s.right);
      if (!l || !r) return std::nullopt;
      l->insert(l->end(), r->begin(), r->end());
      return l;
    }
    default: return std::nullopt;
  }
}

// Witness specs for a composite count n >= 10: factor n = a*b with b the
// least divisor >= 4 leaving a >= 2 (the worked family), write b-2 = k*q with
// q the largest prime factor, and emit C_{r^{a-1}} x (C_q x C_{q^k}) for the
// first `count` primes r != q. Each has exactly n cyclic subgroups; callers
// verify that claim by independent enumeration.
inline std::vector<GroupSpec> witness_family(i64 n, i64 count) {
  if (n < 10) fail(Err::TooSmall, "witness construction needs n >= 10");
  if (is_prime(n)) fail(Err::NotComposite, "witness construction needs composite n");
  i64 b = 0;
  for (i64 d = 4; d * 2 <= n; ++d)
    if (n % d == 0) {
      b = d;
      break;
    }
  CENSUS_CHECK(b >= 4, "composite n >= 10 must have a divisor in [4, n/2]");
  i64 a = n / b;
  i64 m = b - 2;
  i64 q = factorize(m).back().first;  // largest prime factor
  i64 k = m / q;
  std::vector<GroupSpec> out;
  for (i64 r = 2; (i64)out.size() < count; ++r) {
    if (!is_prime(r) || r == q) continue;
    out.push_back(spec_product(spec_cyclic(checked_pow(r, a - 1)),
                               spec_abelian({q, checked_pow(q, k)})));
  }
  return out;
}

// Noncyclic catalog entries whose cyclic-subgroup count is exactly n, paired
// with their maximal-cyclic counts. Entries are built with `opts`.
inline std::vector<std::pair<GroupSpec, i64>> search_c_equals(i64 n, const Catalog& cat,
                                                              const BuildOptions& opts = {}) {
  std::vector<std::pair<GroupSpec, i64>> out;
  for (const CatalogEntry& e : cat.entries) {
    Group g = build_group(e.spec, opts);
    CyclicLattice lat = cyclic_lattice(g);
    if (lat.lambda() == 1) continue;  // cyclic groups excluded
    if (lat.c() == n) out.emplace_back(e.spec, lat.lambda());
  }
  return out;
}

}  // namespace census
