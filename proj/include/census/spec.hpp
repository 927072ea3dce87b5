#pragma once
// Group constructor expressions. A GroupSpec is a small value-semantic tree;
// its printed form is the canonical identity used for deduplication, sorting,
// and report output.

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "census/arith.hpp"
#include "census/error.hpp"

namespace census {

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

struct GroupSpec {
  enum class Kind { Cyclic, Abelian, Dihedral, Dicyclic, Semidirect, CayleyFile, Product, Derived };

  Kind kind = Kind::Cyclic;
  i64 n = 1;                  // Cyclic(n) / Dihedral(n) / Dicyclic(n) / Semidirect second index
  i64 m = 0, k = 0;           // Semidirect(m, n, k): C_m ⋊ C_n with b a b⁻¹ = a^k
  std::vector<i64> factors;   // Abelian invariant factor chain d1 | d2 | ... | dk
  std::string text;           // CayleyFile path, or Derived description
  SpecPtr left, right;        // Product
};

inline GroupSpec spec_cyclic(i64 n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Cyclic;
  s.n = n;
  return s;
}

inline GroupSpec spec_abelian(std::vector<i64> factors) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Abelian;
  s.factors = std::move(factors);
  return s;
}

inline GroupSpec spec_dihedral(i64 n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Dihedral;
  s.n = n;
  return s;
}

inline GroupSpec spec_dicyclic(i64 n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Dicyclic;
  s.n = n;
  return s;
}

inline GroupSpec spec_semidirect(i64 m, i64 n, i64 k) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Semidirect;
  s.m = m;
  s.n = n;
  s.k = k;
  return s;
}

inline GroupSpec spec_cayley_file(std::string path) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::CayleyFile;
  s.text = std::move(path);
  return s;
}

inline GroupSpec spec_product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Product;
  s.left = std::make_shared<GroupSpec>(std::move(a));
  s.right = std::make_shared<GroupSpec>(std::move(b));
  return s;
}

inline GroupSpec spec_derived(std::string description) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Derived;
  s.text = std::move(description);
  return s;
}

// Throws InvalidSpec on violated arithmetic constraints.
inline void validate_spec(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic:
      if (s.n < 1) fail(Err::InvalidSpec, "cyclic order must be >= 1");
      return;
    case K::Abelian: {
      if (s.factors.empty()) fail(Err::InvalidSpec, "abelian factor list must be nonempty");
      for (i64 d : s.factors)
        if (d < 2) fail(Err::InvalidSpec, "abelian invariant factors must be >= 2");
      for (size_t i = 0; i + 1 < s.factors.size(); ++i)
        if (s.factors[i + 1] % s.factors[i] != 0)
          fail(Err::InvalidSpec, "abelian invariant factors must form a divisibility chain");
      return;
    }
    case K::Dihedral:
      if (s.n < 1) fail(Err::InvalidSpec, "dihedral index must be >= 1");
      return;
    case K::Dicyclic:
      if (s.n < 2) fail(Err::InvalidSpec, "dicyclic index must be >= 2");
      return;
    case K::Semidirect: {
      if (s.m < 2 || s.n < 1) fail(Err::InvalidSpec, "semidirect indices must satisfy m >= 2, n >= 1");
      if (s.k < 1 || s.k >= s.m) fail(Err::InvalidSpec, "semidirect exponent must satisfy 1 <= k < m");
      if (std::gcd(s.k, s.m) != 1) fail(Err::InvalidSpec, "semidirect exponent must be coprime to m");
      if (mod_pow(s.k, s.n, s.m) != 1 % s.m)
        fail(Err::InvalidSpec, "semidirect exponent must satisfy k^n = 1 (mod m)");
      return;
    }
    case K::CayleyFile:
      if (s.text.empty()) fail(Err::InvalidSpec, "table file path must be nonempty");
      return;
    case K::Product:
      CENSUS_CHECK(s.left && s.right, "product spec missing children");
      validate_spec(*s.left);
      validate_spec(*s.right);
      return;
    case K::Derived:
      return;
  }
}

// Order implied by the spec alone; -1 when it cannot be known without I/O
// (CayleyFile) or lost provenance (Derived).
inline i64 spec_order(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return s.n;
    case K::Abelian: {
      i64 r = 1;
      for (i64 d : s.factors) {
        if (r > (i64)9'000'000'000'000'000'000LL / d) fail(Err::OrderCap, "abelian order overflows");
        r *= d;
      }
      return r;
    }
    case K::Dihedral: return 2 * s.n;
    case K::Dicyclic: return 4 * s.n;
    case K::Semidirect: return s.m * s.n;
    case K::CayleyFile: return -1;
    case K::Derived: return -1;
    case K::Product: {
      i64 a = spec_order(*s.left), b = spec_order(*s.right);
      if (a < 0 || b < 0) return -1;
      if (a > (i64)9'000'000'000'000'000'000LL / b) fail(Err::OrderCap, "product order overflows");
      return a * b;
    }
  }
  return -1;
}

// Canonical text. Products print as flat left-associated chains; the grammar
// reparses them to the same tree.
inline std::string spec_text(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return "C" + std::to_string(s.n);
    case K::Abelian: {
      std::string out = "Ab[";
      for (size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.factors[i]);
      }
      return out + "]";
    }
    case K::Dihedral: return "D" + std::to_string(s.n);
    case K::Dicyclic: return "Q" + std::to_string(4 * s.n);
    case K::Semidirect:
      return "SD(" + std::to_string(s.m) + "," + std::to_string(s.n) + ";" + std::to_string(s.k) + ")";
    case K::CayleyFile: return "file:" + s.text;
    case K::Derived: return "derived:" + s.text;
    case K::Product: return spec_text(*s.left) + " x " + spec_text(*s.right);
  }
  return "?";
}

}  // namespace census
