#pragma once
// Elementary integer arithmetic: trial-division factorization, Euler phi,
// divisor enumeration, checked powers, big-integer aliases.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "census/error.hpp"

namespace census {

using BigInt = boost::multiprecision::cpp_int;
using i64 = long long;
using u64 = unsigned long long;

// p^k factor list, p ascending.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  CENSUS_CHECK(n >= 1, "factorize: n must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline i64 euler_phi(i64 n) {
  CENSUS_CHECK(n >= 1, "euler_phi: n must be >= 1");
  i64 r = n;
  for (auto [p, k] : factorize(n)) r -= r / p;
  return r;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds{1};
  for (auto [p, k] : factorize(n)) {
    size_t base = ds.size();
    i64 pe = 1;
    for (int e = 1; e <= k; ++e) {
      pe *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline i64 num_divisors(i64 n) {
  i64 d = 1;
  for (auto [p, k] : factorize(n)) d *= k + 1;
  return d;
}

// Largest power of p dividing n.
inline i64 p_part(i64 n, i64 p) {
  i64 r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

// a^e with overflow detection; throws OrderCap when the result leaves i64.
inline i64 checked_pow(i64 a, int e) {
  CENSUS_CHECK(a >= 1 && e >= 0, "checked_pow: bad arguments");
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (i64)9'000'000'000'000'000'000LL / a)
      fail(Err::OrderCap, "integer power overflows 64 bits");
    r *= a;
  }
  return r;
}

inline BigInt big_pow(BigInt base, u64 e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline i64 mod_pow(i64 base, i64 e, i64 mod) {
  CENSUS_CHECK(mod >= 1, "mod_pow: modulus must be >= 1");
  i64 r = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    e >>= 1;
  }
  return r;
}

}  // namespace census
