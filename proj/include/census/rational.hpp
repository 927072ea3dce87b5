#pragma once
// Exact reduced rationals over arbitrary-precision integers. Used for the
// totient-weighted counting sums, which must land on integers exactly.

#include <string>

#include "census/arith.hpp"
#include "census/error.hpp"

namespace census {

struct RationalCount {
  BigInt num{0};
  BigInt den{1};  // always >= 1, gcd(num, den) == 1

  RationalCount() = default;
  RationalCount(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  explicit RationalCount(i64 n) : num(n), den(1) {}

  void reduce() {
    CENSUS_CHECK(den != 0, "RationalCount: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  RationalCount& operator+=(const RationalCount& o) {
    num = num * o.den + o.num * den;
    den = den * o.den;
    reduce();
    return *this;
  }
  friend RationalCount operator+(RationalCount a, const RationalCount& b) { return a += b; }

  friend bool operator==(const RationalCount& a, const RationalCount& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalCount& a, const RationalCount& b) { return !(a == b); }

  bool is_integer() const { return den == 1; }

  // Integral value; caller must have checked is_integer().
  BigInt as_integer() const {
    CENSUS_CHECK(is_integer(), "RationalCount: non-integral value where integer expected");
    return num;
  }

  std::string str() const {
    if (is_integer()) return num.str();
    return num.str() + "/" + den.str();
  }
};

// 1/phi(order) — the summand of the cyclic-subgroup counting identity.
inline RationalCount phi_reciprocal(i64 order) { return RationalCount(BigInt(1), BigInt(euler_phi(order))); }

}  // namespace census
