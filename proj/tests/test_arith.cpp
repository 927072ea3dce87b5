#include <catch2/catch_amalgamated.hpp>

#include "census/arith.hpp"
#include "census/rational.hpp"
#include "oracles.hpp"

using namespace census;

TEST_CASE("factorize gives ascending prime powers", "[arith]") {
  REQUIRE(factorize(1).empty());
  REQUIRE(factorize(360) == std::vector<std::pair<i64, int>>{{2, 3}, {3, 2}, {5, 1}});
  REQUIRE(factorize(97) == std::vector<std::pair<i64, int>>{{97, 1}});
  for (i64 n = 2; n <= 500; ++n) {
    i64 back = 1;
    i64 prev = 1;
    for (auto [p, e] : factorize(n)) {
      REQUIRE(p > prev);
      prev = p;
      for (int i = 0; i < e; ++i) back *= p;
    }
    REQUIRE(back == n);
  }
}

TEST_CASE("primality by trial division", "[arith]") {
  auto naive = [](i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (i64 n = 0; n <= 2000; ++n) REQUIRE(is_prime(n) == naive(n));
  REQUIRE(is_prime(999983));
  REQUIRE_FALSE(is_prime(999981));
}

TEST_CASE("totient matches gcd counting", "[arith]") {
  for (i64 n = 1; n <= 300; ++n) REQUIRE(euler_phi(n) == oracle::phi(n));
}

TEST_CASE("divisor lists are sorted and complete", "[arith]") {
  REQUIRE(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  REQUIRE(divisors(1) == std::vector<i64>{1});
  for (i64 n = 1; n <= 300; ++n) {
    auto d = divisors(n);
    REQUIRE(std::is_sorted(d.begin(), d.end()));
    REQUIRE((i64)d.size() == oracle::tau(n));
    for (i64 x : d) REQUIRE(n % x == 0);
  }
}

TEST_CASE("p_part strips everything coprime", "[arith]") {
  REQUIRE(p_part(360, 2) == 8);
  REQUIRE(p_part(360, 3) == 9);
  REQUIRE(p_part(360, 7) == 1);
  REQUIRE(p_part(1, 5) == 1);
}

TEST_CASE("checked_pow overflows loudly", "[arith]") {
  REQUIRE(checked_pow(3, 9) == 19683);
  REQUIRE(checked_pow(7, 0) == 1);
  REQUIRE_THROWS_AS(checked_pow(10, 19), Error);
}

TEST_CASE("big_pow and mod_pow agree with each other", "[arith]") {
  REQUIRE(big_pow(BigInt(3), 40) == BigInt("12157665459056928801"));
  for (i64 b = 2; b <= 10; ++b)
    for (u64 e = 0; e <= 12; ++e) {
      BigInt full = big_pow(BigInt(b), e);
      REQUIRE(mod_pow(b, (i64)e, 1000003) == (i64)(full % 1000003));
    }
}

TEST_CASE("rational accumulation stays exact", "[arith]") {
  RationalCount sum;
  sum += RationalCount(BigInt(1), BigInt(2));
  sum += RationalCount(BigInt(1), BigInt(3));
  sum += RationalCount(BigInt(1), BigInt(6));
  REQUIRE(sum.is_integer());
  REQUIRE(sum.as_integer() == 1);
  REQUIRE(sum.str() == "1");

  RationalCount half(BigInt(2), BigInt(4));
  REQUIRE(half.num == 1);
  REQUIRE(half.den == 2);
  REQUIRE(half.str() == "1/2");
  REQUIRE_FALSE(half.is_integer());
}

TEST_CASE("phi_reciprocal sums generators to whole subgroups", "[arith]") {
  // A cyclic group of order n: summing 1/phi(ord(x)) over all n elements
  // counts each cyclic subgroup once, i.e. gives the divisor count.
  for (i64 n = 1; n <= 60; ++n) {
    RationalCount sum;
    for (i64 k = 0; k < n; ++k) sum += phi_reciprocal(n / std::gcd(n, k));
    REQUIRE(sum.is_integer());
    REQUIRE(sum.as_integer() == BigInt(num_divisors(n)));
  }
}
