#include <catch2/catch_amalgamated.hpp>

#include "census/cyclic.hpp"
#include "census/grammar.hpp"
#include "oracles.hpp"

using namespace census;

static Group build(const std::string& text) { return build_group(parse_spec(text)); }

TEST_CASE("lattice counts match the set-of-sets oracle", "[cyclic]") {
  for (const char* s : {"C1", "C12", "C30", "Ab[2,4]", "Ab[3,9]", "Ab[2,2,2]", "D4", "D6",
                        "D9", "Q8", "Q16", "Q24", "SD(3,4;2)", "SD(5,4;2)", "C3 x D4",
                        "C5 x Q8", "SD(3,8;2)"}) {
    Group g = build(s);
    CyclicLattice lat = cyclic_lattice(g);
    INFO(s);
    REQUIRE(lat.c() == oracle::cyclic_subgroup_count(g));
    REQUIRE(lat.lambda() == oracle::maximal_cyclic_count(g));
  }
}

TEST_CASE("frozen counts for named groups", "[cyclic]") {
  auto cl = [&](const std::string& s) {
    CyclicLattice lat = cyclic_lattice(build(s));
    return std::pair<i64, i64>(lat.c(), lat.lambda());
  };
  REQUIRE(cl("D6") == std::pair<i64, i64>(10, 7));
  REQUIRE(cl("Q8") == std::pair<i64, i64>(5, 3));
  REQUIRE(cl("Q16") == std::pair<i64, i64>(8, 5));
  REQUIRE(cl("Ab[3,9]") == std::pair<i64, i64>(8, 6));
  REQUIRE(cl("Ab[2,4]") == std::pair<i64, i64>(6, 4));
  REQUIRE(cl("SD(3,2;2)") == std::pair<i64, i64>(5, 4));
  REQUIRE(cl("SD(3,4;2)") == std::pair<i64, i64>(7, 4));
  REQUIRE(cl("SD(3,8;2)") == std::pair<i64, i64>(9, 4));
  REQUIRE(cl("SD(3,16;2)") == std::pair<i64, i64>(11, 4));
  REQUIRE(cl("C12") == std::pair<i64, i64>(6, 1));
}

TEST_CASE("dihedral counts follow n + tau(n) and n + 1", "[cyclic]") {
  for (i64 n = 1; n <= 24; ++n) {
    Group g = build("D" + std::to_string(n));
    CyclicLattice lat = cyclic_lattice(g);
    REQUIRE(lat.c() == n + oracle::tau(n));
    if (n >= 3) REQUIRE(lat.lambda() == n + 1);
  }
}

TEST_CASE("alternating group counts", "[cyclic]") {
  std::string path = oracle::write_temp("cyclic_a5.tbl", oracle::a5_table_text());
  Group g = build("file:" + path);
  CyclicLattice lat = cyclic_lattice(g);
  REQUIRE(lat.c() == 32);       // 1 + 15 + 10 + 6
  REQUIRE(lat.lambda() == 31);  // every nontrivial cyclic subgroup is maximal
}

TEST_CASE("lattice bookkeeping is internally consistent", "[cyclic]") {
  for (const char* s : {"D6", "Q16", "Ab[2,4]", "SD(3,8;2)", "C2 x D5"}) {
    Group g = build(s);
    CyclicLattice lat = cyclic_lattice(g);
    for (int x = 0; x < g.n; ++x) {
      int i = lat.sub_of_elem[(size_t)x];
      REQUIRE(lat.subs[(size_t)i].test((size_t)x));
      REQUIRE(lat.sub_order[(size_t)i] == g.order_of(x));
    }
    for (size_t i = 0; i < lat.subs.size(); ++i) {
      int gen = lat.canonical_gen[i];
      REQUIRE(lat.sub_of_elem[(size_t)gen] == (int)i);
      REQUIRE(g.order_of(gen) == lat.sub_order[i]);
      // least generator: nothing below it generates the same subgroup
      for (int y = 0; y < gen; ++y) REQUIRE(lat.sub_of_elem[(size_t)y] != (int)i);
      REQUIRE((i64)lat.subs[i].count() == lat.sub_order[i]);
    }
    REQUIRE(std::is_sorted(lat.sub_order.begin(), lat.sub_order.end()));
  }
}

TEST_CASE("primitivity picks exactly the generators of maximal chains", "[cyclic]") {
  Group g = build("Ab[2,4]");  // index (a,b) = a*4 + b
  CyclicLattice lat = cyclic_lattice(g);
  REQUIRE(is_primitive(lat, 4));        // (1,0): order 2, inside no order-4 chain
  REQUIRE(is_primitive(lat, 1));        // (0,1): order 4
  REQUIRE_FALSE(is_primitive(lat, 2));  // (0,2) = (0,1)^2
  REQUIRE_FALSE(is_primitive(lat, 0));

  // x is primitive iff every y with x in <y> already lies in <x>
  for (const char* s : {"D6", "Q8", "Ab[3,9]"}) {
    Group h = build(s);
    CyclicLattice hl = cyclic_lattice(h);
    for (int x = 0; x < h.n; ++x) {
      bool dominated = false;
      for (int y = 0; y < h.n && !dominated; ++y) {
        const ElementSet& span = hl.subs[(size_t)hl.sub_of_elem[(size_t)y]];
        if (span.test((size_t)x) && !hl.subs[(size_t)hl.sub_of_elem[(size_t)x]].test((size_t)y))
          dominated = true;
      }
      REQUIRE(is_primitive(hl, x) == !dominated);
    }
  }
}

TEST_CASE("maximal flags agree with set inclusion", "[cyclic]") {
  Group g = build("Q24");
  CyclicLattice lat = cyclic_lattice(g);
  for (size_t i = 0; i < lat.subs.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < lat.subs.size(); ++j)
      if (i != j && lat.subs[i].is_subset_of(lat.subs[j])) contained = true;
    REQUIRE(lat.maximal[i] == !contained);
  }
  REQUIRE((i64)maximal_cyclic_indices(lat).size() == lat.lambda());
}

TEST_CASE("totient-weighted sums count cyclic subgroups on power-closed sets", "[cyclic]") {
  Group g = build("D6");
  // the whole group
  RationalCount whole = cyclic_count_sum(g, g.full_set());
  REQUIRE(whole.is_integer());
  REQUIRE(whole.as_integer() == 10);
  REQUIRE(c_of_subset(g, g.full_set()) == 10);
  // a subgroup: the rotations, a cyclic C6 with tau(6) = 4 cyclic subgroups
  ElementSet rot(g.n);
  for (int i = 0; i < 6; ++i) rot.set((size_t)i);
  REQUIRE(c_of_subset(g, rot) == 4);
  // union of all reflections and the identity: 6 involutions + 1
  ElementSet refl(g.n);
  refl.set(0);
  for (int i = 6; i < 12; ++i) refl.set((size_t)i);
  REQUIRE(c_of_subset(g, refl) == 7);
  // a non-power-closed set gives a non-integral sum: {r} alone
  ElementSet just_r(g.n);
  just_r.set(1);
  REQUIRE_FALSE(cyclic_count_sum(g, just_r).is_integer());
}

TEST_CASE("scalar helpers agree with the lattice", "[cyclic]") {
  for (const char* s : {"D5", "Q12", "Ab[2,6]"}) {
    Group g = build(s);
    CyclicLattice lat = cyclic_lattice(g);
    REQUIRE(c_of(g) == lat.c());
    REQUIRE(lambda_of(g) == lat.lambda());
  }
}
