#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tlc/census.hpp"
#include "tlc/error.hpp"

using namespace tlc;

namespace {

// Burnside brute force straight from the definition: fixed maps found by
// testing every noncolliding map against every group element.
std::int64_t burnside_brute(const PlaneTree& base) {
  const auto info = planar_automorphisms(base);
  const auto maps = oracle::noncolliding_maps(base);
  std::vector<Vertex> g(base.vertex_count());
  std::iota(g.begin(), g.end(), 0);
  std::int64_t sum = 0;
  for (int k = 0; k < info.order; ++k) {
    for (const auto& d : maps) sum += apply_automorphism(base, g, d) == d;
    for (auto& v : g) v = info.generator[v];
  }
  return sum;
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

TEST_CASE("enumerate_plane_trees counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 14, 34, 95, 280};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_plane_trees(n).size() == expected[n - 1]);
  CHECK(canonical_code(enumerate_plane_trees(3)[0]) == canonical_code(make_path(3)));
  std::set<std::string> four;
  for (const auto& t : enumerate_plane_trees(4)) four.insert(canonical_code(t));
  CHECK(four == std::set<std::string>{canonical_code(make_path(4)), canonical_code(make_star(4))});
  CHECK_THROWS_AS(enumerate_plane_trees(13), Error);
}

TEST_CASE("enumerate_ncpd examples") {
  CHECK(enumerate_ncpd(make_path(2)).size() == 3);
  CHECK(enumerate_ncpd(make_path(3)).size() == 8);
  CHECK(enumerate_ncpd(make_path(4)).size() == 20);
  CHECK(enumerate_ncpd(make_star(4)).size() == 20);
  CHECK(enumerate_ncpd(PlaneTree()).size() == 1);
}

TEST_CASE("count_total_ncpd examples") {
  CHECK(count_total_ncpd(1) == 1);
  CHECK(count_total_ncpd(2) == 3);
  CHECK(count_total_ncpd(3) == 8);
  CHECK(count_total_ncpd(5) == 48);
  CHECK(count_total_ncpd(12) == pow2(11) + 11 * pow2(10));
}

TEST_CASE("enumerate_ncpd matches the 3^(n-1) filter, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      auto got = enumerate_ncpd(base);
      auto want = oracle::noncolliding_maps(base);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      REQUIRE(got == want);
    }
}

TEST_CASE("shape independence, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      const auto maps = enumerate_ncpd(base);
      REQUIRE(static_cast<std::int64_t>(maps.size()) == count_total_ncpd(n));
      REQUIRE(count_ncpd(base) == count_total_ncpd(n));
      for (const auto& d : maps) REQUIRE(validate_noncolliding(base, d));
      REQUIRE(std::set<DirectionMap>(maps.begin(), maps.end()).size() == maps.size());
    }
}

TEST_CASE("orbit_count examples") {
  const auto p3 = orbit_count(make_path(3));
  CHECK(p3.p == 2);
  CHECK(p3.center == CenterKind::Vertex);
  CHECK(p3.orbits == 5);
  CHECK(p3.formula == 5);
  CHECK(p3.agree);

  const auto p4 = orbit_count(make_path(4));
  CHECK(p4.p == 2);
  CHECK(p4.center == CenterKind::Edge);
  CHECK(p4.orbits == 11);
  CHECK(p4.formula == 11);

  const auto s4 = orbit_count(make_star(4));
  CHECK(s4.p == 3);
  CHECK(s4.orbits == 8);
  CHECK(s4.formula == 8);

  const auto p2 = orbit_count(make_path(2));
  CHECK(p2.total == 3);
  // undirected is fixed by the half-turn, the two directed maps swap
  CHECK(p2.orbits == 2);
  CHECK(p2.formula == 2);

  const auto one = orbit_count(PlaneTree());
  CHECK(one.orbits == 1);
  CHECK(one.formula == 1);
}

TEST_CASE("exact_symmetry_counts on the 7-star") {
  const PlaneTree star = make_star(7);
  const auto direct = exact_symmetry_counts(star);
  CHECK(direct.at(6) == 2);
  CHECK(direct.at(2) == 6);
  CHECK(direct.at(3) == 2);
  CHECK(direct.at(1) == 246);
  CHECK(exact_symmetry_counts_lattice(star) == direct);
  CHECK(orbit_count(star).orbits == 46);

  // the closed-form summation, read literally, disagrees at d = 2
  const auto literal = exact_symmetry_counts_literal(star);
  CHECK(literal.at(2) == 2);
  CHECK(literal.at(2) != direct.at(2));
  const auto row = orbit_count(star);
  CHECK(row.lattice_agrees);
  CHECK_FALSE(row.literal_agrees);
}

TEST_CASE("exact_symmetry_counts rejects edge-centered trees") {
  try {
    exact_symmetry_counts(make_path(4));
    FAIL("expected NotVertexCentered");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotVertexCentered);
  }
}

TEST_CASE("Burnside consistency against a definition-level oracle, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      const auto row = orbit_count(base);
      REQUIRE(row.burnside_sum == row.orbits * row.p);
      REQUIRE(row.burnside_sum == burnside_brute(base));
      REQUIRE(static_cast<std::int64_t>(oracle::distinct_codes(base)) == row.orbits);
      REQUIRE(row.orbits <= row.total);
      if (row.p == 1) REQUIRE(row.orbits == row.total);
      REQUIRE(row.formula);
      REQUIRE(row.agree);
    }
}

TEST_CASE("fixed-map counts match the brute filter") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      const auto info = planar_automorphisms(base);
      if (info.order == 1) continue;
      const auto maps = oracle::noncolliding_maps(base);
      std::int64_t fixed = 0;
      for (const auto& d : maps) fixed += apply_automorphism(base, info.generator, d) == d;
      REQUIRE(count_fixed_maps(base, info.generator) == fixed);
    }
}

TEST_CASE("closed forms agree on paths, stars and all small trees") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& base : {make_path(n), make_star(n)}) {
      const auto row = orbit_count(base);
      REQUIRE(row.formula);
      CHECK(*row.formula == row.orbits);
      CHECK(row.agree);
    }
  }
  for (int n = 1; n <= 7; ++n)
    for (const auto& base : enumerate_plane_trees(n)) CHECK(orbit_count(base).agree);
}

TEST_CASE("edge-centered half-turn fixes 2^(k-1) maps") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& base : enumerate_plane_trees(2 * k)) {
      const auto info = planar_automorphisms(base);
      if (info.order != 2 || info.center_kind != CenterKind::Edge) continue;
      CHECK(count_fixed_maps(base, info.generator) == pow2(k - 1));
    }
}

TEST_CASE("stabilizer classification: direct equals lattice, n <= 9") {
  int checked = 0;
  for (int n = 2; n <= 9; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      const auto info = planar_automorphisms(base);
      if (info.order == 1 || info.center_kind != CenterKind::Vertex) continue;
      ++checked;
      const auto direct = exact_symmetry_counts(base);
      REQUIRE(direct == exact_symmetry_counts_lattice(base));
      // every map sits in an orbit of size p / d
      std::int64_t total = 0, orbits_times_p = 0;
      for (const auto& [d, count] : direct) {
        REQUIRE(info.order % d == 0);
        total += count;
        orbits_times_p += count * d;
      }
      const auto row = orbit_count(base);
      REQUIRE(total == row.total);
      REQUIRE(orbits_times_p == row.orbits * row.p);
    }
  CHECK(checked > 10);
}

TEST_CASE("mobius") {
  const std::vector<int> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n - 1]);
}

TEST_CASE("census_table") {
  const auto two = census_table(2, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].orbits == 2);

  const auto rows = census_table(4);
  CHECK(rows.size() == 5);
  std::map<std::string, std::int64_t> by_code;
  for (const auto& r : rows) by_code[r.tree_code] = r.orbits;
  CHECK(by_code.at(canonical_code(make_path(3))) == 5);
  CHECK(by_code.at(canonical_code(make_path(4))) == 11);
  CHECK(by_code.at(canonical_code(make_star(4))) == 8);
  for (const auto& r : census_table(8))
    if (r.p == 1) CHECK(r.orbits == count_total_ncpd(r.n));
  CHECK_THROWS_AS(census_table(13), Error);
}

TEST_CASE("census totals for n = 1..9") {
  const std::vector<std::int64_t> expected{1, 2, 5, 19, 88, 476, 2834, 17672, 114474};
  for (int n = 1; n <= 9; ++n) {
    std::int64_t sum = 0;
    for (const auto& r : census_table(n, n)) sum += r.orbits;
    CHECK(sum == expected[n - 1]);
  }
}

TEST_CASE("index_histogram sums to the total") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& base : enumerate_plane_trees(n)) {
      const auto h = index_histogram(base);
      std::int64_t sum = 0;
      for (const auto& [index, count] : h) {
        CHECK(index % 2 == n % 2);
        sum += count;
      }
      CHECK(sum == count_total_ncpd(n));
    }
  const auto eight = index_histogram(make_path(2));
  CHECK(eight.at(0) == 1);
  CHECK(eight.at(2) == 2);
}
