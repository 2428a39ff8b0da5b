#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "nsg/oracle.hpp"
#include "nsg/reference_data.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/tree_enum.hpp"

using nsg::GapSet;
using nsg::NumericalSemigroup;

TEST_CASE("subset scan reproduces the published counts") {
  CHECK(nsg::brute_force_count(0) == 1);
  CHECK(nsg::brute_force_count(1) == 1);
  CHECK(nsg::brute_force_count(2) == 2);
  CHECK(nsg::brute_force_count(3) == 4);
  CHECK(nsg::brute_force_count(8) == 67);
  CHECK(nsg::brute_force_count(10) == 204);
  CHECK(nsg::brute_force_count(12) == 592);
  CHECK_THROWS_AS(nsg::brute_force_count(nsg::kMaxBruteForceGenus + 1), std::domain_error);
  CHECK_THROWS_AS(nsg::brute_force_count(-1), std::invalid_argument);
}

TEST_CASE("gap set validation") {
  auto gs = GapSet::validate({7, 1, 4, 2});
  CHECK(gs.gaps() == std::vector<int>{1, 2, 4, 7});
  CHECK(gs.genus() == 4);
  CHECK(gs.frobenius() == 7);
  CHECK(gs.symmetric());
  CHECK(gs.to_semigroup() == NumericalSemigroup::from_gaps({1, 2, 4, 7}));

  CHECK(!GapSet::validate({1, 2}).symmetric());
  CHECK(GapSet::validate({}).genus() == 0);
  CHECK(GapSet::validate({}).frobenius() == -1);

  CHECK_THROWS_AS(GapSet::validate({0}), std::invalid_argument);
  CHECK_THROWS_AS(GapSet::validate({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GapSet::validate({2, 3}), std::invalid_argument);  // 1+1 hits the gap 2
  CHECK_THROWS_AS(GapSet::validate({3}), std::invalid_argument);     // 1+2 hits the gap 3
  CHECK_THROWS_AS(GapSet::validate({100}), std::domain_error);
}

TEST_CASE("every enumerated gap set respects the frobenius bound") {
  for (int g = 0; g <= 9; ++g) {
    auto sets = nsg::brute_force_gap_sets(g);
    CHECK(sets.size() == nsg::reference_count(g));
    std::uint64_t symmetric = 0;
    for (const auto& gs : sets) {
      REQUIRE(gs.genus() == g);
      if (g > 0) REQUIRE(gs.frobenius() <= 2 * g - 1);
      if (gs.symmetric()) ++symmetric;
    }
    CHECK(symmetric == nsg::brute_force_symmetric_count(g));
  }
}

TEST_CASE("oracle and tree agree on the full set of genus-6 semigroups") {
  auto sets = nsg::brute_force_gap_sets(6);
  std::vector<std::vector<int>> from_oracle;
  for (const auto& gs : sets) from_oracle.push_back(gs.gaps());

  std::vector<std::vector<int>> from_tree;
  nsg::EnumConfig cfg;
  cfg.max_genus = 6;
  cfg.workers = 1;
  nsg::enumerate_with_visitor(cfg, [&](const NumericalSemigroup& s) {
    if (s.genus() == 6) from_tree.push_back(s.gaps());
  });

  std::sort(from_oracle.begin(), from_oracle.end());
  std::sort(from_tree.begin(), from_tree.end());
  CHECK(from_oracle == from_tree);
  CHECK(from_oracle.size() == 23);
}

TEST_CASE("symmetric tallies agree between scan and tree statistics") {
  nsg::EnumConfig cfg;
  cfg.max_genus = 9;
  cfg.collect_stats = true;
  auto stats = nsg::enumerate_with_visitor(cfg, [](const NumericalSemigroup&) {});
  for (int g = 0; g <= 9; ++g)
    CHECK(stats.per_genus[static_cast<std::size_t>(g)].symmetric ==
          nsg::brute_force_symmetric_count(g));
}

TEST_CASE("closure-preserving removals are exactly the minimal generators") {
  // deleting a minimal generator keeps closure even below the frobenius
  // number; such removals are not tree edges
  auto s = NumericalSemigroup::from_gaps({1, 2, 4, 7});
  CHECK(nsg::closure_preserving_removals(s) == std::vector<int>{3, 5});
  CHECK(s.effective_generators().empty());

  auto n0 = NumericalSemigroup::ordinary(0);
  CHECK(nsg::closure_preserving_removals(n0) == std::vector<int>{1});

  const int max_genus = 8;
  std::function<void(const NumericalSemigroup&)> walk = [&](const NumericalSemigroup& t) {
    REQUIRE(nsg::closure_preserving_removals(t) == t.minimal_generators());
    if (t.genus() < max_genus)
      for (int e : t.effective_generators()) walk(t.remove_generator(e));
  };
  walk(NumericalSemigroup::ordinary(0, 3 * max_genus + 3));
}

TEST_CASE("brute-force children equal the incremental construction") {
  auto n0 = NumericalSemigroup::ordinary(0);
  auto roots = nsg::brute_force_children(n0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == NumericalSemigroup::ordinary(1, n0.window()));

  // a leaf: every element above the frobenius number is decomposable
  CHECK(nsg::brute_force_children(NumericalSemigroup::from_gaps({1, 2, 4, 7})).empty());

  const int max_genus = 8;
  std::uint64_t nodes = 0;
  std::function<void(const NumericalSemigroup&)> walk = [&](const NumericalSemigroup& t) {
    ++nodes;
    std::vector<NumericalSemigroup> incremental;
    for (int e : t.effective_generators()) incremental.push_back(t.remove_generator(e));
    REQUIRE(nsg::brute_force_children(t) == incremental);
    if (t.genus() < max_genus)
      for (const auto& c : incremental) walk(c);
  };
  walk(NumericalSemigroup::ordinary(0, 3 * max_genus + 3));
  CHECK(nodes == 156);  // tree size through genus 8
}
