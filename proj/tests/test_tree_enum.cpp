#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "nsg/reference_data.hpp"
#include "nsg/tree_enum.hpp"

using nsg::EnumConfig;
using nsg::NumericalSemigroup;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("counts match the published census up to genus 16") {
  auto counts = nsg::count_by_genus(16);
  REQUIRE(counts.size() == 17);
  for (int g = 0; g <= 16; ++g) CHECK(counts[static_cast<std::size_t>(g)] == nsg::reference_count(g));
}

TEST_CASE("enumeration is deterministic across worker counts") {
  EnumConfig base;
  base.max_genus = 12;
  base.collect_stats = true;
  base.workers = 1;
  auto one = nsg::enumerate_with_visitor(base, [](const NumericalSemigroup&) {});
  for (unsigned workers : {2u, 3u, 8u}) {
    EnumConfig cfg = base;
    cfg.workers = workers;
    auto many = nsg::enumerate_with_visitor(cfg, [](const NumericalSemigroup&) {});
    REQUIRE(many.per_genus.size() == one.per_genus.size());
    for (std::size_t g = 0; g < one.per_genus.size(); ++g) {
      CHECK(many.per_genus[g].count == one.per_genus[g].count);
      CHECK(many.per_genus[g].ordinary == one.per_genus[g].ordinary);
      CHECK(many.per_genus[g].symmetric == one.per_genus[g].symmetric);
      CHECK(many.per_genus[g].child_histogram == one.per_genus[g].child_histogram);
    }
  }
}

TEST_CASE("explicit parallel cutoffs do not change the tallies") {
  for (int cutoff : {0, 3, 7, 12}) {
    EnumConfig cfg;
    cfg.max_genus = 12;
    cfg.workers = 4;
    cfg.parallel_cutoff_genus = cutoff;
    auto counts = nsg::count_by_genus(cfg);
    for (int g = 0; g <= 12; ++g)
      CHECK(counts[static_cast<std::size_t>(g)] == nsg::reference_count(g));
  }
}

TEST_CASE("per-genus statistics carry the known structure") {
  EnumConfig cfg;
  cfg.max_genus = 8;
  cfg.collect_stats = true;
  auto stats = nsg::enumerate_with_visitor(cfg, [](const NumericalSemigroup&) {});

  // exactly one ordinary semigroup per genus
  for (const auto& gs : stats.per_genus) CHECK(gs.ordinary == 1);

  // the root has one child; genus 2 splits into a leaf and a 3-child node
  CHECK(stats.per_genus[0].child_histogram == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(stats.per_genus[1].child_histogram == std::map<int, std::uint64_t>{{2, 1}});
  CHECK(stats.per_genus[2].child_histogram == std::map<int, std::uint64_t>{{1, 1}, {3, 1}});
  CHECK(stats.per_genus[3].child_histogram ==
        std::map<int, std::uint64_t>{{0, 1}, {1, 1}, {2, 1}, {4, 1}});

  // each level's node count is the number of children one level up
  for (std::size_t g = 1; g < stats.per_genus.size(); ++g) {
    std::uint64_t children = 0;
    for (const auto& [k, nodes] : stats.per_genus[g - 1].child_histogram)
      children += static_cast<std::uint64_t>(k) * nodes;
    CHECK(children == stats.per_genus[g].count);
  }

  // symmetric semigroups by genus: {1}, {1,3}, then 2 and 3 of genus 3 and 4
  CHECK(stats.per_genus[1].symmetric == 1);
  CHECK(stats.per_genus[2].symmetric == 1);
  CHECK(stats.per_genus[3].symmetric == 2);
  CHECK(stats.per_genus[4].symmetric == 3);

  CHECK(stats.total_nodes() == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67);
}

TEST_CASE("visitor sees every node exactly once, any worker count") {
  for (unsigned workers : {1u, 4u}) {
    EnumConfig cfg;
    cfg.max_genus = 11;
    cfg.workers = workers;
    std::atomic<std::uint64_t> seen{0};
    std::atomic<std::uint64_t> genus_sum{0};
    auto stats = nsg::enumerate_with_visitor(cfg, [&](const NumericalSemigroup& s) {
      seen.fetch_add(1, std::memory_order_relaxed);
      genus_sum.fetch_add(static_cast<std::uint64_t>(s.genus()), std::memory_order_relaxed);
    });
    CHECK(seen.load() == stats.total_nodes());
    std::uint64_t expected_genus_sum = 0;
    for (std::size_t g = 0; g < stats.per_genus.size(); ++g)
      expected_genus_sum += g * stats.per_genus[g].count;
    CHECK(genus_sum.load() == expected_genus_sum);
  }
}

TEST_CASE("stats serialization has the documented shape") {
  EnumConfig cfg;
  cfg.max_genus = 3;
  cfg.collect_stats = true;
  auto stats = nsg::enumerate_with_visitor(cfg, [](const NumericalSemigroup&) {});
  auto doc = nsg::stats_to_json(stats);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  CHECK(doc[2]["genus"] == 2);
  CHECK(doc[2]["count"] == 2);
  CHECK(doc[2]["ordinary"] == 1);
  CHECK(doc[2]["symmetric"] == 1);
  CHECK(doc[2]["child_histogram"]["1"] == 1);
  CHECK(doc[2]["child_histogram"]["3"] == 1);
  CHECK(doc[3]["count"] == 4);
}

TEST_CASE("config validation") {
  EnumConfig cfg;
  cfg.max_genus = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.max_genus = nsg::kMaxEnumerableGenus + 1;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.max_genus = 5;
  cfg.parallel_cutoff_genus = 6;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.parallel_cutoff_genus = -1;
  CHECK_NOTHROW(cfg.validate());

  // genus 0 is a legal single-row run
  CHECK(nsg::count_by_genus(0) == std::vector<std::uint64_t>{1});
}

TEST_CASE("dot export is deterministic and bounded") {
  auto dot1 = nsg::export_tree_dot(3);
  auto dot3 = nsg::export_tree_dot(3);
  CHECK(dot1 == dot3);

  CHECK(count_occurrences(dot1, "[label=") == 8);  // 1+1+2+4 nodes
  CHECK(count_occurrences(dot1, "->") == 7);
  CHECK(dot1.find("\"\" [label=\"{}\"]") != std::string::npos);
  CHECK(dot1.find("\"1\" [label=\"{1}\"]") != std::string::npos);
  CHECK(dot1.find("\"1,2\" -> \"1,2,3\"") != std::string::npos);

  auto deep = nsg::export_tree_dot(5);
  CHECK(count_occurrences(deep, "[label=") == 27);  // plus 12 at genus 5
  CHECK(count_occurrences(deep, "->") == 26);

  CHECK(count_occurrences(nsg::export_tree_dot(0), "[label=") == 1);
  CHECK_THROWS_AS(nsg::export_tree_dot(9), std::domain_error);
  CHECK_THROWS_AS(nsg::export_tree_dot(-1), std::invalid_argument);
}
