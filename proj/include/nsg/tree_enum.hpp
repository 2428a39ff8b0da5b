#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Genus cap for exact enumeration.  Counts stay far below 2^64 here; the cap
/// keeps membership windows (3g + 3 bits) and per-node work bounded.
inline constexpr int kMaxEnumerableGenus = 64;

/// Tuning knobs for a tree walk.  workers = 0 picks the hardware concurrency;
/// parallel_cutoff_genus = -1 picks a depth with enough subtrees to balance.
struct EnumConfig {
  int max_genus = 0;
  unsigned workers = 0;
  bool collect_stats = false;
  int parallel_cutoff_genus = -1;

  void validate() const {
    if (max_genus < 0) throw std::invalid_argument("EnumConfig: max_genus must be >= 0");
    if (max_genus > kMaxEnumerableGenus)
      throw std::domain_error("EnumConfig: max_genus exceeds enumeration cap " +
                              std::to_string(kMaxEnumerableGenus));
    if (parallel_cutoff_genus != -1 &&
        (parallel_cutoff_genus < 0 || parallel_cutoff_genus > max_genus))
      throw std::invalid_argument("EnumConfig: parallel_cutoff_genus out of range");
  }

  int window() const { return 3 * max_genus + 3; }

  unsigned resolved_workers() const {
    if (workers != 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  int resolved_cutoff() const {
    if (parallel_cutoff_genus != -1) return parallel_cutoff_genus;
    if (resolved_workers() <= 1) return 0;
    return std::min(max_genus, 10);
  }
};

/// Per-genus tallies of one enumeration.  child_histogram maps the number of
/// children (= effective generators) to how many nodes of that genus have it;
/// it is filled only when stats collection is on.
struct GenusStats {
  std::uint64_t count = 0;
  std::uint64_t ordinary = 0;
  std::uint64_t symmetric = 0;
  std::map<int, std::uint64_t> child_histogram;
};

struct TreeStats {
  std::vector<GenusStats> per_genus;  // indexed by genus, size max_genus + 1

  std::vector<std::uint64_t> counts() const {
    std::vector<std::uint64_t> out;
    out.reserve(per_genus.size());
    for (const auto& gs : per_genus) out.push_back(gs.count);
    return out;
  }

  std::uint64_t total_nodes() const {
    std::uint64_t total = 0;
    for (const auto& gs : per_genus) {
      if (__builtin_add_overflow(total, gs.count, &total))
        throw std::overflow_error("TreeStats: node total overflows");
    }
    return total;
  }
};

inline nlohmann::json stats_to_json(const TreeStats& stats) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t g = 0; g < stats.per_genus.size(); ++g) {
    const auto& gs = stats.per_genus[g];
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [children, nodes] : gs.child_histogram)
      hist[std::to_string(children)] = nodes;
    out.push_back({{"genus", g},
                   {"count", gs.count},
                   {"child_histogram", std::move(hist)},
                   {"ordinary", gs.ordinary},
                   {"symmetric", gs.symmetric}});
  }
  return out;
}

namespace detail {

// Flat tallies for one worker; merged additively, so totals are independent of
// how subtrees were distributed over workers.
struct Accumulator {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> ordinary;
  std::vector<std::uint64_t> symmetric;
  std::vector<std::vector<std::uint64_t>> hist;  // [genus][child count]
  bool stats = false;

  explicit Accumulator(int max_genus, bool collect_stats)
      : counts(static_cast<std::size_t>(max_genus) + 1, 0), stats(collect_stats) {
    if (stats) {
      ordinary.assign(counts.size(), 0);
      symmetric.assign(counts.size(), 0);
      // fanout at genus g never exceeds g + 2 (the ordinary node's children
      // peak one above its own generator count)
      hist.assign(counts.size(), {});
      for (std::size_t g = 0; g < hist.size(); ++g) hist[g].assign(g + 3, 0);
    }
  }

  void record(const NumericalSemigroup& s) {
    const auto g = static_cast<std::size_t>(s.genus());
    if (__builtin_add_overflow(counts[g], std::uint64_t{1}, &counts[g]))
      throw std::overflow_error("enumeration: count overflows 64 bits");
    if (stats) {
      if (s.is_ordinary()) ++ordinary[g];
      if (s.is_symmetric()) ++symmetric[g];
      ++hist[g][s.effective_generators().size()];
    }
  }

  void merge_from(const Accumulator& other) {
    for (std::size_t g = 0; g < counts.size(); ++g) {
      if (__builtin_add_overflow(counts[g], other.counts[g], &counts[g]))
        throw std::overflow_error("enumeration: count overflows 64 bits");
      if (stats) {
        ordinary[g] += other.ordinary[g];
        symmetric[g] += other.symmetric[g];
        for (std::size_t c = 0; c < hist[g].size(); ++c) hist[g][c] += other.hist[g][c];
      }
    }
  }
};

// Depth-first walk of the subtree under root, recording every node up to
// max_genus.  Children are expanded in ascending removed-generator order.
template <typename Visitor>
void walk_subtree(NumericalSemigroup root, int max_genus, Accumulator& acc, Visitor& visit) {
  std::vector<NumericalSemigroup> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    NumericalSemigroup s = std::move(stack.back());
    stack.pop_back();
    acc.record(s);
    visit(s);
    if (s.genus() < max_genus) {
      const auto& gens = s.effective_generators();
      for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        stack.push_back(s.remove_generator(*it));
    }
  }
}

}  // namespace detail

/// Walks the semigroup tree rooted at the non-negative integers down to
/// cfg.max_genus, calling visit on every node, and returns per-genus tallies.
/// Ordinary/symmetric counts and child histograms are filled when
/// cfg.collect_stats is set.
///
/// With several workers the forest below the cutoff genus is distributed over
/// threads, so the visitor must be thread-safe and insensitive to node order.
/// The returned tallies are identical for every worker count.
template <typename Visitor>
TreeStats enumerate_with_visitor(const EnumConfig& cfg, Visitor&& visit) {
  cfg.validate();
  const int cutoff = cfg.resolved_cutoff();
  detail::Accumulator acc(cfg.max_genus, cfg.collect_stats);

  // phase 1: sequential walk above the cutoff, collecting subtree roots
  std::vector<NumericalSemigroup> roots;
  {
    std::vector<NumericalSemigroup> stack;
    stack.push_back(NumericalSemigroup::ordinary(0, cfg.window()));
    while (!stack.empty()) {
      NumericalSemigroup s = std::move(stack.back());
      stack.pop_back();
      if (s.genus() == cutoff) {
        roots.push_back(std::move(s));
        continue;
      }
      acc.record(s);
      visit(s);
      const auto& gens = s.effective_generators();
      for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        stack.push_back(s.remove_generator(*it));
    }
  }

  // phase 2: workers pull whole subtrees; per-worker tallies merge additively
  const unsigned workers =
      std::min<unsigned>(cfg.resolved_workers(), static_cast<unsigned>(roots.size()));
  if (workers <= 1) {
    for (auto& r : roots) detail::walk_subtree(std::move(r), cfg.max_genus, acc, visit);
  } else {
    std::vector<detail::Accumulator> accs(workers, detail::Accumulator(cfg.max_genus, cfg.collect_stats));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mtx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= roots.size()) break;
            detail::walk_subtree(std::move(roots[i]), cfg.max_genus, accs[w], visit);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mtx);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (const auto& a : accs) acc.merge_from(a);
  }

  TreeStats stats;
  stats.per_genus.resize(static_cast<std::size_t>(cfg.max_genus) + 1);
  for (std::size_t g = 0; g < stats.per_genus.size(); ++g) {
    auto& gs = stats.per_genus[g];
    gs.count = acc.counts[g];
    if (cfg.collect_stats) {
      gs.ordinary = acc.ordinary[g];
      gs.symmetric = acc.symmetric[g];
      for (std::size_t c = 0; c < acc.hist[g].size(); ++c)
        if (acc.hist[g][c] > 0) gs.child_histogram[static_cast<int>(c)] = acc.hist[g][c];
    }
  }
  return stats;
}

/// Number of numerical semigroups per genus, index 0..max_genus.
inline std::vector<std::uint64_t> count_by_genus(const EnumConfig& cfg) {
  EnumConfig counting = cfg;
  counting.collect_stats = false;
  return enumerate_with_visitor(counting, [](const NumericalSemigroup&) {}).counts();
}

inline std::vector<std::uint64_t> count_by_genus(int max_genus, unsigned workers = 0) {
  EnumConfig cfg;
  cfg.max_genus = max_genus;
  cfg.workers = workers;
  return count_by_genus(cfg);
}

/// Graphviz rendering of the tree down to max_genus.  Node ids are the comma
/// separated gap lists; emission order is the sequential preorder, so output
/// is deterministic.  Capped at max_genus 8: the dot text grows with the node
/// count and larger trees are unreadable anyway.
inline std::string export_tree_dot(int max_genus) {
  if (max_genus < 0) throw std::invalid_argument("export_tree_dot: max_genus must be >= 0");
  if (max_genus > 8) throw std::domain_error("export_tree_dot: max_genus capped at 8");

  auto id_of = [](const NumericalSemigroup& s) {
    std::string id;
    for (int g : s.gaps()) {
      if (!id.empty()) id += ",";
      id += std::to_string(g);
    }
    return id;
  };

  std::string out = "digraph semigroup_tree {\n  node [shape=box];\n";
  std::vector<std::pair<NumericalSemigroup, std::string>> stack;  // node, parent id
  stack.emplace_back(NumericalSemigroup::ordinary(0, 3 * max_genus + 3), std::string{});
  bool root = true;
  while (!stack.empty()) {
    auto [s, parent] = std::move(stack.back());
    stack.pop_back();
    const std::string id = id_of(s);
    out += "  \"" + id + "\" [label=\"{" + id + "}\"];\n";
    if (!root) out += "  \"" + parent + "\" -> \"" + id + "\";\n";
    root = false;
    if (s.genus() < max_genus) {
      const auto& gens = s.effective_generators();
      for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        stack.emplace_back(s.remove_generator(*it), id);
    }
  }
  out += "}\n";
  return out;
}

}  // namespace nsg
