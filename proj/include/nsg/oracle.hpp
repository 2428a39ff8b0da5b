#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// The subset scan below visits C(2g-1, g) candidate gap sets, so the oracle
/// is capped where that stays around a few million.
inline constexpr int kMaxBruteForceGenus = 13;

/// A validated gap set: distinct positive integers whose complement in the
/// non-negative integers is closed under addition.  Exists so oracle results
/// carry their invariant with them; validation is mask-based and shares no
/// code with NumericalSemigroup.
class GapSet {
 public:
  static GapSet validate(std::vector<int> gaps) {
    std::sort(gaps.begin(), gaps.end());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] < 1) throw std::invalid_argument("GapSet: gaps must be positive");
      if (i > 0 && gaps[i] == gaps[i - 1]) throw std::invalid_argument("GapSet: duplicate gap");
      if (gaps[i] > 62) throw std::domain_error("GapSet: gap beyond oracle mask range");
    }
    std::uint64_t gap_mask = 0;
    for (int v : gaps) gap_mask |= std::uint64_t{1} << v;
    const int top = gaps.empty() ? 0 : gaps.back();
    if (!complement_closed(gap_mask, top))
      throw std::invalid_argument("GapSet: complement not closed under addition");
    GapSet out;
    out.gaps_ = std::move(gaps);
    return out;
  }

  const std::vector<int>& gaps() const { return gaps_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  bool symmetric() const { return !gaps_.empty() && frobenius() == 2 * genus() - 1; }

  NumericalSemigroup to_semigroup(int window = 0) const {
    return NumericalSemigroup::from_gaps(gaps_, window);
  }

  friend bool operator==(const GapSet& a, const GapSet& b) { return a.gaps_ == b.gaps_; }
  friend bool operator<(const GapSet& a, const GapSet& b) { return a.gaps_ < b.gaps_; }

  /// True when no two nonzero non-gaps up to `top` sum to a gap.  Bit i of
  /// gap_mask marks gap i; everything above `top` is a member.
  static bool complement_closed(std::uint64_t gap_mask, int top) {
    for (int a = 1; a <= top; ++a) {
      if ((gap_mask >> a) & 1u) continue;
      // sums a + b for every member b: shift the member mask by a
      std::uint64_t members = ~gap_mask;  // bit 0 (zero itself) is harmless
      if (((members << a) & gap_mask) != 0) return false;
    }
    return true;
  }

 private:
  GapSet() = default;
  std::vector<int> gaps_;
};

namespace detail {

// Lexicographic scan over all g-element subsets of {1..2g-1}, invoking fn on
// each subset that is a valid gap set (as a sorted vector).
template <typename F>
void for_each_gap_set(int g, F&& fn) {
  if (g < 0) throw std::invalid_argument("oracle: negative genus");
  if (g > kMaxBruteForceGenus)
    throw std::domain_error("oracle: genus capped at " + std::to_string(kMaxBruteForceGenus));
  if (g == 0) {
    fn(std::vector<int>{});
    return;
  }
  const int top = 2 * g - 1;
  std::vector<int> c(static_cast<std::size_t>(g));
  std::iota(c.begin(), c.end(), 1);
  for (;;) {
    std::uint64_t gap_mask = 0;
    for (int v : c) gap_mask |= std::uint64_t{1} << v;
    if (GapSet::complement_closed(gap_mask, top)) fn(c);
    // advance to the next combination
    int i = g - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == top - (g - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < g; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Counts numerical semigroups of genus g by exhausting every g-element
/// subset of {1..2g-1} and testing closure of the complement directly.
/// Independent of the tree construction; the Frobenius bound f <= 2g-1 is the
/// only theory baked in.
inline std::uint64_t brute_force_count(int g) {
  std::uint64_t n = 0;
  detail::for_each_gap_set(g, [&](const std::vector<int>&) { ++n; });
  return n;
}

/// Same scan, restricted to gap sets whose largest gap is exactly 2g-1.
inline std::uint64_t brute_force_symmetric_count(int g) {
  std::uint64_t n = 0;
  detail::for_each_gap_set(g, [&](const std::vector<int>& gaps) {
    if (!gaps.empty() && gaps.back() == 2 * g - 1) ++n;
  });
  return n;
}

/// All valid gap sets of genus g, in lexicographic order.
inline std::vector<GapSet> brute_force_gap_sets(int g) {
  std::vector<GapSet> out;
  detail::for_each_gap_set(g, [&](const std::vector<int>& gaps) {
    out.push_back(GapSet::validate(gaps));
  });
  return out;
}

/// Nonzero elements whose deletion leaves the set closed under addition,
/// found by scanning every member of the window.  These are exactly the
/// minimal generators; the scan does not assume that.
inline std::vector<int> closure_preserving_removals(const NumericalSemigroup& s) {
  std::vector<int> out;
  for (int v = 1; v <= s.window(); ++v) {
    if (!s.contains(v)) continue;
    // deletion breaks closure iff v = a + b for nonzero members a, b; both
    // are then smaller than v, so deletion cannot re-enable the sum
    bool decomposable = false;
    for (int a = 1; 2 * a <= v && !decomposable; ++a)
      if (s.contains(a) && s.contains(v - a)) decomposable = true;
    if (!decomposable) out.push_back(v);
  }
  return out;
}

/// Children of s in the semigroup tree, from first principles: remove one
/// element v > frobenius (so v becomes the largest gap), keep only removals
/// whose result is still closed, and rebuild each child from its gap set.
inline std::vector<NumericalSemigroup> brute_force_children(const NumericalSemigroup& s) {
  if (s.genus() > kMaxBruteForceGenus)
    throw std::domain_error("brute_force_children: genus capped at " +
                            std::to_string(kMaxBruteForceGenus));
  std::vector<NumericalSemigroup> out;
  for (int v = s.frobenius() + 1; v <= s.window(); ++v) {
    if (v < 1 || !s.contains(v)) continue;
    bool decomposable = false;
    for (int a = 1; 2 * a <= v && !decomposable; ++a)
      if (s.contains(a) && s.contains(v - a)) decomposable = true;
    if (decomposable) continue;
    std::vector<int> child_gaps = s.gaps();
    child_gaps.push_back(v);
    out.push_back(NumericalSemigroup::from_gaps(std::move(child_gaps), s.window()));
  }
  return out;
}

}  // namespace nsg
