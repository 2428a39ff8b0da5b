#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsg {

// Every function here refuses inputs whose exact value would not fit the
// result type instead of wrapping.  The caps below are the last safe inputs.
inline constexpr int kMaxFibonacciIndex = 93;   // F_93 < 2^64 <= F_94
inline constexpr int kMaxLowerBoundGenus = 92;  // 2*F_92 < 2^64
inline constexpr int kMaxUpperBoundGenus = 65;  // 1 + 3*2^62 < 2^64
inline constexpr int kMaxCatalanGenus = 64;     // intermediates < 2^128
inline constexpr int kMaxMultisetAGenus = 92;   // cardinality 2*F_g
inline constexpr int kMaxMultisetBGenus = 64;   // cardinality 1 + 3*2^(g-3)

/// Fibonacci numbers with F_1 = F_2 = 1.  F_0 = 0.
inline std::uint64_t fibonacci(int i) {
  if (i < 0) throw std::invalid_argument("fibonacci: negative index");
  if (i > kMaxFibonacciIndex) throw std::overflow_error("fibonacci: F_i exceeds 64 bits");
  if (i == 0) return 0;
  std::uint64_t a = 0, b = 1;  // F_0, F_1
  for (int k = 2; k <= i; ++k) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b;
}

/// Lower bound 2*F_g for the number of semigroups of genus g, valid for g >= 2.
inline std::uint64_t lower_bound(int g) {
  if (g < 2) throw std::domain_error("lower_bound: defined for genus >= 2");
  if (g > kMaxLowerBoundGenus) throw std::overflow_error("lower_bound: exceeds 64 bits");
  return 2 * fibonacci(g);
}

/// Upper bound 1 + 3*2^(g-3), valid for g >= 3.
inline std::uint64_t upper_bound(int g) {
  if (g < 3) throw std::domain_error("upper_bound: defined for genus >= 3");
  if (g > kMaxUpperBoundGenus) throw std::overflow_error("upper_bound: exceeds 64 bits");
  return 1 + 3 * (std::uint64_t{1} << (g - 3));
}

/// Catalan number C_g, the coarse upper bound.  Uses the segmented recurrence
/// C_k = C_{k-1} * 2 * (2k - 1) / (k + 1); every division is exact because the
/// running value is always C_k times an already-divided integer.
inline unsigned __int128 catalan(int g) {
  if (g < 0) throw std::invalid_argument("catalan: negative genus");
  if (g > kMaxCatalanGenus) throw std::overflow_error("catalan: exceeds 128 bits");
  unsigned __int128 c = 1;
  for (int k = 1; k <= g; ++k) {
    c *= static_cast<unsigned>(2 * (2 * k - 1));
    c /= static_cast<unsigned>(k + 1);
  }
  return c;
}

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(out.rbegin(), out.rend());
}

/// Multiset of small non-negative integers, stored as per-value counts.
/// This is the state of the genus recursions below, where element
/// multiplicities grow exponentially but values stay within [0, g + 1].
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) { trim(); }

  static Multiset from_elements(std::initializer_list<int> elems) {
    Multiset m;
    for (int v : elems) m.add(v);
    return m;
  }

  std::uint64_t count_of(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= counts_.size()) return 0;
    return counts_[static_cast<std::size_t>(v)];
  }

  void add(int v, std::uint64_t k = 1) {
    if (v < 0) throw std::invalid_argument("Multiset::add: negative value");
    if (static_cast<std::size_t>(v) >= counts_.size()) counts_.resize(static_cast<std::size_t>(v) + 1, 0);
    counts_[static_cast<std::size_t>(v)] = checked_add(counts_[static_cast<std::size_t>(v)], k);
  }

  /// Removing an absent element is a logic error in the recursions, so it
  /// throws instead of saturating at zero.
  void remove_one(int v) {
    if (count_of(v) == 0)
      throw std::logic_error("Multiset::remove_one: value " + std::to_string(v) + " absent");
    --counts_[static_cast<std::size_t>(v)];
    trim();
  }

  std::uint64_t cardinality() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts_) total = checked_add(total, c);
    return total;
  }

  bool empty() const { return counts_.empty(); }

  int max_value() const {
    if (counts_.empty()) throw std::domain_error("Multiset::max_value: empty multiset");
    return static_cast<int>(counts_.size()) - 1;
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

  /// Element-list rendering with multiplicity, e.g. "{0, 0, 1, 1, 3, 5}".
  /// Only sensible for small multisets.
  std::string to_element_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t v = 0; v < counts_.size(); ++v)
      for (std::uint64_t k = 0; k < counts_[v]; ++k) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
      }
    out += "}";
    return out;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }

 private:
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Multiset: count overflow");
    return r;
  }

  void trim() {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }

  std::vector<std::uint64_t> counts_;
};

/// A_g recursion: A_2 = {1, 3}; A_g = {g+1} u (U_{m in A_{g-1}} {0..m-1}) minus
/// one copy of g-2.  |A_g| = 2*F_g, which drives the lower bound.
inline Multiset multiset_A(int g) {
  if (g < 2) throw std::domain_error("multiset_A: defined for genus >= 2");
  if (g > kMaxMultisetAGenus) throw std::overflow_error("multiset_A: counts exceed 64 bits");
  Multiset cur = Multiset::from_elements({1, 3});
  for (int h = 3; h <= g; ++h) {
    const auto& prev = cur.counts();
    // each m contributes one copy of every value below it:
    // next[v] = sum of prev[m] over m > v
    std::vector<std::uint64_t> next(prev.size() > 0 ? prev.size() - 1 : 0, 0);
    std::uint64_t suffix = 0;
    for (int v = static_cast<int>(next.size()) - 1; v >= 0; --v) {
      std::uint64_t m_count = prev[static_cast<std::size_t>(v) + 1];
      if (__builtin_add_overflow(suffix, m_count, &suffix))
        throw std::overflow_error("multiset_A: counts exceed 64 bits");
      next[static_cast<std::size_t>(v)] = suffix;
    }
    Multiset ms{std::move(next)};
    ms.add(h + 1);
    ms.remove_one(h - 2);
    cur = std::move(ms);
  }
  return cur;
}

/// Closed form of A_g: 2*F_{g-2-v} copies of each v in [0, g-3], plus one copy
/// each of g-1 and g+1.
inline Multiset multiset_A_closed_form(int g) {
  if (g < 2) throw std::domain_error("multiset_A_closed_form: defined for genus >= 2");
  if (g > kMaxMultisetAGenus) throw std::overflow_error("multiset_A_closed_form: counts exceed 64 bits");
  Multiset m;
  for (int v = 0; v <= g - 3; ++v) m.add(v, 2 * fibonacci(g - 2 - v));
  m.add(g - 1);
  m.add(g + 1);
  return m;
}

/// B_g recursion: B_2 = {1, 3}; B_g = {0, g+1} u (U_{m in B_{g-1}} {1..m})
/// minus one copy each of g and g-2.  |B_g| = 1 + 3*2^(g-3) for g >= 3, which
/// drives the upper bound.
inline Multiset multiset_B(int g) {
  if (g < 2) throw std::domain_error("multiset_B: defined for genus >= 2");
  if (g > kMaxMultisetBGenus) throw std::overflow_error("multiset_B: counts exceed 64 bits");
  Multiset cur = Multiset::from_elements({1, 3});
  for (int h = 3; h <= g; ++h) {
    const auto& prev = cur.counts();
    // each m >= 1 contributes one copy of every value in [1, m]:
    // next[v] = sum of prev[m] over m >= v, for v >= 1
    std::vector<std::uint64_t> next(prev.size(), 0);
    std::uint64_t suffix = 0;
    for (int v = static_cast<int>(prev.size()) - 1; v >= 1; --v) {
      if (__builtin_add_overflow(suffix, prev[static_cast<std::size_t>(v)], &suffix))
        throw std::overflow_error("multiset_B: counts exceed 64 bits");
      next[static_cast<std::size_t>(v)] = suffix;
    }
    Multiset ms{std::move(next)};
    ms.add(0);
    ms.add(h + 1);
    ms.remove_one(h);
    ms.remove_one(h - 2);
    cur = std::move(ms);
  }
  return cur;
}

}  // namespace nsg
