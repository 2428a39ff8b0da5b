#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsg {

/// A numerical semigroup: a subset of the non-negative integers that
/// contains 0, is closed under addition and has finitely many gaps.
///
/// Membership is stored as a bit-vector over [0, window]; everything above
/// the window belongs to the semigroup (the window always covers the largest
/// gap).  Values are immutable after construction, so they can be copied
/// into worker threads freely.
class NumericalSemigroup {
 public:
  /// The ordinary semigroup {0} u {i >= genus+1}.  Its gaps are {1..genus}.
  /// window 0 picks the default 3*genus + 3, which is large enough to derive
  /// the generators of direct children.
  static NumericalSemigroup ordinary(int genus, int window = 0) {
    if (genus < 0) throw std::invalid_argument("ordinary: genus must be >= 0");
    if (window == 0) window = 3 * genus + 3;
    if (window < 2 * genus + 1)
      throw std::length_error("ordinary: window must cover frobenius + multiplicity");
    NumericalSemigroup s;
    s.window_ = window;
    s.words_.assign(word_count(window), 0);
    s.set_bit(0);
    for (int i = genus + 1; i <= window; ++i) s.set_bit(i);
    s.genus_ = genus;
    s.frobenius_ = genus >= 1 ? genus : -1;
    s.multiplicity_ = genus + 1;
    s.effective_generators_.reserve(static_cast<std::size_t>(genus) + 1);
    for (int e = genus + 1; e <= 2 * genus + 1; ++e) s.effective_generators_.push_back(e);
    return s;
  }

  /// Builds a semigroup from an explicit gap set.  The complement must be
  /// closed under addition; the first violated pair (a, b) with a + b landing
  /// on a gap is reported otherwise.
  static NumericalSemigroup from_gaps(std::vector<int> gaps, int window = 0) {
    std::sort(gaps.begin(), gaps.end());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] < 1) throw std::invalid_argument("from_gaps: gaps must be positive");
      if (i > 0 && gaps[i] == gaps[i - 1])
        throw std::invalid_argument("from_gaps: duplicate gap " + std::to_string(gaps[i]));
    }
    const int genus = static_cast<int>(gaps.size());
    const int frobenius = gaps.empty() ? -1 : gaps.back();

    // multiplicity: smallest positive non-gap, always within [1, genus+1]
    int multiplicity = 1;
    {
      std::size_t k = 0;
      while (k < gaps.size() && gaps[k] == multiplicity) {
        ++multiplicity;
        ++k;
      }
    }

    if (window == 0) window = 3 * genus + 3;
    if (window < frobenius + multiplicity)
      throw std::length_error("from_gaps: window must cover frobenius + multiplicity");

    NumericalSemigroup s;
    s.window_ = window;
    s.words_.assign(word_count(window), 0);
    for (int i = 0; i <= window; ++i) s.set_bit(i);
    for (int g : gaps) {
      if (g > window) throw std::length_error("from_gaps: gap beyond window");
      s.clear_bit(g);
    }
    s.genus_ = genus;
    s.frobenius_ = frobenius;
    s.multiplicity_ = multiplicity;

    // closure of the complement; scanning pairs in lexicographic order makes
    // the reported violation deterministic
    for (int a = multiplicity; a <= frobenius; ++a) {
      if (!s.test_bit(a)) continue;
      for (int b = a; a + b <= frobenius; ++b) {
        if (s.test_bit(b) && !s.test_bit(a + b))
          throw std::invalid_argument("from_gaps: complement not closed under addition: " +
                                      std::to_string(a) + " + " + std::to_string(b) + " = " +
                                      std::to_string(a + b) + " is a gap");
      }
    }

    s.effective_generators_ = s.scan_effective_generators();
    return s;
  }

  int genus() const { return genus_; }
  int frobenius() const { return frobenius_; }
  int multiplicity() const { return multiplicity_; }
  int window() const { return window_; }

  /// Minimal generators larger than the Frobenius number.  Removing one of
  /// these is exactly the child step of the semigroup tree.
  const std::vector<int>& effective_generators() const { return effective_generators_; }

  bool contains(int n) const {
    if (n < 0) return false;
    if (n > window_) return true;  // window covers every gap
    return test_bit(n);
  }

  /// Gaps in ascending order.
  std::vector<int> gaps() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (int i = 1; i <= frobenius_; ++i)
      if (!test_bit(i)) out.push_back(i);
    return out;
  }

  /// Minimal generators computed from the definition: nonzero elements that
  /// are not the sum of two nonzero elements.  This is the from-scratch scan;
  /// effective_generators() is maintained incrementally along tree edges.
  std::vector<int> minimal_generators() const {
    std::vector<int> out;
    const int hi = std::max(multiplicity_, frobenius_ + multiplicity_);
    for (int v = multiplicity_; v <= hi; ++v) {
      if (!test_bit(v)) continue;
      if (!decomposable(*this, v)) out.push_back(v);
    }
    return out;
  }

  /// Removes an effective generator, producing the child of genus + 1 whose
  /// Frobenius number is the removed element.  The child's effective
  /// generators are derived incrementally: the parent's generators above e
  /// survive, and e + multiplicity is the only possible new one.
  NumericalSemigroup remove_generator(int e) const {
    if (!std::binary_search(effective_generators_.begin(), effective_generators_.end(), e))
      throw std::invalid_argument("remove_generator: " + std::to_string(e) +
                                  " is not an effective generator");
    if (e == multiplicity_) {
      // only possible for an ordinary semigroup with e = genus + 1
      return ordinary(genus_ + 1, window_);
    }
    NumericalSemigroup child;
    child.window_ = window_;
    child.words_ = words_;
    child.clear_bit(e);
    child.genus_ = genus_ + 1;
    child.frobenius_ = e;
    child.multiplicity_ = multiplicity_;

    child.effective_generators_.reserve(effective_generators_.size());
    for (int g : effective_generators_)
      if (g > e) child.effective_generators_.push_back(g);
    const int candidate = e + multiplicity_;
    if (candidate > window_)
      throw std::length_error("remove_generator: window too small to derive child generators");
    if (!decomposable(child, candidate)) child.effective_generators_.push_back(candidate);
    return child;
  }

  /// Gaps are exactly {1..genus}.
  bool is_ordinary() const { return multiplicity_ == genus_ + 1; }

  /// Frobenius number attains the 2*genus - 1 bound.
  bool is_symmetric() const { return genus_ >= 1 && frobenius_ == 2 * genus_ - 1; }

  /// Debug rendering, e.g. "gaps: 1,2,4,7".
  std::string to_string() const {
    std::string out = "gaps:";
    bool first = true;
    for (int g : gaps()) {
      out += first ? " " : ",";
      out += std::to_string(g);
      first = false;
    }
    return out;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.window_ == b.window_ && a.words_ == b.words_;
  }
  friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) {
    return os << s.to_string();
  }

 private:
  NumericalSemigroup() = default;

  static std::size_t word_count(int window) {
    return static_cast<std::size_t>(window) / 64 + 1;
  }
  bool test_bit(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set_bit(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear_bit(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // v = a + b with nonzero members a <= b; only a <= v/2 needs scanning
  static bool decomposable(const NumericalSemigroup& s, int v) {
    for (int a = s.multiplicity_; 2 * a <= v; ++a)
      if (s.test_bit(a) && s.test_bit(v - a)) return true;
    return false;
  }

  std::vector<int> scan_effective_generators() const {
    std::vector<int> out;
    for (int v : minimal_generators())
      if (v > frobenius_) out.push_back(v);
    return out;
  }

  std::vector<std::uint64_t> words_;
  std::vector<int> effective_generators_;
  int window_ = 0;
  int genus_ = 0;
  int frobenius_ = -1;
  int multiplicity_ = 1;
};

}  // namespace nsg
