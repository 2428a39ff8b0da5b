#pragma once

#include <cstdint>
#include <span>

namespace nsg {

/// One row of the published census for genus 0..30.  `lower` is the doubled
/// Fibonacci number 2*F_g (blank below g = 2), `n` the semigroup count
/// (OEIS A007323), `upper` the closed form 1 + 3*2^(g-3) (blank below g = 3)
/// and `catalan` the Catalan number C_g (OEIS A000108).  -1 marks a blank.
struct ReferenceRow {
  int g;
  std::int64_t lower;
  std::int64_t n;
  std::int64_t upper;
  std::int64_t catalan;
};

inline std::span<const ReferenceRow> reference_table() {
  static constexpr ReferenceRow rows[] = {
      {0, -1, 1, -1, 1},
      {1, -1, 1, -1, 1},
      {2, 2, 2, -1, 2},
      {3, 4, 4, 4, 5},
      {4, 6, 7, 7, 14},
      {5, 10, 12, 13, 42},
      {6, 16, 23, 25, 132},
      {7, 26, 39, 49, 429},
      {8, 42, 67, 97, 1430},
      {9, 68, 118, 193, 4862},
      {10, 110, 204, 385, 16796},
      {11, 178, 343, 769, 58786},
      {12, 288, 592, 1537, 208012},
      {13, 466, 1001, 3073, 742900},
      {14, 754, 1693, 6145, 2674440},
      {15, 1220, 2857, 12289, 9694845},
      {16, 1974, 4806, 24577, 35357670},
      {17, 3194, 8045, 49153, 129644790},
      {18, 5168, 13467, 98305, 477638700},
      {19, 8362, 22464, 196609, 1767263190},
      {20, 13530, 37396, 393217, 6564120420},
      {21, 21892, 62194, 786433, 24466267020},
      {22, 35422, 103246, 1572865, 91482563640},
      {23, 57314, 170963, 3145729, 343059613650},
      {24, 92736, 282828, 6291457, 1289904147324},
      {25, 150050, 467224, 12582913, 4861946401452},
      {26, 242786, 770832, 25165825, 18367353072152},
      {27, 392836, 1270267, 50331649, 69533550916004},
      {28, 635622, 2091030, 100663297, 263747951750360},
      {29, 1028458, 3437839, 201326593, 1002242216651368},
      {30, 1664080, 5646773, 402653185, 3814986502092304},
  };
  return rows;
}

/// Published counts n_g for genus 0..30 (OEIS A007323).
inline std::uint64_t reference_count(int g) {
  return static_cast<std::uint64_t>(reference_table()[static_cast<std::size_t>(g)].n);
}

}  // namespace nsg
