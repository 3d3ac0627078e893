#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace schemeforge {

// Dense n x n bit table, row-major, ceil(n/64) words per row. Trailing bits
// of the last word in each row stay zero.
struct bit_matrix {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> w;

  bit_matrix() = default;
  explicit bit_matrix(int n_)
      : n(n_), words((n_ + 63) / 64), w(static_cast<std::size_t>(n_) * ((n_ + 63) / 64), 0) {}

  const std::uint64_t* row(int x) const { return w.data() + static_cast<std::size_t>(x) * words; }
  std::uint64_t* row(int x) { return w.data() + static_cast<std::size_t>(x) * words; }

  bool get(int x, int y) const {
    return (row(x)[static_cast<unsigned>(y) >> 6] >> (y & 63)) & 1u;
  }
  void set(int x, int y) { row(x)[static_cast<unsigned>(y) >> 6] |= std::uint64_t(1) << (y & 63); }

  bool operator==(const bit_matrix&) const = default;

  bit_matrix transposed() const {
    bit_matrix t(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (get(x, y)) t.set(y, x);
    return t;
  }

  long long count() const {
    long long c = 0;
    for (std::uint64_t word : w) c += std::popcount(word);
    return c;
  }

  long long row_count(int x) const {
    long long c = 0;
    const std::uint64_t* r = row(x);
    for (int t = 0; t < words; ++t) c += std::popcount(r[t]);
    return c;
  }
};

// |row a of A  ∩  row b of B|. A and B must share n.
inline long long and_popcount(const bit_matrix& A, int a, const bit_matrix& B, int b) {
  const std::uint64_t* ra = A.row(a);
  const std::uint64_t* rb = B.row(b);
  long long c = 0;
  for (int t = 0; t < A.words; ++t) c += std::popcount(ra[t] & rb[t]);
  return c;
}

}  // namespace schemeforge
