#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace schemeforge {

// Machine-checkable failure codes. Input-shaped problems map to CLI exit 2,
// property failures (identity violations, crosscheck differences) to exit 1.
enum class errc {
  bad_pair,
  not_partition,
  not_transpose_closed,
  non_constant_intersection,
  identity_violation,
  index_out_of_range,
  not_strongly_connected,
  not_a_partition,
  unequal_block_sizes,
  not_closed,
  not_nested,
  size_mismatch,
  precondition_violated,
  bad_spec,
  bad_range,
  unknown_name,
  bad_params,
  input_error,
  usage_error,
  overflow,
  internal,
};

const char* errc_name(errc c);

// Counting disagreement between two pairs of the same relation: the pair
// counts |R_i(x) ∩ R_{j*}(y)| differ, so axiom (4) fails at (i, j, h).
struct nonconstant_witness {
  int i = 0, j = 0, h = 0;
  std::pair<int, int> pair_a;  // representative pair of R_h
  std::pair<int, int> pair_b;  // disagreeing pair
  std::int64_t count_a = 0, count_b = 0;
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
  error(errc c, const std::string& what, nonconstant_witness w)
      : std::runtime_error(what), code(c), witness(std::move(w)) {}

  errc code;
  std::optional<nonconstant_witness> witness;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

// 64-bit arithmetic with overflow detection; intersection-number algebra must
// never wrap silently.
inline std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "64-bit multiply overflow");
  return r;
}

inline std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "64-bit add overflow");
  return r;
}

}  // namespace schemeforge
