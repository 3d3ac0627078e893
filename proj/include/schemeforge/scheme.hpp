#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schemeforge/bits.hpp"
#include "schemeforge/error.hpp"

namespace schemeforge {

using pair_list = std::vector<std::pair<int, int>>;

// p(i,j,h) = #{z : (x,z) in R_i and (z,y) in R_j} for any (x,y) in R_h.
struct tensor3 {
  int m = 0;  // d+1
  std::vector<std::int64_t> v;

  tensor3() = default;
  explicit tensor3(int m_) : m(m_), v(static_cast<std::size_t>(m_) * m_ * m_, 0) {}

  std::int64_t& at(int i, int j, int h) {
    return v[(static_cast<std::size_t>(i) * m + j) * m + h];
  }
  std::int64_t at(int i, int j, int h) const {
    return v[(static_cast<std::size_t>(i) * m + j) * m + h];
  }
  bool operator==(const tensor3&) const = default;
};

// Association scheme on points 0..n-1 with relations R_0..R_d. R_0 is the
// diagonal, star(i) indexes the transpose of R_i, k[i] = |R_i(x)| is the
// valency. build_scheme validates every axiom (the intersection tensor is
// checked over all of X x X, never sampled); treat built values as immutable.
// Relation indices are kept exactly as given; canonical relabelings belong to
// the classifier, not to construction.
struct scheme {
  int n = 0;
  int d = 0;
  std::string name;
  std::string provenance;  // set by product/quotient constructions

  std::vector<bit_matrix> rel;  // d+1 tables
  std::vector<int> owner;       // n*n: owner[x*n+y] = relation index of (x,y)
  std::vector<int> star;
  std::vector<std::int64_t> k;
  tensor3 p;

  int rel_of(int x, int y) const { return owner[static_cast<std::size_t>(x) * n + y]; }
};

// Bound for the dense bit-table layout; larger point sets would need a
// different representation and are rejected up front.
inline constexpr int max_points = 2048;

// Thread cap for the all-pairs tensor verification (row-partitioned; the
// result is schedule-independent). Default 1.
void set_thread_cap(int threads);
int thread_cap();

// relations[t] holds the pairs of R_{t+1}; R_0 is implicit. Throws
// errc::bad_pair / not_partition / not_transpose_closed /
// non_constant_intersection (with witness) / bad_range.
scheme build_scheme(int n, const std::vector<pair_list>& relations, std::string name = "");

struct identity_violation {
  std::string identity;
  std::vector<std::int64_t> index;
};

struct identity_report {
  std::vector<std::string> checked;  // identity ids in evaluation order
  std::vector<identity_violation> violations;
  bool pass() const { return violations.empty(); }
};

// Re-derives the valency/intersection-number identities and the entrywise
// incidence-product expansion from the stored tensor. All violations are
// collected (a failure signals a corrupted tensor, unreachable through
// build_scheme).
identity_report verify_identities(const scheme& s);

struct relation_profile_t {
  std::vector<int> star;
  std::vector<bool> symmetric;
  int nonsymmetric_pairs = 0;  // unordered pairs {i, star(i)} with i != star(i)
  bool commutative = false;
};
relation_profile_t relation_profile(const scheme& s);

// perm[old] = new with perm[0] = 0; pure index permutation, no revalidation.
scheme relabel_scheme(const scheme& s, const std::vector<int>& perm);

// Same points, same relation partition with identical indices, same tensor.
bool scheme_equal(const scheme& a, const scheme& b);

pair_list relation_pairs(const scheme& s, int i);  // sorted (x,y)

}  // namespace schemeforge
