#pragma once

#include <optional>
#include <vector>

#include "schemeforge/scheme.hpp"

namespace schemeforge {

// Closed set of relation indices: contains 0 and is closed under star and
// complex products. Its fibers (blocks of the union of member relations plus
// the diagonal) partition the points; blocks are ascending, ordered by least
// element.
struct closed_subset {
  std::vector<int> indices;
  std::vector<std::vector<int>> fibers;
};

// Indices h with p(i,j,h) > 0 for some i in E, j in F. Sorted.
std::vector<int> complex_product(const scheme& s, const std::vector<int>& E,
                                 const std::vector<int>& F);

// Least closed superset of K: fixpoint of adding 0, stars and complex
// products.
closed_subset closure(const scheme& s, const std::vector<int>& K);

bool is_closed(const scheme& s, const std::vector<int>& indices);

// Wraps an already-closed index set (errc::not_closed otherwise).
closed_subset as_closed_subset(const scheme& s, std::vector<int> indices);

// Scheme induced on the fiber of x: relations are the traces of the members
// of F, densely re-indexed in ascending original order. Revalidated through
// build_scheme.
struct subscheme_result {
  scheme sub;
  std::vector<int> points;      // fiber of x, ascending
  std::vector<int> from_dense;  // dense relation index -> original index
  std::vector<int> to_dense;    // original index -> dense index, -1 if absent
};
subscheme_result subscheme(const scheme& s, const closed_subset& F, int x);

// Quotient modulo F on the fiber blocks: relations are the distinct sets
// {(F(x),F(y)) : rel(x,y) in F·{i}·F}. Rebuilt from scratch and revalidated
// through build_scheme.
struct quotient_result {
  scheme quotient;
  std::vector<std::vector<int>> fibers;
  std::vector<int> relation_image;  // original relation -> quotient relation
};
quotient_result quotient_scheme(const scheme& s, const closed_subset& F);

// Points (x,y) in inner x outer, numbered y*inner.n + x so fibers are
// contiguous. Classes 1..d_inner act inside fibers, classes d_inner+1.. are
// the fiber-blind outer classes. Validated through build_scheme.
scheme wreath_product(const scheme& inner, const scheme& outer);

// Both product identities sum_{i in K} A_i A_j = (sum_{i in K} k_i) A_j =
// sum_{i in K} A_j A_i, entrywise for every relation j outside F, plus
// K·{i} = {i}·K for every i. K and F must be closed (errc::not_closed) and
// nested (errc::not_nested).
bool wedge_conditions(const scheme& s, const closed_subset& K, const closed_subset& F);

// s = wreath(one-class scheme on k_a+1 points, quotient) over the fibers of
// {0,a}: requires closure({a}) = {0,a} and every cross relation constant on
// block pairs. Verified by rebuilding the wreath product and comparing
// partitions point-for-point.
struct wreath_split {
  int a = 0;
  scheme quotient;
  std::vector<std::vector<int>> fibers;
};
std::optional<wreath_split> wreath_decomposition_over(const scheme& s, int a);

// Least index a for which wreath_decomposition_over succeeds.
std::optional<wreath_split> wreath_decomposition(const scheme& s);

// Every closed index set, ascending by bitmask. errc::bad_range for d > 12.
std::vector<std::vector<int>> all_closed_subsets(const scheme& s);

}  // namespace schemeforge
