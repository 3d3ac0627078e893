#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schemeforge/scheme.hpp"

namespace schemeforge {

inline constexpr int unreachable = -1;

// Finite digraph on points 0..n-1; arcs are irreflexive. An undirected graph
// is the special case of a symmetric arc set.
struct digraph {
  int n = 0;
  bit_matrix arcs;

  digraph() = default;
  explicit digraph(int n_) : n(n_), arcs(n_) {}
};

digraph make_digraph(int n, const pair_list& arcs);
pair_list arc_pairs(const digraph& g);  // sorted
long long arc_count(const digraph& g);

// Arc set = union of the named scheme relations. Indices must be a nonempty
// subset of 1..d (the diagonal is never an arc set).
digraph arc_union(const scheme& s, const std::vector<int>& idxs);

struct digraph_profile {
  int n = 0;
  std::vector<int> dist;  // n*n, row-major, unreachable = -1
  bool strongly_connected = false;
  int diameter = 0;          // max finite distance
  std::optional<int> girth;  // min over arcs (u,v) of dist(v,u)+1; empty if no circuit

  int at(int x, int y) const { return dist[static_cast<std::size_t>(x) * n + y]; }
};
digraph_profile profile(const digraph& g);

// Cells of the two-sided distance map (dist(x,y), dist(y,x)) over ordered
// pairs, keyed lexicographically; (0,0) is the diagonal. Requires strong
// connectivity (errc::not_strongly_connected).
using two_way_cells = std::map<std::pair<int, int>, pair_list>;
two_way_cells two_way_partition(const digraph& g);

digraph transpose(const digraph& g);

// Vertex (u,v) -> u*inner.n + v (outer-major). Arc (u,v)->(u',v') iff u->u'
// in outer, or u == u' and v->v' in inner.
digraph lexicographic_product(const digraph& outer, const digraph& inner);

// Blocks must partition 0..n-1 (errc::not_a_partition). Quotient arc B->C for
// B != C iff some arc leaves B for C; arcs inside a block are dropped, keeping
// the quotient irreflexive.
digraph quotient_digraph(const digraph& g, const std::vector<std::vector<int>>& blocks);

// Succeeds iff g is exactly lexicographic_product(quotient, inner) under the
// given block ordering (vertex (block b, position t) = blocks[b][t]); in
// particular every block induces the same inner digraph. Blocks must have
// equal sizes (errc::unequal_block_sizes).
std::optional<std::pair<digraph, digraph>> lex_decompose(
    const digraph& g, const std::vector<std::vector<int>>& blocks);

}  // namespace schemeforge
