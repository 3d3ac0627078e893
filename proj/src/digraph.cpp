#include "schemeforge/digraph.hpp"

#include <algorithm>
#include <string>

namespace schemeforge {

digraph make_digraph(int n, const pair_list& arcs) {
  if (n < 1 || n > max_points)
    fail(errc::bad_range,
         "point count " + std::to_string(n) + " outside 1.." + std::to_string(max_points));
  digraph g(n);
  for (auto [x, y] : arcs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(errc::bad_pair, "arc (" + std::to_string(x) + "," + std::to_string(y) +
                               ") out of range");
    if (x == y) fail(errc::bad_pair, "loop at " + std::to_string(x));
    g.arcs.set(x, y);
  }
  return g;
}

pair_list arc_pairs(const digraph& g) {
  pair_list out;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (g.arcs.get(x, y)) out.emplace_back(x, y);
  return out;
}

long long arc_count(const digraph& g) { return g.arcs.count(); }

digraph arc_union(const scheme& s, const std::vector<int>& idxs) {
  if (idxs.empty()) fail(errc::index_out_of_range, "arc set needs at least one relation");
  digraph g(s.n);
  for (int i : idxs) {
    if (i < 1 || i > s.d)
      fail(errc::index_out_of_range, "relation index " + std::to_string(i) + " outside 1.." +
                                         std::to_string(s.d));
    const bit_matrix& r = s.rel[static_cast<std::size_t>(i)];
    for (std::size_t w = 0; w < g.arcs.w.size(); ++w) g.arcs.w[w] |= r.w[w];
  }
  return g;
}

// Bit-frontier BFS from each source.
digraph_profile profile(const digraph& g) {
  digraph_profile p;
  p.n = g.n;
  p.dist.assign(static_cast<std::size_t>(g.n) * g.n, unreachable);
  int words = g.arcs.words;

  std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words));
  std::vector<std::uint64_t> visited(static_cast<std::size_t>(words));
  std::vector<std::uint64_t> next(static_cast<std::size_t>(words));

  p.strongly_connected = true;
  p.diameter = 0;
  for (int src = 0; src < g.n; ++src) {
    std::fill(frontier.begin(), frontier.end(), 0);
    std::fill(visited.begin(), visited.end(), 0);
    frontier[static_cast<unsigned>(src) >> 6] = std::uint64_t(1) << (src & 63);
    visited = frontier;
    int* drow = p.dist.data() + static_cast<std::size_t>(src) * g.n;
    drow[src] = 0;
    int depth = 0;
    bool more = true;
    while (more) {
      ++depth;
      std::fill(next.begin(), next.end(), 0);
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[static_cast<std::size_t>(w)];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* row = g.arcs.row(v);
          for (int t = 0; t < words; ++t) next[static_cast<std::size_t>(t)] |= row[t];
        }
      }
      more = false;
      for (int w = 0; w < words; ++w) {
        std::uint64_t fresh = next[static_cast<std::size_t>(w)] & ~visited[static_cast<std::size_t>(w)];
        next[static_cast<std::size_t>(w)] = fresh;
        visited[static_cast<std::size_t>(w)] |= fresh;
        if (fresh) more = true;
        while (fresh) {
          int v = w * 64 + std::countr_zero(fresh);
          fresh &= fresh - 1;
          drow[v] = depth;
        }
      }
      frontier = next;
    }
    for (int v = 0; v < g.n; ++v) {
      if (drow[v] == unreachable)
        p.strongly_connected = false;
      else
        p.diameter = std::max(p.diameter, drow[v]);
    }
  }

  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (g.arcs.get(x, y) && p.at(y, x) != unreachable) {
        int c = p.at(y, x) + 1;
        if (!p.girth || c < *p.girth) p.girth = c;
      }
  return p;
}

two_way_cells two_way_partition(const digraph& g) {
  digraph_profile p = profile(g);
  if (!p.strongly_connected) {
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y)
        if (p.at(x, y) == unreachable)
          fail(errc::not_strongly_connected, "no path from " + std::to_string(x) + " to " +
                                                 std::to_string(y));
  }
  two_way_cells cells;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) cells[{p.at(x, y), p.at(y, x)}].emplace_back(x, y);
  return cells;
}

digraph transpose(const digraph& g) {
  digraph t(g.n);
  t.arcs = g.arcs.transposed();
  return t;
}

digraph lexicographic_product(const digraph& outer, const digraph& inner) {
  long long n = static_cast<long long>(outer.n) * inner.n;
  if (n > max_points)
    fail(errc::bad_range, "product on " + std::to_string(n) + " points exceeds " +
                              std::to_string(max_points));
  digraph g(static_cast<int>(n));
  for (int u = 0; u < outer.n; ++u)
    for (int v = 0; v < inner.n; ++v) {
      int a = u * inner.n + v;
      for (int u2 = 0; u2 < outer.n; ++u2)
        for (int v2 = 0; v2 < inner.n; ++v2) {
          int b = u2 * inner.n + v2;
          if (outer.arcs.get(u, u2) || (u == u2 && inner.arcs.get(v, v2))) g.arcs.set(a, b);
        }
    }
  return g;
}

// block_of[v] for a claimed partition; rejects overlap, out-of-range and
// uncovered points.
static std::vector<int> block_index(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(errc::not_a_partition, "empty block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= n)
        fail(errc::not_a_partition, "point " + std::to_string(v) + " out of range");
      if (block_of[static_cast<std::size_t>(v)] != -1)
        fail(errc::not_a_partition, "point " + std::to_string(v) + " in two blocks");
      block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[static_cast<std::size_t>(v)] == -1)
      fail(errc::not_a_partition, "point " + std::to_string(v) + " not covered");
  return block_of;
}

digraph quotient_digraph(const digraph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of = block_index(g.n, blocks);
  digraph q(static_cast<int>(blocks.size()));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (g.arcs.get(x, y)) {
        int bx = block_of[static_cast<std::size_t>(x)];
        int by = block_of[static_cast<std::size_t>(y)];
        if (bx != by) q.arcs.set(bx, by);
      }
  return q;
}

std::optional<std::pair<digraph, digraph>> lex_decompose(
    const digraph& g, const std::vector<std::vector<int>>& blocks) {
  block_index(g.n, blocks);  // partition validity
  std::size_t m = blocks[0].size();
  for (const auto& b : blocks)
    if (b.size() != m) fail(errc::unequal_block_sizes, "blocks differ in size");

  digraph quotient = quotient_digraph(g, blocks);
  digraph inner(static_cast<int>(m));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      if (s != t && g.arcs.get(blocks[0][s], blocks[0][t]))
        inner.arcs.set(static_cast<int>(s), static_cast<int>(t));

  // Arc-for-arc equality with the product rebuilt under the block ordering.
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t c = 0; c < blocks.size(); ++c)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          int x = blocks[b][s];
          int y = blocks[c][t];
          if (x == y) continue;
          bool want = quotient.arcs.get(static_cast<int>(b), static_cast<int>(c)) ||
                      (b == c && inner.arcs.get(static_cast<int>(s), static_cast<int>(t)));
          if (g.arcs.get(x, y) != want) return std::nullopt;
        }
  return std::make_pair(std::move(quotient), std::move(inner));
}

}  // namespace schemeforge
