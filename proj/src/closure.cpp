#include "schemeforge/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace schemeforge {

namespace {

void check_indices(const scheme& s, const std::vector<int>& idx, const char* what) {
  for (int i : idx)
    if (i < 0 || i > s.d)
      fail(errc::index_out_of_range,
           std::string(what) + ": relation index " + std::to_string(i) + " outside 0.." +
               std::to_string(s.d));
}

// Fibers of a union-closed relation set: block of x = {y : rel(x,y) in S}.
// For closed S the blocks partition the points; ordered by least element.
std::vector<std::vector<int>> fibers_of(const scheme& s, const std::vector<int>& indices) {
  std::vector<bool> member(static_cast<std::size_t>(s.d) + 1, false);
  for (int i : indices) member[static_cast<std::size_t>(i)] = true;
  std::vector<int> block_of(static_cast<std::size_t>(s.n), -1);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < s.n; ++x) {
    if (block_of[static_cast<std::size_t>(x)] != -1) continue;
    std::vector<int> blk;
    for (int y = 0; y < s.n; ++y)
      if (member[static_cast<std::size_t>(s.rel_of(x, y))]) {
        blk.push_back(y);
        block_of[static_cast<std::size_t>(y)] = static_cast<int>(blocks.size());
      }
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

scheme one_class(int m) {
  pair_list pairs;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y) pairs.emplace_back(x, y);
  return build_scheme(m, {pairs});
}

}  // namespace

std::vector<int> complex_product(const scheme& s, const std::vector<int>& E,
                                 const std::vector<int>& F) {
  check_indices(s, E, "complex product");
  check_indices(s, F, "complex product");
  std::set<int> out;
  for (int i : E)
    for (int j : F)
      for (int h = 0; h <= s.d; ++h)
        if (s.p.at(i, j, h) > 0) out.insert(h);
  return {out.begin(), out.end()};
}

bool is_closed(const scheme& s, const std::vector<int>& indices) {
  check_indices(s, indices, "closed subset");
  std::vector<bool> in(static_cast<std::size_t>(s.d) + 1, false);
  for (int i : indices) in[static_cast<std::size_t>(i)] = true;
  if (!in[0]) return false;
  for (int i : indices) {
    if (!in[static_cast<std::size_t>(s.star[static_cast<std::size_t>(i)])]) return false;
    for (int j : indices)
      for (int h = 0; h <= s.d; ++h)
        if (s.p.at(i, j, h) > 0 && !in[static_cast<std::size_t>(h)]) return false;
  }
  return true;
}

closed_subset closure(const scheme& s, const std::vector<int>& K) {
  check_indices(s, K, "closure");
  std::set<int> cur(K.begin(), K.end());
  cur.insert(0);
  for (;;) {
    std::set<int> next = cur;
    for (int i : cur) next.insert(s.star[static_cast<std::size_t>(i)]);
    std::vector<int> v(cur.begin(), cur.end());
    for (int h : complex_product(s, v, v)) next.insert(h);
    if (next == cur) break;
    cur.swap(next);
  }
  closed_subset out;
  out.indices.assign(cur.begin(), cur.end());
  out.fibers = fibers_of(s, out.indices);
  return out;
}

closed_subset as_closed_subset(const scheme& s, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!is_closed(s, indices)) fail(errc::not_closed, "index set is not closed");
  closed_subset out;
  out.indices = std::move(indices);
  out.fibers = fibers_of(s, out.indices);
  return out;
}

subscheme_result subscheme(const scheme& s, const closed_subset& F, int x) {
  if (!is_closed(s, F.indices)) fail(errc::not_closed, "subscheme needs a closed subset");
  if (x < 0 || x >= s.n) fail(errc::index_out_of_range, "point " + std::to_string(x));

  subscheme_result r;
  for (const auto& blk : F.fibers)
    if (std::find(blk.begin(), blk.end(), x) != blk.end()) {
      r.points = blk;
      break;
    }

  std::vector<int> pos(static_cast<std::size_t>(s.n), -1);
  for (std::size_t t = 0; t < r.points.size(); ++t)
    pos[static_cast<std::size_t>(r.points[t])] = static_cast<int>(t);

  r.to_dense.assign(static_cast<std::size_t>(s.d) + 1, -1);
  for (int f : F.indices) {
    r.to_dense[static_cast<std::size_t>(f)] = static_cast<int>(r.from_dense.size());
    r.from_dense.push_back(f);
  }

  std::vector<pair_list> rels(F.indices.size() - 1);  // dense 1..|F|-1
  for (int a : r.points)
    for (int b : r.points) {
      if (a == b) continue;
      int dense = r.to_dense[static_cast<std::size_t>(s.rel_of(a, b))];
      if (dense < 0)
        fail(errc::internal, "fiber pair escapes the closed subset");  // closed => impossible
      rels[static_cast<std::size_t>(dense) - 1].emplace_back(pos[static_cast<std::size_t>(a)],
                                                             pos[static_cast<std::size_t>(b)]);
    }
  r.sub = build_scheme(static_cast<int>(r.points.size()), rels);
  r.sub.name = s.name.empty() ? "subscheme" : s.name + "-sub";
  r.sub.provenance = "subscheme(point " + std::to_string(x) + ")";
  return r;
}

quotient_result quotient_scheme(const scheme& s, const closed_subset& F) {
  if (!is_closed(s, F.indices)) fail(errc::not_closed, "quotient needs a closed subset");

  quotient_result r;
  r.fibers = F.fibers;
  std::vector<int> block_of(static_cast<std::size_t>(s.n), -1);
  for (std::size_t b = 0; b < r.fibers.size(); ++b)
    for (int v : r.fibers[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);

  // Double cosets F·{i}·F partition the relation set; members of one coset
  // cover the same block pairs.
  r.relation_image.assign(static_cast<std::size_t>(s.d) + 1, -1);
  std::vector<std::vector<int>> cosets;
  for (int i = 0; i <= s.d; ++i) {
    if (r.relation_image[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<int> coset = complex_product(s, F.indices, complex_product(s, {i}, F.indices));
    int id = static_cast<int>(cosets.size());
    for (int h : coset) r.relation_image[static_cast<std::size_t>(h)] = id;
    cosets.push_back(std::move(coset));
  }

  int nb = static_cast<int>(r.fibers.size());
  std::vector<std::set<std::pair<int, int>>> pairs(cosets.size());
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int bx = block_of[static_cast<std::size_t>(x)];
      int by = block_of[static_cast<std::size_t>(y)];
      if (bx != by)
        pairs[static_cast<std::size_t>(r.relation_image[static_cast<std::size_t>(s.rel_of(x, y))])]
            .insert({bx, by});
    }

  std::vector<pair_list> rels;
  std::vector<int> coset_to_rel(cosets.size(), 0);
  for (std::size_t c = 1; c < cosets.size(); ++c) {
    coset_to_rel[c] = static_cast<int>(rels.size()) + 1;
    rels.emplace_back(pairs[c].begin(), pairs[c].end());
  }
  for (int i = 0; i <= s.d; ++i)
    r.relation_image[static_cast<std::size_t>(i)] =
        coset_to_rel[static_cast<std::size_t>(r.relation_image[static_cast<std::size_t>(i)])];

  r.quotient = build_scheme(nb, rels);
  r.quotient.name = s.name.empty() ? "quotient" : s.name + "-mod";
  std::string idx;
  for (int i : F.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
  r.quotient.provenance = "quotient over {" + idx + "}";
  return r;
}

scheme wreath_product(const scheme& inner, const scheme& outer) {
  long long n = static_cast<long long>(inner.n) * outer.n;
  if (n > max_points)
    fail(errc::bad_range, "wreath product on " + std::to_string(n) + " points exceeds " +
                              std::to_string(max_points));
  int ni = inner.n;
  auto id = [ni](int x, int y) { return y * ni + x; };  // fiber = fixed outer point y

  std::vector<pair_list> rels(static_cast<std::size_t>(inner.d + outer.d));
  for (int t = 1; t <= inner.d; ++t) {
    pair_list& out = rels[static_cast<std::size_t>(t) - 1];
    for (int y = 0; y < outer.n; ++y)
      for (int x1 = 0; x1 < ni; ++x1)
        for (int x2 = 0; x2 < ni; ++x2)
          if (inner.rel_of(x1, x2) == t) out.emplace_back(id(x1, y), id(x2, y));
  }
  for (int u = 1; u <= outer.d; ++u) {
    pair_list& out = rels[static_cast<std::size_t>(inner.d + u) - 1];
    for (int y1 = 0; y1 < outer.n; ++y1)
      for (int y2 = 0; y2 < outer.n; ++y2)
        if (outer.rel_of(y1, y2) == u)
          for (int x1 = 0; x1 < ni; ++x1)
            for (int x2 = 0; x2 < ni; ++x2) out.emplace_back(id(x1, y1), id(x2, y2));
  }

  scheme w = build_scheme(static_cast<int>(n), rels);
  std::string a = inner.name.empty() ? "inner" : inner.name;
  std::string b = outer.name.empty() ? "outer" : outer.name;
  w.name = "wreath(" + a + "," + b + ")";
  w.provenance = w.name;
  return w;
}

bool wedge_conditions(const scheme& s, const closed_subset& K, const closed_subset& F) {
  if (!is_closed(s, K.indices)) fail(errc::not_closed, "K is not closed");
  if (!is_closed(s, F.indices)) fail(errc::not_closed, "F is not closed");
  if (!std::includes(F.indices.begin(), F.indices.end(), K.indices.begin(), K.indices.end()))
    fail(errc::not_nested, "K must be contained in F");

  std::vector<bool> inF(static_cast<std::size_t>(s.d) + 1, false);
  for (int i : F.indices) inF[static_cast<std::size_t>(i)] = true;
  std::int64_t weight = 0;
  for (int i : K.indices) weight = add_ck(weight, s.k[static_cast<std::size_t>(i)]);

  // Entrywise, both orders: sum_{i in K} (A_i A_j)(x,y) and
  // sum_{i in K} (A_j A_i)(x,y) must equal weight exactly on R_j, zero off it.
  for (int j = 0; j <= s.d; ++j) {
    if (inF[static_cast<std::size_t>(j)]) continue;
    int js = s.star[static_cast<std::size_t>(j)];
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y) {
        std::int64_t want = s.rel_of(x, y) == j ? weight : 0;
        std::int64_t left = 0, right = 0;
        for (int i : K.indices) {
          left += and_popcount(s.rel[static_cast<std::size_t>(i)], x,
                               s.rel[static_cast<std::size_t>(js)], y);
          right += and_popcount(
              s.rel[static_cast<std::size_t>(j)], x,
              s.rel[static_cast<std::size_t>(s.star[static_cast<std::size_t>(i)])], y);
        }
        if (left != want || right != want) return false;
      }
  }

  // K·{i} = {i}·K for every relation.
  for (int i = 0; i <= s.d; ++i)
    if (complex_product(s, K.indices, {i}) != complex_product(s, {i}, K.indices)) return false;
  return true;
}

std::optional<wreath_split> wreath_decomposition_over(const scheme& s, int a) {
  if (a < 1 || a > s.d) fail(errc::index_out_of_range, "class index " + std::to_string(a));
  closed_subset F = closure(s, {a});
  if (F.indices != std::vector<int>{0, a}) return std::nullopt;

  // Every cross relation must be constant on ordered block pairs.
  std::vector<int> block_of(static_cast<std::size_t>(s.n), -1);
  for (std::size_t b = 0; b < F.fibers.size(); ++b)
    for (int v : F.fibers[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
  int nb = static_cast<int>(F.fibers.size());
  if (nb < 2) return std::nullopt;
  std::vector<int> pair_rel(static_cast<std::size_t>(nb) * nb, -1);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int bx = block_of[static_cast<std::size_t>(x)];
      int by = block_of[static_cast<std::size_t>(y)];
      if (bx == by) continue;
      int& slot = pair_rel[static_cast<std::size_t>(bx) * nb + by];
      int r = s.rel_of(x, y);
      if (slot == -1)
        slot = r;
      else if (slot != r)
        return std::nullopt;
    }

  wreath_split out;
  out.a = a;
  out.fibers = F.fibers;
  quotient_result q = quotient_scheme(s, F);
  out.quotient = q.quotient;

  // Constancy makes every cross double coset a singleton, so the class counts
  // must line up and the wreath of a one-class scheme with the quotient must
  // reproduce the partition point for point. Anything else is a logic bug.
  if (s.d - 1 != out.quotient.d)
    fail(errc::internal, "wreath quotient merged cross relations");
  int m = static_cast<int>(F.fibers[0].size());
  scheme w = wreath_product(one_class(m), out.quotient);
  for (int bx = 0; bx < nb; ++bx)
    for (int by = 0; by < nb; ++by)
      for (int sx = 0; sx < m; ++sx)
        for (int sy = 0; sy < m; ++sy) {
          int x = F.fibers[static_cast<std::size_t>(bx)][static_cast<std::size_t>(sx)];
          int y = F.fibers[static_cast<std::size_t>(by)][static_cast<std::size_t>(sy)];
          int got = s.rel_of(x, y);
          // wreath labels: identity 0, fiber class 1, quotient class c at 1+c
          int expect = got == 0 ? 0
                       : got == a
                           ? 1
                           : 1 + q.relation_image[static_cast<std::size_t>(got)];
          if (w.rel_of(bx * m + sx, by * m + sy) != expect)
            fail(errc::internal, "wreath reconstruction disagrees with the source scheme");
        }
  return out;
}

std::optional<wreath_split> wreath_decomposition(const scheme& s) {
  for (int a = 1; a <= s.d; ++a)
    if (auto w = wreath_decomposition_over(s, a)) return w;
  return std::nullopt;
}

std::vector<std::vector<int>> all_closed_subsets(const scheme& s) {
  if (s.d > 12)
    fail(errc::bad_range, "closed-subset sweep over " + std::to_string(s.d) + " classes");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << s.d); ++mask) {
    std::vector<int> idx{0};
    for (int t = 1; t <= s.d; ++t)
      if (mask & (1u << (t - 1))) idx.push_back(t);
    if (is_closed(s, idx)) out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace schemeforge
