#include "schemeforge/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace schemeforge {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_pair: return "BadPair";
    case errc::not_partition: return "NotPartition";
    case errc::not_transpose_closed: return "NotTransposeClosed";
    case errc::non_constant_intersection: return "NonConstantIntersection";
    case errc::identity_violation: return "IdentityViolation";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_strongly_connected: return "NotStronglyConnected";
    case errc::not_a_partition: return "NotAPartition";
    case errc::unequal_block_sizes: return "UnequalBlockSizes";
    case errc::not_closed: return "NotClosed";
    case errc::not_nested: return "NotNested";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_spec: return "BadSpec";
    case errc::bad_range: return "BadRange";
    case errc::unknown_name: return "UnknownName";
    case errc::bad_params: return "BadParams";
    case errc::input_error: return "InputError";
    case errc::usage_error: return "UsageError";
    case errc::overflow: return "Overflow";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

int g_thread_cap = 1;

std::string pair_str(std::pair<int, int> p) {
  std::ostringstream os;
  os << "(" << p.first << "," << p.second << ")";
  return os.str();
}

}  // namespace

void set_thread_cap(int threads) { g_thread_cap = std::max(1, threads); }
int thread_cap() { return g_thread_cap; }

// Splits rows 0..n-1 across workers; fn(x) must only write state owned by
// row x. Serial when the cap is 1.
static void for_each_row(int n, const std::function<void(int)>& fn) {
  int workers = std::min(g_thread_cap, n);
  if (workers <= 1) {
    for (int x = 0; x < n; ++x) fn(x);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int x = next.fetch_add(1); x < n; x = next.fetch_add(1)) fn(x);
    });
  }
  for (auto& th : pool) th.join();
}

scheme build_scheme(int n, const std::vector<pair_list>& relations, std::string name) {
  if (n < 1 || n > max_points)
    fail(errc::bad_range, "point count " + std::to_string(n) + " outside 1.." +
                              std::to_string(max_points));
  scheme s;
  s.n = n;
  s.d = static_cast<int>(relations.size());
  s.name = std::move(name);

  // Ownership map decides partition validity: every off-diagonal pair exactly
  // once, diagonal reserved for R_0.
  s.owner.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) s.owner[static_cast<std::size_t>(x) * n + x] = 0;

  for (int i = 1; i <= s.d; ++i) {
    for (auto [x, y] : relations[static_cast<std::size_t>(i) - 1]) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        fail(errc::bad_pair, "relation " + std::to_string(i) + ": pair " + pair_str({x, y}) +
                                 " out of range");
      if (x == y)
        fail(errc::bad_pair, "relation " + std::to_string(i) + ": loop at " + std::to_string(x));
      int& slot = s.owner[static_cast<std::size_t>(x) * n + y];
      if (slot != -1)
        fail(errc::not_partition, "pair " + pair_str({x, y}) + " in relation " +
                                      std::to_string(slot) + " and relation " + std::to_string(i));
      slot = i;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.owner[static_cast<std::size_t>(x) * n + y] == -1)
        fail(errc::not_partition, "pair " + pair_str({x, y}) + " not covered by any relation");

  s.rel.assign(static_cast<std::size_t>(s.d) + 1, bit_matrix(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s.rel[static_cast<std::size_t>(s.rel_of(x, y))].set(x, y);

  // Transpose closure fixes the star involution.
  s.star.assign(static_cast<std::size_t>(s.d) + 1, -1);
  for (int i = 0; i <= s.d; ++i) {
    bit_matrix t = s.rel[static_cast<std::size_t>(i)].transposed();
    for (int j = 0; j <= s.d; ++j) {
      if (t == s.rel[static_cast<std::size_t>(j)]) {
        s.star[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (s.star[static_cast<std::size_t>(i)] == -1)
      fail(errc::not_transpose_closed,
           "transpose of relation " + std::to_string(i) + " is not a relation");
  }

  // Tensor from one representative pair per h (reading order), then checked
  // for constancy over every pair of X x X. No sampling.
  std::vector<std::pair<int, int>> rep(static_cast<std::size_t>(s.d) + 1, {-1, -1});
  int found = 0;
  for (int x = 0; x < n && found <= s.d; ++x) {
    for (int y = 0; y < n && found <= s.d; ++y) {
      int h = s.rel_of(x, y);
      if (rep[static_cast<std::size_t>(h)].first == -1) {
        rep[static_cast<std::size_t>(h)] = {x, y};
        ++found;
      }
    }
  }

  int m = s.d + 1;
  s.p = tensor3(m);
  for (int h = 0; h < m; ++h) {
    auto [x, y] = rep[static_cast<std::size_t>(h)];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        s.p.at(i, j, h) =
            and_popcount(s.rel[static_cast<std::size_t>(i)], x,
                         s.rel[static_cast<std::size_t>(s.star[static_cast<std::size_t>(j)])], y);
  }

  // Row-parallel verification; the lexicographically first violation (by row,
  // then column, then i, j) wins so the witness is schedule-independent.
  std::vector<std::optional<nonconstant_witness>> row_witness(static_cast<std::size_t>(n));
  for_each_row(n, [&](int x) {
    for (int y = 0; y < n; ++y) {
      int h = s.rel_of(x, y);
      for (int i = 0; i < m && !row_witness[static_cast<std::size_t>(x)]; ++i) {
        for (int j = 0; j < m; ++j) {
          long long c = and_popcount(
              s.rel[static_cast<std::size_t>(i)], x,
              s.rel[static_cast<std::size_t>(s.star[static_cast<std::size_t>(j)])], y);
          if (c != s.p.at(i, j, h)) {
            row_witness[static_cast<std::size_t>(x)] =
                nonconstant_witness{i, j, h, rep[static_cast<std::size_t>(h)], {x, y},
                                    s.p.at(i, j, h), c};
            break;
          }
        }
      }
      if (row_witness[static_cast<std::size_t>(x)]) break;
    }
  });
  for (int x = 0; x < n; ++x) {
    if (row_witness[static_cast<std::size_t>(x)]) {
      const auto& w = *row_witness[static_cast<std::size_t>(x)];
      std::ostringstream os;
      os << "p(" << w.i << "," << w.j << "," << w.h << ") is " << w.count_a << " at "
         << pair_str(w.pair_a) << " but " << w.count_b << " at " << pair_str(w.pair_b);
      throw error(errc::non_constant_intersection, os.str(), w);
    }
  }

  s.k.assign(static_cast<std::size_t>(m), 0);
  std::int64_t total = 0;
  for (int i = 0; i < m; ++i) {
    s.k[static_cast<std::size_t>(i)] = s.p.at(i, s.star[static_cast<std::size_t>(i)], 0);
    total = add_ck(total, s.k[static_cast<std::size_t>(i)]);
  }
  if (total != n) fail(errc::internal, "valencies do not sum to the point count");
  return s;
}

identity_report verify_identities(const scheme& s) {
  identity_report rep;
  int m = s.d + 1;
  const auto& k = s.k;
  auto add = [&rep](const std::string& id, std::initializer_list<std::int64_t> idx) {
    rep.violations.push_back({id, std::vector<std::int64_t>(idx)});
  };

  // (k_i)(k_j) = sum_h p(i,j,h) k_h
  rep.checked.push_back("valency_product");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::int64_t lhs = mul_ck(k[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(j)]);
      std::int64_t rhs = 0;
      for (int h = 0; h < m; ++h)
        rhs = add_ck(rhs, mul_ck(s.p.at(i, j, h), k[static_cast<std::size_t>(h)]));
      if (lhs != rhs) add("valency_product", {i, j});
    }

  // p(i,j,h) k_h = p(h,j*,i) k_i = p(i*,h,j) k_j
  rep.checked.push_back("valency_transport");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int h = 0; h < m; ++h) {
        std::int64_t a = mul_ck(s.p.at(i, j, h), k[static_cast<std::size_t>(h)]);
        std::int64_t b = mul_ck(s.p.at(h, s.star[static_cast<std::size_t>(j)], i),
                                k[static_cast<std::size_t>(i)]);
        std::int64_t c = mul_ck(s.p.at(s.star[static_cast<std::size_t>(i)], h, j),
                                k[static_cast<std::size_t>(j)]);
        if (a != b || a != c) add("valency_transport", {i, j, h});
      }

  // sum_j p(i,j,h) = k_i
  rep.checked.push_back("row_sum");
  for (int i = 0; i < m; ++i)
    for (int h = 0; h < m; ++h) {
      std::int64_t sum = 0;
      for (int j = 0; j < m; ++j) sum = add_ck(sum, s.p.at(i, j, h));
      if (sum != k[static_cast<std::size_t>(i)]) add("row_sum", {i, h});
    }

  // sum_r p(e,l,r) p(m,r,h) = sum_t p(m,e,t) p(t,l,h)
  rep.checked.push_back("composition_assoc");
  for (int e = 0; e < m; ++e)
    for (int l = 0; l < m; ++l)
      for (int mm = 0; mm < m; ++mm)
        for (int h = 0; h < m; ++h) {
          std::int64_t lhs = 0, rhs = 0;
          for (int r = 0; r < m; ++r)
            lhs = add_ck(lhs, mul_ck(s.p.at(e, l, r), s.p.at(mm, r, h)));
          for (int t = 0; t < m; ++t)
            rhs = add_ck(rhs, mul_ck(s.p.at(mm, e, t), s.p.at(t, l, h)));
          if (lhs != rhs) add("composition_assoc", {e, l, mm, h});
        }

  // Entrywise: (A_i A_j)(x,y) = p(i,j,rel(x,y)) over all of X x X. At most
  // one witness per (i,j).
  rep.checked.push_back("table_product");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool bad = false;
      for (int x = 0; x < s.n && !bad; ++x)
        for (int y = 0; y < s.n; ++y) {
          long long c = and_popcount(
              s.rel[static_cast<std::size_t>(i)], x,
              s.rel[static_cast<std::size_t>(s.star[static_cast<std::size_t>(j)])], y);
          if (c != s.p.at(i, j, s.rel_of(x, y))) {
            add("table_product", {i, j, x, y});
            bad = true;
            break;
          }
        }
    }

  return rep;
}

relation_profile_t relation_profile(const scheme& s) {
  relation_profile_t r;
  r.star = s.star;
  r.symmetric.assign(static_cast<std::size_t>(s.d) + 1, false);
  for (int i = 0; i <= s.d; ++i) {
    r.symmetric[static_cast<std::size_t>(i)] = (s.star[static_cast<std::size_t>(i)] == i);
    if (s.star[static_cast<std::size_t>(i)] > i) ++r.nonsymmetric_pairs;
  }
  r.commutative = true;
  int m = s.d + 1;
  for (int i = 0; i < m && r.commutative; ++i)
    for (int j = 0; j < m && r.commutative; ++j)
      for (int h = 0; h < m; ++h)
        if (s.p.at(i, j, h) != s.p.at(j, i, h)) {
          r.commutative = false;
          break;
        }
  return r;
}

scheme relabel_scheme(const scheme& s, const std::vector<int>& perm) {
  int m = s.d + 1;
  if (static_cast<int>(perm.size()) != m || perm[0] != 0)
    fail(errc::bad_params, "relabeling must be a permutation fixing 0");
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (int v : perm) {
    if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]++)
      fail(errc::bad_params, "relabeling must be a permutation fixing 0");
  }

  scheme t;
  t.n = s.n;
  t.d = s.d;
  t.name = s.name;
  t.provenance = s.provenance;
  t.rel.assign(static_cast<std::size_t>(m), bit_matrix());
  t.star.assign(static_cast<std::size_t>(m), 0);
  t.k.assign(static_cast<std::size_t>(m), 0);
  t.p = tensor3(m);
  t.owner.assign(s.owner.size(), 0);
  for (int i = 0; i < m; ++i) {
    t.rel[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        s.rel[static_cast<std::size_t>(i)];
    t.star[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        perm[static_cast<std::size_t>(s.star[static_cast<std::size_t>(i)])];
    t.k[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        s.k[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int h = 0; h < m; ++h)
        t.p.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
               perm[static_cast<std::size_t>(h)]) = s.p.at(i, j, h);
  for (std::size_t q = 0; q < s.owner.size(); ++q)
    t.owner[q] = perm[static_cast<std::size_t>(s.owner[q])];
  return t;
}

bool scheme_equal(const scheme& a, const scheme& b) {
  return a.n == b.n && a.d == b.d && a.owner == b.owner && a.p == b.p;
}

pair_list relation_pairs(const scheme& s, int i) {
  if (i < 0 || i > s.d) fail(errc::index_out_of_range, "relation index " + std::to_string(i));
  pair_list out;
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (s.rel_of(x, y) == i) out.emplace_back(x, y);
  return out;
}

}  // namespace schemeforge
