#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "naive.hpp"
#include "schemeforge/generators.hpp"
#include "schemeforge/scheme.hpp"
#include "support.hpp"

using namespace schemeforge;
using testsupport::throws_code;

namespace {

scheme z3() {
  return build_scheme(3, {{{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}}}, "z3");
}

}  // namespace

TEST_SUITE("scheme_core") {

TEST_CASE("directed triangle scheme: sizes, stars, valencies, tensor entries") {
  scheme s = z3();
  CHECK(s.n == 3);
  CHECK(s.d == 2);
  CHECK(s.star == std::vector<int>{0, 2, 1});
  CHECK(s.k == std::vector<std::int64_t>{1, 1, 1});
  CHECK(s.p.at(1, 1, 2) == 1);
  CHECK(s.p.at(1, 2, 0) == 1);
  CHECK(s.p.at(1, 1, 0) == 0);
  CHECK(s.p.at(1, 1, 1) == 0);
  CHECK(s.p.at(2, 2, 1) == 1);
  CHECK(s.rel_of(0, 1) == 1);
  CHECK(s.rel_of(1, 0) == 2);
  CHECK(s.rel_of(2, 2) == 0);
}

TEST_CASE("stored tensor equals the triple-loop reference on assorted schemes") {
  CHECK(naive::tensor_matches(z3()));
  CHECK(naive::tensor_matches(thin_cyclic(4)));
  CHECK(naive::tensor_matches(thin_cyclic(6)));
  CHECK(naive::tensor_matches(paley_tournament(7)));
  CHECK(naive::tensor_matches(paley_tournament(11)));
  CHECK(naive::tensor_matches(catalog("wreath(thin_cyclic(3), one_class(2))")));
  CHECK(naive::tensor_matches(catalog("wreath(one_class(2), thin_cyclic(3))")));
  for (const scheme& s : enumerate_circulant(8)) CHECK(naive::tensor_matches(s));
}

TEST_CASE("tensor construction is thread-schedule independent") {
  scheme base = paley_tournament(11);
  set_thread_cap(4);
  scheme threaded = paley_tournament(11);
  set_thread_cap(1);
  CHECK(scheme_equal(base, threaded));
  CHECK(base.p == threaded.p);
}

TEST_CASE("construction rejects malformed relation lists") {
  // Loop outside the diagonal relation.
  CHECK(throws_code(errc::bad_pair,
                    [] { build_scheme(3, {{{0, 0}, {1, 2}, {2, 1}, {0, 1}, {1, 0}, {0, 2}, {2, 0}}}); }));
  // Point out of range.
  CHECK(throws_code(errc::bad_pair, [] { build_scheme(2, {{{0, 3}, {1, 0}}}); }));
  // Hole in the partition.
  CHECK(throws_code(errc::not_partition, [] { build_scheme(3, {{{0, 1}, {1, 2}, {2, 0}}}); }));
  // Same pair twice.
  CHECK(throws_code(errc::not_partition, [] {
    build_scheme(3, {{{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}, {0, 1}}});
  }));
  // Transpose of a relation straddles two relations.
  CHECK(throws_code(errc::not_transpose_closed, [] {
    build_scheme(3, {{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}}, {{2, 0}}});
  }));
}

TEST_CASE("non-constant counts are rejected with a consistent witness") {
  // Distance partition of the 3-vertex path: end vertices and the middle
  // vertex disagree on the valency, so axiom checking must fail.
  try {
    build_scheme(3, {{{0, 1}, {1, 0}, {1, 2}, {2, 1}}, {{0, 2}, {2, 0}}});
    FAIL("expected a constancy violation");
  } catch (const error& e) {
    CHECK(e.code == errc::non_constant_intersection);
    REQUIRE(e.witness.has_value());
    const nonconstant_witness& w = *e.witness;
    CHECK(w.count_a != w.count_b);
    CHECK(w.i >= 0);
    CHECK(w.i <= 2);
    CHECK(w.j >= 0);
    CHECK(w.j <= 2);
    CHECK(w.h >= 0);
    CHECK(w.h <= 2);
    CHECK(w.pair_a != w.pair_b);
  }
}

TEST_CASE("identity suite passes on valid schemes and names corrupted entries") {
  scheme s = thin_cyclic(4);
  identity_report good = verify_identities(s);
  CHECK(good.pass());
  CHECK(good.checked == std::vector<std::string>{"valency_product", "valency_transport",
                                                 "row_sum", "composition_assoc",
                                                 "table_product"});

  scheme corrupt = s;
  corrupt.p.at(1, 1, 2) += 1;
  identity_report bad = verify_identities(corrupt);
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.violations.empty());
  bool names_the_entry = false;
  for (const identity_violation& v : bad.violations)
    for (std::size_t t = 0; t + 1 < v.index.size(); ++t)
      if (v.index[t] == 1 && v.index[t + 1] == 1) names_the_entry = true;
  CHECK(names_the_entry);
}

TEST_CASE("relation profile: stars, symmetry flags, commutativity") {
  relation_profile_t prof = relation_profile(thin_cyclic(4));
  CHECK(prof.star == std::vector<int>{0, 3, 2, 1});
  CHECK(prof.symmetric == std::vector<bool>{true, false, true, false});
  CHECK(prof.nonsymmetric_pairs == 1);
  CHECK(prof.commutative);

  relation_profile_t paley = relation_profile(paley_tournament(7));
  CHECK(paley.star == std::vector<int>{0, 2, 1});
  CHECK(paley.nonsymmetric_pairs == 1);
  CHECK(paley.commutative);
}

TEST_CASE("relabeling permutes indices and is inverted by the inverse permutation") {
  scheme s = thin_cyclic(4);
  std::vector<int> perm{0, 1, 3, 2};
  scheme r = relabel_scheme(s, perm);
  CHECK(r.rel_of(0, 1) == 1);
  CHECK(r.rel_of(0, 2) == 3);
  CHECK(r.rel_of(0, 3) == 2);
  CHECK(r.star == std::vector<int>{0, 2, 1, 3});
  CHECK(r.p.at(1, 1, 3) == s.p.at(1, 1, 2));
  CHECK_FALSE(scheme_equal(s, r));
  CHECK(scheme_equal(s, relabel_scheme(r, perm)));  // perm is an involution
  CHECK(naive::tensor_matches(r));
}

TEST_CASE("scheme equality covers points, partition, indices and tensor") {
  CHECK(scheme_equal(z3(), z3()));
  CHECK_FALSE(scheme_equal(z3(), thin_cyclic(4)));
  CHECK_FALSE(scheme_equal(thin_cyclic(4), relabel_scheme(thin_cyclic(4), {0, 2, 3, 1})));
}

TEST_CASE("relation pairs are sorted and cover the off-diagonal exactly") {
  scheme s = paley_tournament(7);
  long long total = 0;
  for (int i = 1; i <= s.d; ++i) {
    pair_list pl = relation_pairs(s, i);
    CHECK(std::is_sorted(pl.begin(), pl.end()));
    CHECK(static_cast<std::int64_t>(pl.size()) == s.k[static_cast<std::size_t>(i)] * s.n);
    total += static_cast<long long>(pl.size());
  }
  CHECK(total == static_cast<long long>(s.n) * (s.n - 1));
}

TEST_CASE("checked 64-bit arithmetic refuses to wrap") {
  CHECK(mul_ck(1 << 20, 1 << 20) == (std::int64_t{1} << 40));
  CHECK(throws_code(errc::overflow, [] { mul_ck(std::int64_t{1} << 40, std::int64_t{1} << 40); }));
  CHECK(throws_code(errc::overflow, [] {
    add_ck(std::numeric_limits<std::int64_t>::max(), 1);
  }));
}

}  // TEST_SUITE
