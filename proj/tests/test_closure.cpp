#include <doctest.h>

#include <vector>

#include "naive.hpp"
#include "schemeforge/closure.hpp"
#include "schemeforge/generators.hpp"
#include "support.hpp"

using namespace schemeforge;
using testsupport::throws_code;

namespace {

scheme z8_fiber() {
  return *circulant_scheme({8, {{1, 5}, {2, 6}, {3, 7}, {4}}}).sch;
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("complex products on the 4-cycle translation scheme") {
  scheme s = thin_cyclic(4);
  CHECK(complex_product(s, {1}, {1}) == std::vector<int>{2});
  CHECK(complex_product(s, {1}, {3}) == std::vector<int>{0});
  CHECK(complex_product(s, {2}, {2}) == std::vector<int>{0});
  CHECK(complex_product(s, {1, 2}, {1}) == std::vector<int>{2, 3});
  CHECK(complex_product(s, {0}, {2}) == std::vector<int>{2});
  CHECK(throws_code(errc::index_out_of_range, [&] { complex_product(s, {7}, {1}); }));
}

TEST_CASE("closure fixpoints and fibers") {
  scheme s = thin_cyclic(4);
  closed_subset half = closure(s, {2});
  CHECK(half.indices == std::vector<int>{0, 2});
  CHECK(half.fibers == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  closed_subset all = closure(s, {1});
  CHECK(all.indices == std::vector<int>{0, 1, 2, 3});
  CHECK(all.fibers == std::vector<std::vector<int>>{{0, 1, 2, 3}});

  closed_subset trivial = closure(s, {});
  CHECK(trivial.indices == std::vector<int>{0});
  CHECK(trivial.fibers.size() == 4);
}

TEST_CASE("closedness predicate and wrapper") {
  scheme s = thin_cyclic(4);
  CHECK(is_closed(s, {0, 2}));
  CHECK_FALSE(is_closed(s, {0, 1}));
  CHECK_FALSE(is_closed(s, {2}));  // misses the diagonal

  closed_subset w = as_closed_subset(s, {2, 0});  // sorted on the way in
  CHECK(w.indices == std::vector<int>{0, 2});
  CHECK(throws_code(errc::not_closed, [&] { as_closed_subset(s, {0, 1}); }));
}

TEST_CASE("subscheme on a fiber re-indexes densely and revalidates") {
  scheme s = thin_cyclic(4);
  subscheme_result r = subscheme(s, closure(s, {2}), 1);
  CHECK(r.points == std::vector<int>{1, 3});
  CHECK(r.from_dense == std::vector<int>{0, 2});
  CHECK(r.to_dense == std::vector<int>{0, -1, 1, -1});
  CHECK(scheme_equal(r.sub, one_class_scheme(2)));
  CHECK(naive::tensor_matches(r.sub));
  CHECK(throws_code(errc::index_out_of_range, [&] { subscheme(s, closure(s, {2}), 9); }));
}

TEST_CASE("quotient scheme collapses fibers to double cosets") {
  scheme s = thin_cyclic(4);
  quotient_result q = quotient_scheme(s, closure(s, {2}));
  CHECK(q.fibers == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(scheme_equal(q.quotient, one_class_scheme(2)));
  CHECK(q.relation_image == std::vector<int>{0, 1, 0, 1});

  scheme z8 = z8_fiber();
  quotient_result q8 = quotient_scheme(z8, closure(z8, {4}));
  CHECK(scheme_equal(q8.quotient, thin_cyclic(4)));
  CHECK(q8.relation_image == std::vector<int>{0, 1, 2, 3, 0});
  CHECK(naive::tensor_matches(q8.quotient));
}

TEST_CASE("wreath product layout and agreement with an explicit build") {
  scheme w = wreath_product(one_class_scheme(2), thin_cyclic(3));
  CHECK(w.n == 6);
  CHECK(w.d == 3);
  CHECK(w.k == std::vector<std::int64_t>{1, 1, 2, 2});
  // Point (x, y) = y*2 + x: class 1 inside fibers, classes 2..3 between.
  CHECK(w.rel_of(0, 1) == 1);
  CHECK(w.rel_of(0, 2) == 2);
  CHECK(w.rel_of(0, 4) == 3);
  CHECK(w.rel_of(4, 0) == 2);

  std::vector<pair_list> rels(3);
  for (int y = 0; y < 3; ++y) {
    rels[0].emplace_back(y * 2, y * 2 + 1);
    rels[0].emplace_back(y * 2 + 1, y * 2);
    for (int t = 1; t <= 2; ++t)
      for (int x = 0; x < 2; ++x)
        for (int x2 = 0; x2 < 2; ++x2)
          rels[static_cast<std::size_t>(t)].emplace_back(y * 2 + x, ((y + t) % 3) * 2 + x2);
  }
  CHECK(scheme_equal(w, build_scheme(6, rels)));
  CHECK(naive::tensor_matches(w));
}

TEST_CASE("wreath decomposition recovers one-class fibers and the quotient") {
  scheme w = wreath_product(one_class_scheme(2), thin_cyclic(3));
  auto split = wreath_decomposition_over(w, 1);
  REQUIRE(split.has_value());
  CHECK(split->a == 1);
  CHECK(split->fibers == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(scheme_equal(split->quotient, thin_cyclic(3)));

  CHECK_FALSE(wreath_decomposition_over(w, 2).has_value());  // closure too large

  auto least = wreath_decomposition(w);
  REQUIRE(least.has_value());
  CHECK(least->a == 1);

  // The 4-cycle translation scheme has the closed subset but mixes its cross
  // relations, so it is not a wreath.
  scheme z4 = thin_cyclic(4);
  CHECK_FALSE(wreath_decomposition_over(z4, 2).has_value());
  CHECK_FALSE(wreath_decomposition(z4).has_value());

  scheme z8 = z8_fiber();
  auto f = wreath_decomposition_over(z8, 4);
  REQUIRE(f.has_value());
  CHECK(scheme_equal(f->quotient, thin_cyclic(4)));
  CHECK(f->fibers == std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(throws_code(errc::index_out_of_range, [&] { wreath_decomposition_over(z8, 5); }));
}

TEST_CASE("wedge conditions hold for wreath-type nests and fail otherwise") {
  scheme w = wreath_product(thin_cyclic(3), one_class_scheme(2));
  closed_subset k = closure(w, {1});
  CHECK(k.indices == std::vector<int>{0, 1, 2});
  CHECK(wedge_conditions(w, k, k));

  scheme z4 = thin_cyclic(4);
  closed_subset h = closure(z4, {2});
  CHECK_FALSE(wedge_conditions(z4, h, h));

  closed_subset fake;
  fake.indices = {0, 1};
  CHECK(throws_code(errc::not_closed, [&] { wedge_conditions(z4, fake, h); }));
  closed_subset trivial = closure(z4, {});
  CHECK(throws_code(errc::not_nested, [&] { wedge_conditions(z4, h, trivial); }));
}

TEST_CASE("closed subset sweep") {
  scheme z4 = thin_cyclic(4);
  CHECK(all_closed_subsets(z4) ==
        std::vector<std::vector<int>>{{0}, {0, 2}, {0, 1, 2, 3}});

  CHECK(all_closed_subsets(paley_tournament(7)) ==
        std::vector<std::vector<int>>{{0}, {0, 1, 2}});

  scheme z8 = z8_fiber();
  CHECK(all_closed_subsets(z8) ==
        std::vector<std::vector<int>>{{0}, {0, 4}, {0, 2, 4}, {0, 1, 2, 3, 4}});

  CHECK(throws_code(errc::bad_range, [] { all_closed_subsets(thin_cyclic(15)); }));
}

}  // TEST_SUITE
