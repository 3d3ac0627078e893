#include <doctest.h>

#include <utility>
#include <vector>

#include "naive.hpp"
#include "schemeforge/closure.hpp"
#include "schemeforge/generators.hpp"
#include "schemeforge/wdrd.hpp"
#include "support.hpp"

using namespace schemeforge;
using testsupport::throws_code;

namespace {

digraph cycle(int n) {
  pair_list arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return make_digraph(n, arcs);
}

scheme z8_fiber_canonical() {
  scheme z8 = *circulant_scheme({8, {{1, 5}, {2, 6}, {3, 7}, {4}}}).sch;
  return relabel_scheme(z8, {0, 1, 3, 2, 4});  // non-symmetric pair to (1,2)
}

}  // namespace

TEST_SUITE("wdrd") {

TEST_CASE("attaching a scheme to a directed cycle") {
  attached_result r = attach_scheme(cycle(4));
  REQUIRE(static_cast<bool>(r));
  CHECK(r.strongly_connected);
  CHECK(r.cell_labels ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
  CHECK(scheme_equal(*r.sch, thin_cyclic(4)));
  // Transposed relation carries the swapped label.
  for (int i = 0; i <= r.sch->d; ++i) {
    auto [f, b] = r.cell_labels[static_cast<std::size_t>(i)];
    CHECK(r.cell_labels[static_cast<std::size_t>(r.sch->star[static_cast<std::size_t>(i)])] ==
          std::make_pair(b, f));
  }
}

TEST_CASE("attachment labels follow the two-sided distances") {
  digraph g = arc_union(thin_cyclic(4), {1, 2});
  attached_result r = attach_scheme(g);
  REQUIRE(static_cast<bool>(r));
  CHECK(r.cell_labels ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(is_wdrd_with_scheme(g, thin_cyclic(4)));

  auto ref = naive::two_way_cells(g.n, arc_pairs(g));
  REQUIRE(ref.has_value());
  CHECK(ref->size() == r.cell_labels.size());
}

TEST_CASE("attachment failure modes carry diagnostics") {
  attached_result nc = attach_scheme(make_digraph(2, {{0, 1}}));
  CHECK_FALSE(static_cast<bool>(nc));
  CHECK_FALSE(nc.strongly_connected);
  CHECK(nc.unreachable_pair != std::make_pair(-1, -1));

  // Symmetric 4-vertex path: end and middle vertices disagree on valency.
  attached_result bad =
      attach_scheme(make_digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  CHECK_FALSE(static_cast<bool>(bad));
  CHECK(bad.strongly_connected);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->count_a != bad.witness->count_b);
}

TEST_CASE("scheme-partition comparison for digraphs") {
  CHECK(is_wdrd_with_scheme(cycle(4), thin_cyclic(4)));
  scheme merged = *circulant_scheme({4, {{1, 3}, {2}}}).sch;
  CHECK_FALSE(is_wdrd_with_scheme(cycle(4), merged));
  CHECK_FALSE(is_wdrd_with_scheme(make_digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3},
                                                   {3, 2}, {0, 3}, {3, 0}}),
                                  thin_cyclic(4)));
  CHECK(throws_code(errc::size_mismatch,
                    [] { is_wdrd_with_scheme(cycle(5), thin_cyclic(4)); }));
}

TEST_CASE("attachment is invariant under transpose with swapped labels") {
  for (const std::vector<int>& T :
       {std::vector<int>{1}, std::vector<int>{1, 2}, std::vector<int>{1, 3}}) {
    digraph g = arc_union(thin_cyclic(4), T);
    digraph t = transpose(g);
    attached_result a = attach_scheme(g);
    attached_result b = attach_scheme(t);
    REQUIRE(static_cast<bool>(a) == static_cast<bool>(b));
    if (a) {
      CHECK(is_wdrd_with_scheme(t, *a.sch));
      CHECK(is_wdrd_with_scheme(g, *b.sch));
    }
  }
}

TEST_CASE("distance-regular recognition: short instances") {
  auto c4 = distance_regular_test(cycle(4));
  REQUIRE(c4.has_value());
  CHECK(c4->type == dr_type::short_type);
  CHECK(c4->diameter == 3);
  CHECK(c4->girth == 4);
  CHECK_FALSE(c4->factors.has_value());
  CHECK(scheme_equal(c4->sch, thin_cyclic(4)));

  auto paley = distance_regular_test(arc_union(paley_tournament(7), {1}));
  REQUIRE(paley.has_value());
  CHECK(paley->type == dr_type::short_type);
  CHECK(paley->diameter == 2);
  CHECK(paley->girth == 3);
}

TEST_CASE("distance-regular recognition: long instances factor") {
  digraph g = lexicographic_product(cycle(3), digraph(2));
  auto r = distance_regular_test(g);
  REQUIRE(r.has_value());
  CHECK(r->type == dr_type::long_type);
  CHECK(r->diameter == 3);
  CHECK(r->girth == 3);
  REQUIRE(r->factors.has_value());
  CHECK(arc_pairs(r->factors->first) == arc_pairs(cycle(3)));
  CHECK(arc_count(r->factors->second) == 0);
  CHECK(r->factors->second.n == 2);
  // Block numbering is by least element, so the product rebuilds g exactly.
  digraph rebuilt = lexicographic_product(r->factors->first, r->factors->second);
  CHECK(arc_pairs(rebuilt) == arc_pairs(g));

  auto paley_blown =
      distance_regular_test(lexicographic_product(arc_union(paley_tournament(7), {1}), digraph(3)));
  REQUIRE(paley_blown.has_value());
  CHECK(paley_blown->type == dr_type::long_type);
  CHECK(paley_blown->diameter == 3);
  CHECK(paley_blown->girth == 3);
}

TEST_CASE("distance-regular recognition rejects symmetric and irregular digraphs") {
  CHECK_FALSE(distance_regular_test(arc_union(one_class_scheme(3), {1})).has_value());
  CHECK_FALSE(
      distance_regular_test(make_digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}))
          .has_value());
  CHECK_FALSE(distance_regular_test(make_digraph(2, {{0, 1}, {1, 0}})).has_value());
  CHECK_FALSE(distance_regular_test(make_digraph(2, {})).has_value());
}

TEST_CASE("fiber blowup audit: clean pass on the 8-point fiber scheme") {
  scheme s = z8_fiber_canonical();
  for (int l : {1, 4}) {
    fiber_blowup_report r = verify_fiber_blowup(s, 4, l);
    CHECK(r.status == fiber_blowup_report::status_t::ok);
    CHECK(r.failed_preconditions.empty());
    CHECK(r.attempted);
    CHECK(r.decomposed);
    CHECK(r.inner_matches);
    CHECK(r.blowup_is_wdrd);
    REQUIRE(r.quotient_is_wdrd.has_value());
    CHECK(*r.quotient_is_wdrd);
    CHECK_FALSE(r.digon_quotient);
  }
}

TEST_CASE("fiber blowup audit: failed hypotheses are named, not assumed") {
  scheme z4 = relabel_scheme(thin_cyclic(4), {0, 1, 3, 2});
  fiber_blowup_report r = verify_fiber_blowup(z4, 3, 1);
  CHECK(r.status == fiber_blowup_report::status_t::precondition_violated);
  CHECK(r.failed_preconditions == std::vector<std::string>{"p(1, star(1), a) = k_1"});
  CHECK(r.attempted);
  CHECK_FALSE(r.decomposed);  // cross arcs are not block-complete
  CHECK(r.blowup_is_wdrd);
  CHECK(r.digon_quotient);  // boundary flag: the contracted digraph has a 2-cycle

  fiber_blowup_report bad_l = verify_fiber_blowup(z8_fiber_canonical(), 4, 2);
  CHECK(bad_l.status == fiber_blowup_report::status_t::precondition_violated);
  CHECK(bad_l.failed_preconditions == std::vector<std::string>{"l in {1, a}"});
  CHECK_FALSE(bad_l.attempted);

  CHECK(throws_code(errc::index_out_of_range,
                    [] { verify_fiber_blowup(thin_cyclic(4), 0, 1); }));
}

TEST_CASE("enum names for reports") {
  CHECK(std::string(dr_type_name(dr_type::short_type)) == "short");
  CHECK(std::string(dr_type_name(dr_type::long_type)) == "long");
  CHECK(std::string(fiber_blowup_status_name(fiber_blowup_report::status_t::ok)) == "OK");
  CHECK(std::string(fiber_blowup_status_name(
            fiber_blowup_report::status_t::precondition_violated)) == "PRECONDITION_VIOLATED");
  CHECK(std::string(fiber_blowup_status_name(
            fiber_blowup_report::status_t::decomposition_failed)) == "DECOMPOSITION_FAILED");
}

}  // TEST_SUITE
