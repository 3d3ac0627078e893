#include "schemeforge/wdrd.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "schemeforge/closure.hpp"

namespace schemeforge {

attached_result attach_scheme(const digraph& g) {
  attached_result r;
  digraph_profile pr = profile(g);
  if (!pr.strongly_connected) {
    r.strongly_connected = false;
    for (int x = 0; x < g.n && r.unreachable_pair.first == -1; ++x)
      for (int y = 0; y < g.n; ++y)
        if (pr.at(x, y) == unreachable) {
          r.unreachable_pair = {x, y};
          break;
        }
    return r;
  }

  std::map<std::pair<int, int>, pair_list> cells;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      cells[{pr.at(x, y), pr.at(y, x)}].emplace_back(x, y);

  // (0,0) is exactly the diagonal; the rest become relations in label order.
  // The partition is transpose-closed by construction (cell (a,b) flips to
  // cell (b,a)), so only intersection-number constancy can reject it.
  r.cell_labels.push_back({0, 0});
  std::vector<pair_list> rels;
  for (auto& [label, pairs] : cells) {
    if (label == std::pair<int, int>{0, 0}) continue;
    r.cell_labels.push_back(label);
    rels.push_back(std::move(pairs));
  }
  try {
    r.sch = build_scheme(g.n, rels);
    r.sch->provenance = "attached";
  } catch (const error& e) {
    if (e.code != errc::non_constant_intersection) throw;
    r.witness = e.witness;
    r.cell_labels.clear();
  }
  return r;
}

bool is_wdrd_with_scheme(const digraph& g, const scheme& s) {
  if (g.n != s.n)
    fail(errc::size_mismatch, "digraph on " + std::to_string(g.n) + " points vs scheme on " +
                                  std::to_string(s.n));
  attached_result a = attach_scheme(g);
  if (!a || a.sch->d != s.d) return false;
  // Same class count, so it suffices that every attached cell lands inside a
  // single relation of s.
  std::vector<int> image(static_cast<std::size_t>(s.d) + 1, -1);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int& slot = image[static_cast<std::size_t>(a.sch->rel_of(x, y))];
      int want = s.rel_of(x, y);
      if (slot == -1)
        slot = want;
      else if (slot != want)
        return false;
    }
  return true;
}

std::optional<dr_result> distance_regular_test(const digraph& g) {
  digraph_profile pr = profile(g);
  if (!pr.strongly_connected || pr.diameter == 0) return std::nullopt;

  std::vector<pair_list> rels(static_cast<std::size_t>(pr.diameter));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int t = pr.at(x, y);
      if (t > 0) rels[static_cast<std::size_t>(t) - 1].emplace_back(x, y);
    }

  dr_result out;
  try {
    out.sch = build_scheme(g.n, rels);
  } catch (const error& e) {
    if (e.code == errc::non_constant_intersection || e.code == errc::not_transpose_closed)
      return std::nullopt;
    throw;
  }
  out.sch.provenance = "distance";
  bool symmetric = true;
  for (int i = 1; i <= out.sch.d; ++i)
    if (out.sch.star[static_cast<std::size_t>(i)] != i) symmetric = false;
  if (symmetric) return std::nullopt;

  if (!pr.girth) fail(errc::internal, "strongly connected digraph with arcs but no circuit");
  out.diameter = pr.diameter;
  out.girth = *pr.girth;
  if (out.diameter != out.girth - 1 && out.diameter != out.girth)
    fail(errc::internal, "distance scheme validated but diameter is neither girth-1 nor girth");
  out.type = out.diameter == out.girth - 1 ? dr_type::short_type : dr_type::long_type;

  if (out.type == dr_type::long_type) {
    // Fibers of the diameter-distance relation joined with the diagonal.
    std::vector<int> block_of(static_cast<std::size_t>(g.n), -1);
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < g.n; ++x) {
      if (block_of[static_cast<std::size_t>(x)] != -1) continue;
      std::vector<int> blk;
      for (int y = 0; y < g.n; ++y)
        if (x == y || pr.at(x, y) == out.diameter) {
          if (block_of[static_cast<std::size_t>(y)] != -1)
            fail(errc::internal, "diameter-distance fibers are not an equivalence");
          block_of[static_cast<std::size_t>(y)] = static_cast<int>(blocks.size());
          blk.push_back(y);
        }
      blocks.push_back(std::move(blk));
    }
    auto dec = lex_decompose(g, blocks);
    if (!dec) fail(errc::internal, "long-type instance refused its product decomposition");
    if (arc_count(dec->second) != 0)
      fail(errc::internal, "long-type inner factor is not an empty graph");
    auto qr = distance_regular_test(dec->first);
    if (!qr || qr->type != dr_type::short_type)
      fail(errc::internal, "long-type quotient is not a short-type instance");
    out.factors = std::move(dec);
  }
  return out;
}

fiber_blowup_report verify_fiber_blowup(const scheme& s, int a, int l) {
  if (a < 1 || a > s.d)
    fail(errc::index_out_of_range, "class index " + std::to_string(a) + " outside 1.." +
                                       std::to_string(s.d));
  fiber_blowup_report r;
  r.a = a;
  r.l = l;
  auto miss = [&r](const std::string& m) { r.failed_preconditions.push_back(m); };

  if (!relation_profile(s).commutative) miss("scheme is commutative");
  if (s.d < 2 || s.star[1] != 2) miss("star(1) = 2");
  if (a < 3) miss("3 <= a <= d");
  closed_subset F = closure(s, {a});
  if (F.indices != std::vector<int>{0, a}) miss("closure({a}) = {0, a}");
  if (s.p.at(1, s.star[1], a) != s.k[1]) miss("p(1, star(1), a) = k_1");
  if (l != 1 && l != a) miss("l in {1, a}");

  if (l == 1 || l == a) {
    r.attempted = true;
    std::vector<int> arcs{1};
    if (l != 1) arcs.push_back(l);
    digraph blowup = arc_union(s, arcs);

    auto dec = lex_decompose(blowup, F.fibers);
    digraph q = quotient_digraph(blowup, F.fibers);
    for (int x = 0; x < q.n && !r.digon_quotient; ++x)
      for (int y = x + 1; y < q.n; ++y)
        if (q.arcs.get(x, y) && q.arcs.get(y, x)) {
          r.digon_quotient = true;
          break;
        }
    if (dec) {
      r.decomposed = true;
      const digraph& inner = dec->second;
      long long m = s.k[static_cast<std::size_t>(a)] + 1;
      long long want = l == 1 ? 0 : m * (m - 1);
      r.inner_matches = inner.n == m && arc_count(inner) == want;
    }

    r.blowup_is_wdrd = is_wdrd_with_scheme(blowup, s);
    if (r.blowup_is_wdrd) r.quotient_is_wdrd = static_cast<bool>(attach_scheme(q));
  }

  if (!r.failed_preconditions.empty())
    r.status = fiber_blowup_report::status_t::precondition_violated;
  else if (!r.decomposed || !r.inner_matches ||
           (r.blowup_is_wdrd && !r.quotient_is_wdrd.value_or(false)))
    r.status = fiber_blowup_report::status_t::decomposition_failed;
  return r;
}

const char* dr_type_name(dr_type t) {
  return t == dr_type::short_type ? "short" : "long";
}

const char* fiber_blowup_status_name(fiber_blowup_report::status_t s) {
  switch (s) {
    case fiber_blowup_report::status_t::ok: return "OK";
    case fiber_blowup_report::status_t::precondition_violated: return "PRECONDITION_VIOLATED";
    case fiber_blowup_report::status_t::decomposition_failed: return "DECOMPOSITION_FAILED";
  }
  return "?";
}

}  // namespace schemeforge
