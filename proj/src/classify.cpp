#include "schemeforge/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schemeforge/closure.hpp"
#include "schemeforge/digraph.hpp"
#include "schemeforge/wdrd.hpp"

namespace schemeforge {

namespace {

std::vector<int> mask_to_set(unsigned mask) {
  std::vector<int> out;
  for (int t = 1; mask; ++t, mask >>= 1)
    if (mask & 1u) out.push_back(t);
  return out;
}

bool sets_equal(const std::vector<int>& a, const std::vector<int>& b) { return a == b; }

// Subschemes over K at one representative per fiber all share the same
// intersection tensor (the dense relabeling inside subscheme is index-order
// preserving, so tensors are directly comparable).
bool uniform_fiber_parameters(const scheme& s, const closed_subset& K) {
  std::optional<tensor3> ref;
  for (const auto& fiber : K.fibers) {
    subscheme_result sub = subscheme(s, K, fiber.front());
    if (!ref)
      ref = sub.sub.p;
    else if (!(ref->m == sub.sub.p.m && ref->v == sub.sub.p.v))
      return false;
  }
  return true;
}

}  // namespace

std::vector<ppoly_ordering> p_polynomial_orderings(const scheme& s) {
  std::vector<ppoly_ordering> out;
  for (int r = 1; r <= s.d; ++r) {
    digraph g = arc_union(s, {r});
    digraph_profile pr = profile(g);
    if (!pr.strongly_connected || pr.diameter != s.d) continue;

    // Distance classes must coincide exactly with the relations.
    std::vector<int> order(static_cast<std::size_t>(s.d) + 1, -1);
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      for (int y = 0; y < s.n; ++y) {
        int& slot = order[static_cast<std::size_t>(pr.at(x, y))];
        int rel = s.rel_of(x, y);
        if (slot == -1)
          slot = rel;
        else if (slot != rel) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;

    // Triangular support re-check from the tensor alone: the support of the
    // generator's t-th power must contain order[t] and stay within the
    // classes at distance <= t. Equivalent to the polynomial property (the
    // change of basis between generator powers and relation tables is
    // triangular with positive leading entries), so it guards the distance
    // computation without repeating it.
    std::vector<int> position(static_cast<std::size_t>(s.d) + 1, 0);
    for (int t = 0; t <= s.d; ++t) position[static_cast<std::size_t>(order[t])] = t;
    std::vector<int> reach{0};
    for (int t = 1; t <= s.d && ok; ++t) {
      reach = complex_product(s, {r}, reach);
      bool covers = false;
      for (int h : reach) {
        if (position[static_cast<std::size_t>(h)] > t) ok = false;
        if (h == order[static_cast<std::size_t>(t)]) covers = true;
      }
      if (!covers) ok = false;
    }
    if (ok) out.push_back({r, std::move(order)});
  }
  return out;
}

classification classify_scheme(const scheme& s) {
  classification c;
  c.labeling.resize(static_cast<std::size_t>(s.d) + 1);
  std::iota(c.labeling.begin(), c.labeling.end(), 0);
  c.canonical = s;

  relation_profile_t prof = relation_profile(s);
  if (prof.nonsymmetric_pairs != 1)
    c.reason = "expected exactly one non-symmetric relation pair, found " +
               std::to_string(prof.nonsymmetric_pairs);
  else if (s.d < 2 || s.d > 4)
    c.reason = "class count " + std::to_string(s.d) + " outside 2..4";
  else
    c.applicable = true;

  if (!c.applicable) {
    if (s.d <= 4)
      for (unsigned mask = 1; mask < (1u << s.d); ++mask) {
        candidate_result cr;
        cr.arcs = mask_to_set(mask);
        cr.tag = "not_applicable";
        c.candidates.push_back(std::move(cr));
      }
    return c;
  }

  // Canonical labels: the non-symmetric pair becomes (1,2), smaller original
  // index first; symmetric classes follow in original order.
  int next = 3;
  for (int i = 1; i <= s.d; ++i) {
    if (prof.symmetric[static_cast<std::size_t>(i)])
      c.labeling[static_cast<std::size_t>(i)] = next++;
    else
      c.labeling[static_cast<std::size_t>(i)] =
          i < prof.star[static_cast<std::size_t>(i)] ? 1 : 2;
  }
  c.canonical = relabel_scheme(s, c.labeling);
  const scheme& cs = c.canonical;

  std::vector<ppoly_ordering> ppoly;
  if (cs.d == 3) ppoly = p_polynomial_orderings(cs);

  for (unsigned mask = 1; mask < (1u << cs.d); ++mask) {
    candidate_result cr;
    cr.arcs = mask_to_set(mask);
    const auto& T = cr.arcs;
    bool single = T.size() == 1 && T[0] <= 2;
    bool mixed = T.size() == 2 && T[0] <= 2 && T[1] >= 3;

    if (cs.d == 2) {
      if (single) {
        cr.admissible = true;
        cr.tag = "single_class";
      } else {
        cr.tag = "shape";
      }
    } else if (cs.d == 3) {
      if (mixed) {
        cr.admissible = true;
        cr.tag = "with_symmetric_class";
      } else if (single) {
        closed_subset K = closure(cs, {1});
        bool wedge =
            K.indices == std::vector<int>{0, 1, 2} && wedge_conditions(cs, K, K);
        if (!ppoly.empty()) {
          cr.tag = "p_polynomial";
          cr.ppoly = ppoly.front();
        } else if (wedge) {
          cr.tag = "wedge";
          cr.wedge_subset = K.indices;
          cr.wedge_uniform_parameters = uniform_fiber_parameters(cs, K);
        } else {
          cr.admissible = true;
          cr.tag = "single_class";
        }
      } else {
        cr.tag = "shape";
      }
    } else {  // d == 4
      if (mixed) {
        int j = T[1];
        std::optional<wreath_split> split = wreath_decomposition_over(cs, j);
        std::vector<ppoly_ordering> qpoly;
        if (split) qpoly = p_polynomial_orderings(split->quotient);
        if (split && !qpoly.empty()) {
          cr.tag = "wreath";
          cr.wreath_class = j;
          cr.quotient_ppoly = qpoly.front();
        } else {
          closed_subset K = closure(cs, {1, j});
          bool wedge = K.indices == std::vector<int>{0, 1, 2, j} &&
                       wedge_conditions(cs, K, K);
          if (wedge) {
            cr.tag = "wedge";
            cr.wedge_subset = K.indices;
            cr.wedge_uniform_parameters = uniform_fiber_parameters(cs, K);
          } else {
            cr.admissible = true;
            cr.tag = "with_symmetric_class";
          }
        }
      } else {
        cr.tag = "shape";
      }
    }

    if (cr.admissible) c.admissible.push_back(cr.arcs);
    c.candidates.push_back(std::move(cr));
  }
  return c;
}

std::vector<std::vector<int>> oracle_enumerate(const scheme& s) {
  if (s.d > 16)
    fail(errc::bad_range, "oracle enumeration over " + std::to_string(s.d) + " classes");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << s.d); ++mask) {
    std::vector<int> T = mask_to_set(mask);
    digraph g = arc_union(s, T);
    digraph_profile pr = profile(g);
    if (!pr.strongly_connected || pr.diameter != 2) continue;
    if (is_wdrd_with_scheme(g, s)) out.push_back(std::move(T));
  }
  return out;
}

crosscheck_report crosscheck(const scheme& s) {
  classification c = classify_scheme(s);

  // Map admissible sets back to the input labels for the comparison.
  std::vector<int> inverse(c.labeling.size());
  for (std::size_t i = 0; i < c.labeling.size(); ++i)
    inverse[static_cast<std::size_t>(c.labeling[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> sets;
  for (const auto& T : c.admissible) {
    std::vector<int> orig;
    for (int t : T) orig.push_back(inverse[static_cast<std::size_t>(t)]);
    std::sort(orig.begin(), orig.end());
    sets.push_back(std::move(orig));
  }

  crosscheck_report r = crosscheck_against(s, std::move(sets));
  r.cls = std::move(c);
  return r;
}

crosscheck_report crosscheck_against(const scheme& s,
                                     std::vector<std::vector<int>> classifier_sets) {
  crosscheck_report r;
  auto mask_of = [](const std::vector<int>& T) {
    unsigned m = 0;
    for (int t : T) m |= 1u << (t - 1);
    return m;
  };
  std::sort(classifier_sets.begin(), classifier_sets.end(),
            [&](const auto& a, const auto& b) { return mask_of(a) < mask_of(b); });
  r.classifier = std::move(classifier_sets);
  r.oracle = oracle_enumerate(s);

  for (const auto& T : r.classifier)
    if (std::none_of(r.oracle.begin(), r.oracle.end(),
                     [&](const auto& U) { return sets_equal(T, U); }))
      r.only_classifier.push_back(T);
  for (const auto& T : r.oracle)
    if (std::none_of(r.classifier.begin(), r.classifier.end(),
                     [&](const auto& U) { return sets_equal(T, U); }))
      r.only_oracle.push_back(T);
  r.pass = r.only_classifier.empty() && r.only_oracle.empty();
  return r;
}

}  // namespace schemeforge
