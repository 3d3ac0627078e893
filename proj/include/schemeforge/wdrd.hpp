#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemeforge/digraph.hpp"
#include "schemeforge/scheme.hpp"

namespace schemeforge {

// Outcome of attaching a scheme to a digraph via two-sided distances. On
// success `sch` is engaged and cell_labels[i] is the (forward, backward)
// distance pair of relation i, lexicographically ordered with (0,0) first;
// the label of star(i) is always the swap of the label of i. On failure the
// diagnostics say why: either a pair with no directed path between its ends,
// or a cell pair violating intersection-number constancy.
struct attached_result {
  std::optional<scheme> sch;
  std::vector<std::pair<int, int>> cell_labels;
  bool strongly_connected = true;
  std::pair<int, int> unreachable_pair{-1, -1};
  std::optional<nonconstant_witness> witness;

  explicit operator bool() const { return sch.has_value(); }
};

attached_result attach_scheme(const digraph& g);

// True iff the two-sided distance cells of g form a scheme whose partition of
// X*X equals the relation partition of s, labels ignored. Throws
// errc::size_mismatch when the point sets differ.
bool is_wdrd_with_scheme(const digraph& g, const scheme& s);

enum class dr_type { short_type, long_type };

// A distance-regular digraph: the one-way distance classes form a
// non-symmetric scheme. Its diameter equals girth-1 (short) or girth (long);
// long instances factor as lex(quotient, empty graph) over the fibers of the
// diameter-distance relation joined with the diagonal.
struct dr_result {
  scheme sch;
  dr_type type = dr_type::short_type;
  int diameter = 0;
  int girth = 0;
  std::optional<std::pair<digraph, digraph>> factors;  // long type only
};

std::optional<dr_result> distance_regular_test(const digraph& g);

// Audit of the fiber-blowup decomposition: with F = closure({a}) and
// D = (X, R_1 u R_l) for l in {1, a}, D should factor as the lexicographic
// product of its quotient over the F-fibers with an inner graph on k_a + 1
// points, empty when l = 1 and complete when l = a; and when D carries s as
// attached scheme, the quotient digraph must itself attach a scheme.
// Hypotheses are audited, not assumed; every failing one is named. The
// decomposition is still attempted when hypotheses fail so the report stays
// informative, and a two-cycle in the quotient is recorded as a boundary
// flag rather than asserted against.
struct fiber_blowup_report {
  enum class status_t { ok, precondition_violated, decomposition_failed };

  status_t status = status_t::ok;
  int a = 0;
  int l = 0;
  std::vector<std::string> failed_preconditions;
  bool attempted = false;
  bool decomposed = false;
  bool inner_matches = false;
  bool digon_quotient = false;
  bool blowup_is_wdrd = false;
  std::optional<bool> quotient_is_wdrd;
};

fiber_blowup_report verify_fiber_blowup(const scheme& s, int a, int l);

const char* dr_type_name(dr_type t);
const char* fiber_blowup_status_name(fiber_blowup_report::status_t s);

}  // namespace schemeforge
