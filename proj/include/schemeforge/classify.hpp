#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemeforge/scheme.hpp"

namespace schemeforge {

// A distance ordering witnessing the polynomial property: order[t] is the
// relation at distance t from the generator, order[0] = 0 and
// order[1] = generator. Re-checked against the tensor: the support of the
// generator's t-th power is contained in {order[0..t]} and covers order[t].
struct ppoly_ordering {
  int generator = 0;
  std::vector<int> order;

  friend bool operator==(const ppoly_ordering&, const ppoly_ordering&) = default;
};

// One entry per non-diagonal relation whose digraph is strongly connected
// with distance classes coinciding exactly with the relations. Ascending by
// generator. Nonempty iff the scheme is polynomial in some generator.
std::vector<ppoly_ordering> p_polynomial_orderings(const scheme& s);

// Verdict for one candidate arc index-set, in canonical labels. Admissible
// candidates get a structural tag; excluded ones carry a checkable witness
// or the name of the shape/applicability gate that cut them.
struct candidate_result {
  std::vector<int> arcs;
  bool admissible = false;
  std::string tag;  // single_class | with_symmetric_class |
                    // not_applicable | shape | p_polynomial | wreath | wedge
  std::optional<ppoly_ordering> ppoly;           // p_polynomial exclusions
  std::optional<int> wreath_class;               // wreath exclusions: fiber class
  std::optional<ppoly_ordering> quotient_ppoly;  // wreath exclusions: quotient witness
  std::vector<int> wedge_subset;                 // wedge exclusions: K = F
  std::optional<bool> wedge_uniform_parameters;  // recorded, not asserted
};

// Decision for every nonempty subset of {1..d}, d <= 4, after relabeling the
// unique non-symmetric pair to (1,2) (originally smaller index first) and
// sorting symmetric classes by original index. Candidates ascend by bitmask.
// Schemes without exactly one non-symmetric pair, or with d outside 2..4,
// are not applicable: every candidate is excluded and admissible is empty.
struct classification {
  bool applicable = false;
  std::string reason;          // set when not applicable
  std::vector<int> labeling;   // perm[original] = canonical, labeling[0] = 0
  scheme canonical;
  std::vector<candidate_result> candidates;
  std::vector<std::vector<int>> admissible;  // canonical labels
};

classification classify_scheme(const scheme& s);

// Ground truth by definition: all nonempty T subseteq {1..d} (original
// labels, ascending bitmask order) whose arc union is strongly connected with
// diameter exactly 2 and two-way cells equal to the scheme's partition.
// Throws errc::bad_range for d > 16.
std::vector<std::vector<int>> oracle_enumerate(const scheme& s);

// Classifier vs oracle, compared in original labels.
struct crosscheck_report {
  classification cls;
  std::vector<std::vector<int>> classifier;       // admissible, original labels
  std::vector<std::vector<int>> oracle;           // original labels
  std::vector<std::vector<int>> only_classifier;  // symmetric difference halves
  std::vector<std::vector<int>> only_oracle;
  bool pass = false;
};

crosscheck_report crosscheck(const scheme& s);

// Same comparison against a caller-supplied classifier list (original
// labels); used by negative controls that corrupt the classifier output.
crosscheck_report crosscheck_against(const scheme& s,
                                     std::vector<std::vector<int>> classifier_sets);

}  // namespace schemeforge
