#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemeforge/scheme.hpp"

namespace schemeforge {

// Difference-class partition of Z_n minus zero. Classes must partition
// {1..n-1} and negation must permute them.
struct circulant_spec {
  int modulus = 0;
  std::vector<std::vector<int>> classes;
};

void validate_circulant_spec(const circulant_spec& spec);  // errc::bad_spec

// R_C = {(x,y) : y - x mod n in C}. The partition axioms hold by
// construction; intersection-number constancy can still fail, in which case
// the scheme is absent and the witness says where.
struct circulant_result {
  std::optional<scheme> sch;
  std::optional<nonconstant_witness> witness;

  explicit operator bool() const { return sch.has_value(); }
};

circulant_result circulant_scheme(const circulant_spec& spec);

// Every valid circulant scheme for the modulus, deterministic order, names
// circ-n{n}-{index}. For n <= 8 all negation-closed set partitions of
// {1..n-1} are tried exhaustively; for 9 <= n <= 20 candidates are the
// negation-closed unions of orbits of a cyclic multiplier subgroup <u> of
// the units (u >= 2, at most 8 orbits), deduplicated across u. Outside 2..20
// throws errc::bad_range.
std::vector<scheme> enumerate_circulant(int n);

scheme one_class_scheme(int m);   // m >= 2: single complete relation
scheme thin_cyclic(int n);        // n >= 2: R_t = difference t
scheme directed_cycle_scheme(int n);  // distance partition of the n-cycle
scheme paley_tournament(int q);   // q prime, q % 4 == 3: quadratic residue classes

// Grammar: name "(" arg {"," arg} ")" with integer or nested scheme args.
// Names: one_class(m), thin_cyclic(n), directed_cycle(n),
// paley_tournament(q), wreath(inner, outer), lex_blowup(base, m) where the
// blowup clones each point of base into a fiber of m mutually complete
// points (wreath with a one-class inner). Throws errc::unknown_name /
// bad_params.
scheme catalog(const std::string& expr);

}  // namespace schemeforge
