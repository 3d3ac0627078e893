#pragma once

#include <string>
#include <vector>

#include "schemeforge/classify.hpp"
#include "schemeforge/scheme.hpp"

namespace schemeforge {

// Scheme files: {"schema_version": 1, "name": ..., "points": n,
// "relations": [{"index": i, "pairs": [[x,y], ...]}, ...]} with the diagonal
// implicit, or the shorthand {"schema_version": 1, "circulant": {"modulus":
// n, "classes": [[...], ...]}}. Readers throw errc::input_error carrying a
// JSON-pointer-style location for malformed input and the usual construction
// errors for well-formed input that fails validation. Writers emit sorted
// keys, two-space indent and a trailing newline; output re-reads to an
// identical scheme, tensor included.
scheme scheme_from_json_text(const std::string& text);
std::string scheme_to_json_text(const scheme& s);

scheme load_scheme_file(const std::string& path);

// Accepts a file path or "catalog:EXPR".
scheme resolve_scheme_input(const std::string& arg);

void write_file(const std::string& path, const std::string& content);

// Report renderers, format "json" or "text". JSON output is byte
// deterministic for a fixed input.
std::string render_identity_report(const scheme& s, const identity_report& r,
                                   const std::string& format);
std::string render_analysis(const scheme& s, const std::string& format);
std::string render_oracle(const scheme& s, const std::vector<std::vector<int>>& sets,
                          const std::string& format);
std::string render_classification(const scheme& s, const classification& c,
                                  const std::string& format);
std::string render_crosscheck(const scheme& s, const crosscheck_report& r,
                              const std::string& format);
std::string render_enumeration(const std::vector<scheme>& schemes, const std::string& format);

}  // namespace schemeforge
