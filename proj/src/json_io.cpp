#include "schemeforge/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schemeforge/closure.hpp"
#include "schemeforge/generators.hpp"
#include "schemeforge/wdrd.hpp"

namespace schemeforge {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& where, const std::string& what) {
  fail(errc::input_error, where + ": " + what);
}

const json& field(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.is_object()) bad_input(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_input(where + "/" + key, "missing");
  return *it;
}

int int_field(const json& obj, const std::string& where, const std::string& key) {
  const json& v = field(obj, where, key);
  if (!v.is_number_integer()) bad_input(where + "/" + key, "expected an integer");
  return v.get<int>();
}

json scheme_header(const scheme& s) {
  return json{{"name", s.name}, {"points", s.n}, {"classes", s.d}};
}

json sets_json(const std::vector<std::vector<int>>& sets) {
  json arr = json::array();
  for (const auto& t : sets) arr.push_back(t);
  return arr;
}

// Two-space indent with short arrays kept inline; object keys iterate in
// nlohmann's sorted order, so output is byte-deterministic.
void pretty(const json& j, std::string& out, int indent) {
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out.append(static_cast<std::size_t>(indent) + 2, ' ');
      out += json(it.key()).dump();
      out += ": ";
      pretty(it.value(), out, indent + 2);
    }
    out += "\n";
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    std::string flat = j.dump();
    if (flat.size() <= 72 && flat.find('{') == std::string::npos) {
      out += flat;
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out.append(static_cast<std::size_t>(indent) + 2, ' ');
      pretty(j[i], out, indent + 2);
    }
    out += "\n";
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "]";
    return;
  }
  out += j.dump();
}

std::string dump(const json& j) {
  std::string out;
  pretty(j, out, 0);
  out += "\n";
  return out;
}

std::string set_text(const std::vector<int>& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + "}";
}

std::string sets_text(const std::vector<std::vector<int>>& sets) {
  if (sets.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + set_text(sets[i]);
  return out;
}

json ppoly_json(const ppoly_ordering& o) {
  return json{{"generator", o.generator}, {"order", o.order}};
}

json candidate_json(const candidate_result& cr) {
  json c{{"arcs", cr.arcs},
         {"verdict", cr.admissible ? "ADMISSIBLE" : "EXCLUDED"},
         {"tag", cr.tag}};
  if (cr.ppoly) c["witness"] = ppoly_json(*cr.ppoly);
  if (cr.wreath_class) {
    json w{{"class", *cr.wreath_class}};
    if (cr.quotient_ppoly) w["quotient_order"] = ppoly_json(*cr.quotient_ppoly);
    c["witness"] = w;
  }
  if (!cr.wedge_subset.empty()) {
    json w{{"subset", cr.wedge_subset}};
    if (cr.wedge_uniform_parameters)
      w["uniform_parameters"] = *cr.wedge_uniform_parameters;
    c["witness"] = w;
  }
  return c;
}

json classification_json(const scheme& s, const classification& c) {
  json candidates = json::array();
  for (const auto& cr : c.candidates) candidates.push_back(candidate_json(cr));
  json out{{"schema_version", 1},    {"command", "classify"},
           {"scheme", scheme_header(s)}, {"applicable", c.applicable},
           {"labeling", c.labeling},     {"candidates", candidates},
           {"admissible", sets_json(c.admissible)}};
  if (!c.applicable) out["reason"] = c.reason;
  return out;
}

std::string candidate_line(const candidate_result& cr) {
  std::string line = "  " + set_text(cr.arcs);
  line.resize(std::max<std::size_t>(line.size(), 14), ' ');
  line += cr.admissible ? "ADMISSIBLE  " : "EXCLUDED    ";
  line += cr.tag;
  if (cr.ppoly) {
    line += " (generator " + std::to_string(cr.ppoly->generator) + ", order";
    for (int t : cr.ppoly->order) line += " " + std::to_string(t);
    line += ")";
  }
  if (cr.wreath_class) line += " (over class " + std::to_string(*cr.wreath_class) + ")";
  if (!cr.wedge_subset.empty()) line += " (K = " + set_text(cr.wedge_subset) + ")";
  return line + "\n";
}

std::string classification_text(const scheme& s, const classification& c) {
  std::ostringstream out;
  out << "scheme " << s.name << ": " << s.n << " points, " << s.d << " classes\n";
  if (!c.applicable) {
    out << "not applicable: " << c.reason << "\n";
    return out.str();
  }
  out << "labeling:";
  for (int v : c.labeling) out << " " << v;
  out << "\ncandidates:\n";
  for (const auto& cr : c.candidates) out << candidate_line(cr);
  out << "admissible: " << sets_text(c.admissible) << "\n";
  return out.str();
}

}  // namespace

scheme scheme_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_input("", e.what());
  }
  if (!j.is_object()) bad_input("", "expected a top-level object");
  if (int_field(j, "", "schema_version") != 1)
    bad_input("/schema_version", "unsupported version");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";

  if (j.contains("circulant")) {
    const json& c = j["circulant"];
    circulant_spec spec;
    spec.modulus = int_field(c, "/circulant", "modulus");
    const json& classes = field(c, "/circulant", "classes");
    if (!classes.is_array()) bad_input("/circulant/classes", "expected an array");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const json& cls = classes[i];
      if (!cls.is_array())
        bad_input("/circulant/classes/" + std::to_string(i), "expected an array");
      std::vector<int> vals;
      for (const json& v : cls) {
        if (!v.is_number_integer())
          bad_input("/circulant/classes/" + std::to_string(i), "expected integers");
        vals.push_back(v.get<int>());
      }
      spec.classes.push_back(std::move(vals));
    }
    circulant_result r = circulant_scheme(spec);
    if (!r)
      throw error(errc::non_constant_intersection,
                  "difference classes fail intersection-number constancy", *r.witness);
    r.sch->name = name;
    return std::move(*r.sch);
  }

  int n = int_field(j, "", "points");
  const json& rels = field(j, "", "relations");
  if (!rels.is_array()) bad_input("/relations", "expected an array");
  std::vector<pair_list> pair_sets(rels.size());
  std::vector<bool> seen(rels.size(), false);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::string where = "/relations/" + std::to_string(i);
    int index = int_field(rels[i], where, "index");
    if (index < 1 || index > static_cast<int>(rels.size()))
      bad_input(where + "/index", "relation indices must be 1..#relations");
    if (seen[static_cast<std::size_t>(index - 1)]) bad_input(where + "/index", "duplicate index");
    seen[static_cast<std::size_t>(index - 1)] = true;
    const json& pairs = field(rels[i], where, "pairs");
    if (!pairs.is_array()) bad_input(where + "/pairs", "expected an array");
    pair_list& dst = pair_sets[static_cast<std::size_t>(index - 1)];
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const json& pr = pairs[t];
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
          !pr[1].is_number_integer())
        bad_input(where + "/pairs/" + std::to_string(t), "expected [x, y]");
      dst.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
  }
  scheme s = build_scheme(n, pair_sets, name);
  if (j.contains("provenance") && j["provenance"].is_string())
    s.provenance = j["provenance"].get<std::string>();
  return s;
}

std::string scheme_to_json_text(const scheme& s) {
  json rels = json::array();
  for (int i = 1; i <= s.d; ++i) {
    json pairs = json::array();
    for (const auto& [x, y] : relation_pairs(s, i)) pairs.push_back(json::array({x, y}));
    rels.push_back(json{{"index", i}, {"pairs", pairs}});
  }
  json j{{"schema_version", 1}, {"name", s.name}, {"points", s.n}, {"relations", rels}};
  if (!s.provenance.empty()) j["provenance"] = s.provenance;
  return dump(j);
}

scheme load_scheme_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::input_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  scheme s = scheme_from_json_text(buf.str());
  if (s.name.empty()) {
    std::string base = path;
    if (auto pos = base.find_last_of('/'); pos != std::string::npos) base = base.substr(pos + 1);
    if (auto pos = base.rfind(".json"); pos != std::string::npos) base = base.substr(0, pos);
    s.name = base;
  }
  return s;
}

scheme resolve_scheme_input(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) return catalog(arg.substr(8));
  return load_scheme_file(arg);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::input_error, "cannot write " + path);
  out << content;
}

std::string render_identity_report(const scheme& s, const identity_report& r,
                                   const std::string& format) {
  if (format == "json") {
    json violations = json::array();
    for (const auto& v : r.violations)
      violations.push_back(json{{"identity", v.identity}, {"index", v.index}});
    return dump(json{{"schema_version", 1},
                     {"command", "verify"},
                     {"scheme", scheme_header(s)},
                     {"checked", r.checked},
                     {"violations", violations},
                     {"pass", r.pass()}});
  }
  std::ostringstream out;
  out << "scheme " << s.name << ": " << s.n << " points, " << s.d << " classes\n";
  for (const auto& id : r.checked) {
    bool bad = std::any_of(r.violations.begin(), r.violations.end(),
                           [&](const identity_violation& v) { return v.identity == id; });
    std::string line = "  " + id;
    line.resize(std::max<std::size_t>(line.size(), 22), ' ');
    out << line << (bad ? "FAIL" : "PASS") << "\n";
  }
  for (const auto& v : r.violations) {
    out << "  violation " << v.identity << " at (";
    for (std::size_t i = 0; i < v.index.size(); ++i) out << (i ? "," : "") << v.index[i];
    out << ")\n";
  }
  out << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_analysis(const scheme& s, const std::string& format) {
  relation_profile_t prof = relation_profile(s);
  std::vector<ppoly_ordering> ppoly = p_polynomial_orderings(s);
  std::optional<wreath_split> split = wreath_decomposition(s);
  std::vector<std::vector<int>> closed;
  if (s.d <= 12) closed = all_closed_subsets(s);

  if (format == "json") {
    json orderings = json::array();
    for (const auto& o : ppoly) orderings.push_back(ppoly_json(o));
    json j{{"schema_version", 1},
           {"command", "analyze"},
           {"scheme", scheme_header(s)},
           {"valencies", s.k},
           {"star", s.star},
           {"nonsymmetric_pairs", prof.nonsymmetric_pairs},
           {"commutative", prof.commutative},
           {"p_polynomial", orderings},
           {"closed_subsets", sets_json(closed)}};
    if (split)
      j["wreath_decomposition"] = json{{"class", split->a},
                                       {"fiber_size", split->fibers[0].size()},
                                       {"quotient", scheme_header(split->quotient)}};
    else
      j["wreath_decomposition"] = nullptr;
    return dump(j);
  }

  std::ostringstream out;
  out << "scheme " << s.name << ": " << s.n << " points, " << s.d << " classes\n";
  out << "  valencies:";
  for (auto v : s.k) out << " " << v;
  out << "\n  star:";
  for (int v : s.star) out << " " << v;
  out << "\n  nonsymmetric pairs: " << prof.nonsymmetric_pairs;
  out << "\n  commutative: " << (prof.commutative ? "yes" : "no") << "\n";
  if (ppoly.empty()) {
    out << "  p-polynomial: no\n";
  } else {
    for (const auto& o : ppoly) {
      out << "  p-polynomial ordering, generator " << o.generator << ":";
      for (int t : o.order) out << " " << t;
      out << "\n";
    }
  }
  out << "  closed subsets: " << sets_text(closed) << "\n";
  if (split)
    out << "  wreath decomposition: over class " << split->a << ", quotient "
        << split->quotient.n << " points " << split->quotient.d << " classes\n";
  else
    out << "  wreath decomposition: none\n";
  return out.str();
}

std::string render_oracle(const scheme& s, const std::vector<std::vector<int>>& sets,
                          const std::string& format) {
  if (format == "json")
    return dump(json{{"schema_version", 1},
                     {"command", "oracle"},
                     {"scheme", scheme_header(s)},
                     {"admissible", sets_json(sets)}});
  std::ostringstream out;
  out << "scheme " << s.name << ": " << s.n << " points, " << s.d << " classes\n";
  out << "admissible arc sets: " << sets_text(sets) << "\n";
  return out.str();
}

std::string render_classification(const scheme& s, const classification& c,
                                  const std::string& format) {
  if (format == "json") return dump(classification_json(s, c));
  return classification_text(s, c);
}

std::string render_crosscheck(const scheme& s, const crosscheck_report& r,
                              const std::string& format) {
  if (format == "json") {
    json j = classification_json(s, r.cls);
    j["command"] = "crosscheck";
    j["crosscheck"] = json{{"classifier", sets_json(r.classifier)},
                           {"oracle", sets_json(r.oracle)},
                           {"only_classifier", sets_json(r.only_classifier)},
                           {"only_oracle", sets_json(r.only_oracle)},
                           {"pass", r.pass}};
    return dump(j);
  }
  std::ostringstream out;
  out << classification_text(s, r.cls);
  out << "oracle:      " << sets_text(r.oracle) << "\n";
  out << "classifier:  " << sets_text(r.classifier) << "\n";
  if (!r.pass) {
    out << "only in classifier: " << sets_text(r.only_classifier) << "\n";
    out << "only in oracle:     " << sets_text(r.only_oracle) << "\n";
  }
  out << "crosscheck: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_enumeration(const std::vector<scheme>& schemes, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const scheme& s : schemes) {
      relation_profile_t prof = relation_profile(s);
      json h = scheme_header(s);
      h["nonsymmetric_pairs"] = prof.nonsymmetric_pairs;
      arr.push_back(h);
    }
    return dump(json{{"schema_version", 1},
                     {"command", "enumerate"},
                     {"count", schemes.size()},
                     {"schemes", arr}});
  }
  std::ostringstream out;
  for (const scheme& s : schemes) {
    relation_profile_t prof = relation_profile(s);
    out << s.name << ": n=" << s.n << " d=" << s.d
        << " nonsym_pairs=" << prof.nonsymmetric_pairs << "\n";
  }
  out << schemes.size() << " schemes\n";
  return out.str();
}

}  // namespace schemeforge
