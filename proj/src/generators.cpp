#include "schemeforge/generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

#include "schemeforge/closure.hpp"

namespace schemeforge {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int t = 2; t * t <= q; ++t)
    if (q % t == 0) return false;
  return true;
}

// Classes listed by least element; within a class ascending.
using partition = std::vector<std::vector<int>>;

bool negation_closed(const partition& classes, int n) {
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int v : classes[c]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  for (const auto& cls : classes) {
    int target = class_of[static_cast<std::size_t>((n - cls[0]) % n)];
    if (classes[static_cast<std::size_t>(target)].size() != cls.size()) return false;
    for (int v : cls)
      if (class_of[static_cast<std::size_t>((n - v) % n)] != target) return false;
  }
  return true;
}

// Lexicographic successor of a restricted growth string; false when done.
bool next_rgs(std::vector<int>& rgs) {
  std::size_t i = rgs.size();
  while (i-- > 1) {
    int cap = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i)) + 1;
    if (rgs[i] < cap) {
      ++rgs[i];
      std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0);
      return true;
    }
  }
  return false;
}

// All set partitions of `items` in restricted-growth-string order; each
// partition's blocks are ordered by first appearance.
template <typename F>
void for_each_partition(const std::vector<std::vector<int>>& items, F&& visit) {
  std::size_t m = items.size();
  std::vector<int> rgs(m, 0);
  do {
    int blocks = m ? *std::max_element(rgs.begin(), rgs.end()) + 1 : 0;
    partition classes(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < m; ++i)
      for (int v : items[i]) classes[static_cast<std::size_t>(rgs[i])].push_back(v);
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    visit(classes);
  } while (m > 1 && next_rgs(rgs));
}

scheme from_difference_classes(int n, const partition& classes, std::string name) {
  std::vector<pair_list> rels(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int diff : classes[c])
      for (int x = 0; x < n; ++x) rels[c].emplace_back(x, (x + diff) % n);
  return build_scheme(n, rels, std::move(name));
}

struct parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
  int integer() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(errc::bad_params, "expected an integer at offset " +
                                                 std::to_string(start) + " in \"" + text + "\"");
    return std::stoi(text.substr(start, pos - start));
  }

  scheme expr() {
    std::string name = ident();
    if (name.empty())
      fail(errc::unknown_name, "expected a catalog name at offset " + std::to_string(pos) +
                                   " in \"" + text + "\"");
    if (!eat('(')) fail(errc::bad_params, name + ": expected (");
    scheme out;
    if (name == "one_class") {
      out = one_class_scheme(integer());
    } else if (name == "thin_cyclic") {
      out = thin_cyclic(integer());
    } else if (name == "directed_cycle") {
      out = directed_cycle_scheme(integer());
    } else if (name == "paley_tournament") {
      out = paley_tournament(integer());
    } else if (name == "wreath") {
      scheme inner = expr();
      if (!eat(',')) fail(errc::bad_params, "wreath: expected two arguments");
      scheme outer = expr();
      out = wreath_product(inner, outer);
    } else if (name == "lex_blowup") {
      scheme base = expr();
      if (!eat(',')) fail(errc::bad_params, "lex_blowup: expected a fiber size");
      int m = integer();
      out = wreath_product(one_class_scheme(m), base);
      out.name = "lex_blowup(" + base.name + "," + std::to_string(m) + ")";
      out.provenance = out.name;
    } else {
      fail(errc::unknown_name, "unknown catalog name \"" + name + "\"");
    }
    if (!eat(')')) fail(errc::bad_params, name + ": expected )");
    return out;
  }
};

}  // namespace

void validate_circulant_spec(const circulant_spec& spec) {
  int n = spec.modulus;
  if (n < 2) fail(errc::bad_spec, "modulus must be at least 2");
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& cls : spec.classes) {
    if (cls.empty()) fail(errc::bad_spec, "empty difference class");
    for (int v : cls) {
      if (v < 1 || v >= n)
        fail(errc::bad_spec, "difference " + std::to_string(v) + " outside 1.." +
                                 std::to_string(n - 1));
      ++count[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 1; v < n; ++v) {
    if (count[static_cast<std::size_t>(v)] == 0)
      fail(errc::bad_spec, "difference " + std::to_string(v) + " not covered");
    if (count[static_cast<std::size_t>(v)] > 1)
      fail(errc::bad_spec, "difference " + std::to_string(v) + " repeated");
  }
  partition sorted = spec.classes;
  for (auto& cls : sorted) std::sort(cls.begin(), cls.end());
  if (!negation_closed(sorted, n))
    fail(errc::bad_spec, "negation does not permute the classes");
}

circulant_result circulant_scheme(const circulant_spec& spec) {
  validate_circulant_spec(spec);
  circulant_result r;
  try {
    r.sch = from_difference_classes(spec.modulus, spec.classes, "");
  } catch (const error& e) {
    if (e.code != errc::non_constant_intersection) throw;
    r.witness = e.witness;
  }
  return r;
}

std::vector<scheme> enumerate_circulant(int n) {
  if (n < 2 || n > 20)
    fail(errc::bad_range, "circulant enumeration expects modulus 2..20, got " +
                              std::to_string(n));
  std::vector<scheme> out;
  std::set<partition> seen;
  auto try_partition = [&](const partition& classes) {
    if (!negation_closed(classes, n)) return;
    if (!seen.insert(classes).second) return;
    circulant_spec spec{n, classes};
    circulant_result r = circulant_scheme(spec);
    if (r) {
      r.sch->name = "circ-n" + std::to_string(n) + "-" + std::to_string(out.size());
      out.push_back(std::move(*r.sch));
    }
  };

  if (n <= 8) {
    std::vector<std::vector<int>> singletons;
    for (int v = 1; v < n; ++v) singletons.push_back({v});
    for_each_partition(singletons, try_partition);
    return out;
  }

  for (int u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    // orbits of multiplication by u on {1..n-1}, by least element
    std::vector<std::vector<int>> orbits;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      std::vector<int> orb;
      int w = v;
      while (!done[static_cast<std::size_t>(w)]) {
        done[static_cast<std::size_t>(w)] = true;
        orb.push_back(w);
        w = static_cast<int>((static_cast<long long>(w) * u) % n);
      }
      std::sort(orb.begin(), orb.end());
      orbits.push_back(std::move(orb));
    }
    if (orbits.size() > 8) continue;
    for_each_partition(orbits, try_partition);
  }
  return out;
}

scheme one_class_scheme(int m) {
  if (m < 2) fail(errc::bad_params, "one_class needs at least 2 points");
  pair_list pairs;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y) pairs.emplace_back(x, y);
  return build_scheme(m, {pairs}, "one_class(" + std::to_string(m) + ")");
}

scheme thin_cyclic(int n) {
  if (n < 2) fail(errc::bad_params, "thin_cyclic needs modulus at least 2");
  partition classes;
  for (int v = 1; v < n; ++v) classes.push_back({v});
  return from_difference_classes(n, classes, "thin_cyclic(" + std::to_string(n) + ")");
}

scheme directed_cycle_scheme(int n) {
  scheme s = thin_cyclic(n);
  s.name = "directed_cycle(" + std::to_string(n) + ")";
  return s;
}

scheme paley_tournament(int q) {
  if (!is_prime(q) || q % 4 != 3)
    fail(errc::bad_params, "paley_tournament needs a prime congruent to 3 mod 4, got " +
                               std::to_string(q));
  std::set<int> residues;
  for (int x = 1; x < q; ++x)
    residues.insert(static_cast<int>((static_cast<long long>(x) * x) % q));
  partition classes(2);
  for (int v = 1; v < q; ++v) classes[residues.count(v) ? 0 : 1].push_back(v);
  return from_difference_classes(q, classes, "paley_tournament(" + std::to_string(q) + ")");
}

scheme catalog(const std::string& expr) {
  parser p{expr};
  scheme s = p.expr();
  p.skip();
  if (p.pos != expr.size())
    fail(errc::bad_params, "trailing input after catalog expression: \"" +
                               expr.substr(p.pos) + "\"");
  return s;
}

}  // namespace schemeforge
