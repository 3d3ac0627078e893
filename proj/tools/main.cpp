#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schemeforge/classify.hpp"
#include "schemeforge/closure.hpp"
#include "schemeforge/generators.hpp"
#include "schemeforge/json_io.hpp"
#include "schemeforge/scheme.hpp"

namespace {

using namespace schemeforge;

// 0 success/PASS, 1 property FAIL, 2 input or usage error.
int exit_code(errc c) {
  switch (c) {
    case errc::non_constant_intersection:
    case errc::identity_violation:
      return 1;
    default:
      return 2;
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SCHEME_FORGE_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) set_thread_cap(t);
  }

  CLI::App app{"association scheme and digraph workbench"};
  app.require_subcommand(1);

  std::string input, format = "text", out_path, emit_dir;
  bool inject = false;
  int modulus = 0, modulus_to = 0;
  std::vector<std::string> wreath_args, blowup_args;

  auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input)
      sub->add_option("input", input, "scheme file or catalog:EXPR")->required();
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite on a scheme");
  common(verify, true);
  verify->add_flag("--inject", inject, "corrupt one tensor entry first (negative control)");

  CLI::App* analyze = app.add_subcommand("analyze", "profile a scheme");
  common(analyze, true);

  CLI::App* classify = app.add_subcommand("classify", "decide the admissible arc sets");
  common(classify, true);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force the admissible arc sets");
  common(oracle, true);

  CLI::App* crosscheck_cmd =
      app.add_subcommand("crosscheck", "compare classifier against the oracle");
  common(crosscheck_cmd, true);
  crosscheck_cmd->add_flag("--inject", inject,
                           "tamper with the classifier list (negative control)");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "list circulant schemes for a modulus range");
  enumerate_cmd->add_option("modulus", modulus, "modulus, 2..20")->required();
  enumerate_cmd->add_option("--to", modulus_to, "enumerate up to this modulus");
  enumerate_cmd->add_option("--emit-dir", emit_dir, "write one scheme file per instance");
  enumerate_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  enumerate_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* product = app.add_subcommand("product", "combine schemes");
  product->add_option("--wreath", wreath_args, "inner and outer scheme inputs")->expected(2);
  product->add_option("--lex-blowup", blowup_args, "base scheme input and fiber size")
      ->expected(2);
  product->add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "build a named scheme");
  catalog_cmd->add_option("expr", input, "catalog expression")->required();
  catalog_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      scheme s = resolve_scheme_input(input);
      if (inject && s.d >= 1) s.p.at(1, s.star[1], 0) += 1;
      identity_report rep = verify_identities(s);
      emit(out_path, render_identity_report(s, rep, format));
      return rep.pass() ? 0 : 1;
    }
    if (analyze->parsed()) {
      scheme s = resolve_scheme_input(input);
      emit(out_path, render_analysis(s, format));
      return 0;
    }
    if (classify->parsed()) {
      scheme s = resolve_scheme_input(input);
      emit(out_path, render_classification(s, classify_scheme(s), format));
      return 0;
    }
    if (oracle->parsed()) {
      scheme s = resolve_scheme_input(input);
      emit(out_path, render_oracle(s, oracle_enumerate(s), format));
      return 0;
    }
    if (crosscheck_cmd->parsed()) {
      scheme s = resolve_scheme_input(input);
      crosscheck_report rep = crosscheck(s);
      if (inject) {
        std::vector<std::vector<int>> tampered = rep.classifier;
        if (tampered.empty())
          tampered.push_back({1});
        else
          tampered.erase(tampered.begin());
        classification cls = std::move(rep.cls);
        rep = crosscheck_against(s, std::move(tampered));
        rep.cls = std::move(cls);
      }
      emit(out_path, render_crosscheck(s, rep, format));
      return rep.pass ? 0 : 1;
    }
    if (enumerate_cmd->parsed()) {
      if (modulus_to == 0) modulus_to = modulus;
      std::vector<scheme> schemes;
      for (int n = modulus; n <= modulus_to; ++n)
        for (scheme& s : enumerate_circulant(n)) schemes.push_back(std::move(s));
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const scheme& s : schemes)
          write_file(emit_dir + "/" + s.name + ".json", scheme_to_json_text(s));
      }
      emit(out_path, render_enumeration(schemes, format));
      return 0;
    }
    if (product->parsed()) {
      scheme result;
      if (wreath_args.size() == 2 && blowup_args.empty()) {
        result = wreath_product(resolve_scheme_input(wreath_args[0]),
                                resolve_scheme_input(wreath_args[1]));
      } else if (blowup_args.size() == 2 && wreath_args.empty()) {
        int m = std::atoi(blowup_args[1].c_str());
        scheme base = resolve_scheme_input(blowup_args[0]);
        result = wreath_product(one_class_scheme(m), base);
        result.name = "lex_blowup(" + base.name + "," + std::to_string(m) + ")";
        result.provenance = result.name;
      } else {
        fail(errc::usage_error, "product needs exactly one of --wreath or --lex-blowup");
      }
      emit(out_path, scheme_to_json_text(result));
      return 0;
    }
    if (catalog_cmd->parsed()) {
      emit(out_path, scheme_to_json_text(catalog(input)));
      return 0;
    }
  } catch (const error& e) {
    std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
    return exit_code(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
