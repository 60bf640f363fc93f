#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using cotrace::cli::CommandOptions;

  CLI::App app{"cotrace: trace semantics of finite coalgebras"};
  app.require_subcommand(1);

  CommandOptions opt;
  std::string out_path;
  std::size_t depth = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    auto* file = sub->add_option("file", opt.file, "machine file (JSON)");
    if (needs_file) file->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto add_depth = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--depth", depth, "truncation depth");
    if (required) o->required();
    return o;
  };

  auto* semantics = app.add_subcommand("semantics", "per-state truncated languages of one engine");
  add_common(semantics, true);
  add_depth(semantics, true);
  semantics->add_option("--state", opt.state, "report one state only");
  semantics->add_option("--engine", opt.engine, "em, kleisli, logic or cia")
      ->check(CLI::IsMember({"em", "kleisli", "logic", "cia"}));

  auto* compare = app.add_subcommand("compare", "run every applicable engine and compare");
  add_common(compare, true);
  add_depth(compare, true);

  auto* laws = app.add_subcommand("laws", "check the distributive laws that apply to a machine");
  add_common(laws, false);
  laws->add_option("--seed", seed, "seed for sampled law inputs")->required();

  auto* strategies = app.add_subcommand("strategies", "trace strategies of an io system");
  add_common(strategies, true);
  add_depth(strategies, true)->description("bound on the number of operations");
  strategies->add_option("--state", opt.state, "report one state only");

  auto* counterexample = app.add_subcommand("counterexample", "logic-equal but trace-distinct states");
  counterexample->add_option("--out", out_path, "write the report here instead of stdout");
  add_depth(counterexample, false)->default_str("6");

  auto* determinise = app.add_subcommand("determinise", "subset construction from one state");
  add_common(determinise, true);
  determinise->add_option("--state", opt.state, "start state (default: the first)");
  determinise->add_flag("--dot", opt.dot, "print the DOT text alone");

  CLI11_PARSE(app, argc, argv);

  auto* sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  auto given = [&](const char* name) {
    const auto* o = sub->get_option_no_throw(name);
    return o && o->count() > 0;
  };
  if (given("--depth")) opt.depth = depth;
  if (given("--seed")) opt.seed = seed;

  try {
    const auto result = cotrace::cli::run_command(opt);
    const std::string text = result.text ? *result.text : result.report.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
      }
      out << text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
