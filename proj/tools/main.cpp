#include <CLI/CLI.hpp>
#include <iostream>

#include "cli/commands.hpp"

namespace {

using namespace np;
using namespace np::cli;

Integer parse_prime_arg(const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    fail(ErrorKind::Parse, "'" + text + "' is not a decimal integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge and Newton polygons of Laurent polynomial supports"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string file;
  std::string prime;
  std::string strategy_name = "first-lex";
  std::uint64_t bound = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("FILE", file, "input document (JSON)")->required();
    cmd->add_option("--format", format_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto* hodge = app.add_subcommand("hodge", "weights, Hodge numbers and the Hodge polygon");
  add_common(hodge);
  auto* diagonal = app.add_subcommand("diagonal", "exact Newton polygon of a diagonal support");
  add_common(diagonal);
  diagonal->add_option("-p,--prime", prime, "prime")->required();
  auto* classes = app.add_subcommand("ordinary-classes", "residue classes of ordinary primes");
  add_common(classes);
  auto* decompose = app.add_subcommand("decompose", "facial and collapsing decompositions");
  add_common(decompose);
  decompose->add_option("--strategy", strategy_name, "first-lex, max-invariant-factor or exhaustive-min-dstar")
      ->check(CLI::IsMember({"first-lex", "max-invariant-factor", "exhaustive-min-dstar"}));
  decompose->add_option("-p,--prime", prime, "prime for the ordinariness certificate");
  auto* scan = app.add_subcommand("scan", "per-prime verdicts below a bound");
  add_common(scan);
  scan->add_option("--bound", bound, "exclusive prime bound")->required()->check(CLI::Range(2ull, 100000000ull));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const Format format = *parse_format(format_name);
    const InputDocument in = load_input(file);
    Report report;
    if (*hodge) {
      report = cmd_hodge(in);
    } else if (*diagonal) {
      report = cmd_diagonal(in, parse_prime_arg(prime));
    } else if (*classes) {
      report = cmd_ordinary_classes(in);
    } else if (*decompose) {
      std::optional<Integer> p;
      if (!prime.empty()) p = parse_prime_arg(prime);
      report = cmd_decompose(in, *parse_strategy(strategy_name), p);
    } else {
      report = cmd_scan(in, bound);
    }
    std::cout << render(report, format);
    return std::cout.good() ? kExitOk : kExitInput;
  } catch (const Error& e) {
    std::cerr << "np: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "np: " << e.what() << "\n";
    return kExitInput;
  }
}
