#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "input.hpp"

namespace {

  using namespace semiconj;
  using namespace semiconj::cli;

  std::uint64_t parse_seed(std::string const& text) {
    try {
      std::size_t used = 0;
      auto const  v    = std::stoull(text, &used, 0);
      if (used == text.size()) {
        return v;
      }
    } catch (std::exception const&) {
    }
    throw UsageError("bad seed \"" + text + "\"");
  }

  std::string echo(int argc, char** argv) {
    std::string out = "semiconj";
    for (int i = 1; i < argc; ++i) {
      out += ' ';
      out += argv[i];
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy relations on finite semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options     opts;
  std::string seed_text;
  app.add_flag("--json", opts.json, "Machine-readable JSON report");
  app.add_option("--seed", seed_text,
                 "Seed for randomized steps (default 0xC0FFEE, or $SEMICONJ_SEED)");
  app.add_flag("--force", opts.force, "Allow IS(5) and T(5)");
  app.add_flag("--fancy", opts.fancy, "UTF-8 box drawing");
  app.add_flag("--timing", opts.timing, "Append wall-clock time to the report");
  app.add_option("--samples", opts.samples,
                 "Random triples for lemma1 when the exhaustive check is too big");

  std::string              family, input, what;
  std::vector<std::string> params;

  auto* build = app.add_subcommand("build", "Write a semigroup file");
  build->add_option("family", family, "is | t | monogenic | sym | cyclic | "
                                      "from-generators | from-table")
      ->required()
      ->check(CLI::IsMember({"is", "t", "monogenic", "sym", "cyclic",
                             "from-generators", "from-table"}));
  build->add_option("params", params, "Family parameters or an input file");
  build->add_option("--out", opts.out, "Output path (default: stdout)");

  auto* analyze = app.add_subcommand("analyze", "Green's structure and eggboxes");
  analyze->add_option("input", input, "Semigroup file or built-in family like is:3")
      ->required();

  auto* conj = app.add_subcommand("conjugacy", "Classes of a conjugacy relation");
  conj->add_option("input", input, "Semigroup file or built-in family")->required();
  conj->add_option("relation", what, "primary | tilde | action | character | group")
      ->required()
      ->check(CLI::IsMember({"primary", "tilde", "action", "character", "group"}));

  auto* verify = app.add_subcommand("verify", "Check a claim on a semigroup");
  verify->add_option("input", input, "Semigroup file or built-in family")->required();
  verify->add_option("claim", what,
                     "theorem1 | theorem2 | lemma1 | example1 | corollaries")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma1", "example1",
                             "corollaries"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opts.seed = default_seed;
    if (!seed_text.empty()) {
      opts.seed = parse_seed(seed_text);
    } else if (char const* env = std::getenv("SEMICONJ_SEED")) {
      opts.seed = parse_seed(env);
    }

    auto const started = std::chrono::steady_clock::now();
    Report     report;
    if (*build) {
      auto built = cli::build(family, params, opts);
      if (opts.out.empty()) {
        std::cout << built.text;
        return 0;
      }
      report = std::move(built.report);
    } else if (*analyze) {
      report = cli::analyze(input, opts);
    } else if (*conj) {
      report = cli::conjugacy(input, what, opts);
    } else {
      report = cli::verify(input, what, opts);
    }
    report.command = echo(argc, argv);
    if (opts.timing) {
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                     - started)
                           .count();
    }
    std::cout << render(report, opts.json);
    return report.exit_code();
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (semiconj::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
