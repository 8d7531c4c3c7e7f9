#include <iostream>

#include "CLI11.hpp"
#include "padic_frames_cli/cli.hpp"

using namespace padic_frames;
using namespace padic_frames::cli;

namespace {

struct Overrides {
  std::optional<double> tol;
  std::optional<int> max_level;
  std::optional<std::int64_t> matrix_cap;

  Config apply(Config c) const {
    if (tol) c.tol_rel = *tol;
    if (max_level) c.max_level = *max_level;
    if (matrix_cap) c.matrix_cap = *matrix_cap;
    return c;
  }
};

int cmd_example(const std::string& name, std::int64_t p, std::optional<int> n, std::optional<int> m,
                const std::string& section_path, const std::string& csv_path, const Config& config) {
  const auto example = parse_example(name);
  if (!example) throw UsageError("unknown example '" + name + "' (expected twoH, twoH2, cH or cH2)");
  const bool uses_m = *example == Example::cH || *example == Example::cH2;
  if (uses_m ? !m : !n) throw UsageError(name + " requires " + (uses_m ? "--m" : "--n"));
  if (uses_m ? n.has_value() : m.has_value()) {
    throw UsageError(name + " takes " + (uses_m ? "--m, not --n" : "--n, not --m"));
  }
  const int level = uses_m ? *m : *n;
  check_example_parameters(*example, p, level);

  const GroupContext ctx(p, config.max_level);
  const Section section = section_path.empty() ? Section(ctx) : section_from_json(read_file(section_path), ctx);
  const ExampleResult r = run_example(*example, p, level, section, config);
  if (!csv_path.empty()) write_file(csv_path, to_csv(r.phi));
  std::cout << cli::to_json(r) << '\n';
  return r.match_expected ? kPass : kFail;
}

int cmd_phi(const std::string& input, const std::string& section_path, const std::string& out_path,
            const Config& config) {
  const std::optional<std::string> section =
      section_path.empty() ? std::nullopt : std::optional<std::string>(read_file(section_path));
  const PhiResult r = run_phi(read_file(input), section, config);
  if (out_path == "-") {
    std::cout << to_csv(r.phi);
  } else if (!out_path.empty()) {
    write_file(out_path, to_csv(r.phi));
  }
  std::cout << padic_frames::to_json(r.report) << '\n';
  return kPass;
}

int cmd_verify(const std::string& suite, const std::vector<std::int64_t>& primes, std::optional<int> trials,
               std::uint64_t seed, const Config& config) {
  const auto suites = parse_suite(suite);
  if (!suites) throw UsageError("unknown suite '" + suite + "' (expected plancherel, grouplaw, lemmas, gram-phi or all)");
  bool all_pass = true;
  int checks = 0;
  int failed = 0;
  for (Suite s : *suites) {
    for (std::int64_t p : primes) {
      for (const CheckLine& line : run_suite(s, p, trials.value_or(default_trials(s)), seed, config)) {
        std::cout << cli::to_json(line) << '\n';
        ++checks;
        if (!line.pass) ++failed;
        all_pass = all_pass && line.pass;
      }
    }
  }
  std::cout << R"({"summary":{"checks":)" << checks << R"(,"failed":)" << failed << R"(,"pass":)"
            << (all_pass ? "true" : "false") << "}}\n";
  return all_pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frames of translates on the p-adic numbers: spectral symbols, frame bounds and checks",
               "padic-frames"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides overrides;
  app.add_option("--max-level", overrides.max_level, "Largest resolution level m+k (default: p^L <= 4096)");
  app.add_option("--matrix-cap", overrides.matrix_cap, "Largest Gram matrix dimension (default 243)");

  std::string example_name_arg;
  std::int64_t example_p = 0;
  std::optional<int> example_n;
  std::optional<int> example_m;
  std::string example_section;
  std::string example_csv;
  auto* example = app.add_subcommand("example", "Run one of the worked examples twoH, twoH2, cH, cH2");
  example->add_option("name", example_name_arg, "twoH | twoH2 | cH | cH2")->required();
  example->add_option("--p", example_p, "Prime")->required();
  example->add_option("--n", example_n, "Shift exponent n (twoH, twoH2)");
  example->add_option("--m", example_m, "Dilation exponent m, c = p^m (cH, cH2)");
  example->add_option("--section", example_section, "Section offsets JSON file");
  example->add_option("--csv", example_csv, "Write Phi as CSV to this path");
  example->add_option("--tol", overrides.tol, "Relative zero-set tolerance");

  std::string phi_input;
  std::string phi_section;
  std::string phi_out;
  auto* phi = app.add_subcommand("phi", "Spectral symbol and frame report of a step function");
  phi->add_option("--input", phi_input, "Step function JSON file")->required();
  phi->add_option("--section", phi_section, "Section offsets JSON file");
  phi->add_option("--out", phi_out, "Write Phi as CSV to this path ('-' for stdout)");
  phi->add_option("--tol", overrides.tol, "Relative zero-set tolerance");

  std::string verify_suite;
  std::vector<std::int64_t> verify_primes{2, 3, 5};
  std::optional<int> verify_trials;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run seeded verification suites");
  verify->add_option("suite", verify_suite, "plancherel | grouplaw | lemmas | gram-phi | all")->required();
  verify->add_option("--p", verify_primes, "Primes to test (default 2 3 5)");
  verify->add_option("--trials", verify_trials, "Trials per prime (default per suite)");
  verify->add_option("--seed", verify_seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Config config = overrides.apply(load_config());
    if (!(config.tol_rel > 0.0)) throw UsageError("--tol must be positive");
    if (*example) {
      return cmd_example(example_name_arg, example_p, example_n, example_m, example_section, example_csv, config);
    }
    if (*phi) return cmd_phi(phi_input, phi_section, phi_out, config);
    if (*verify) return cmd_verify(verify_suite, verify_primes, verify_trials, verify_seed, config);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
