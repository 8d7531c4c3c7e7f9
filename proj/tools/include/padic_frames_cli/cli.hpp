#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic_frames/padic_frames.hpp"

namespace padic_frames::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Invalid command-line parameters (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  double tol_rel = kDefaultTolRel;
  int max_level = 0;  // 0: per-prime default
  std::int64_t matrix_cap = kDefaultMatrixCap;
};

/// Defaults overlaid with the JSON file named by PADIC_FRAMES_CONFIG, if set.
Config load_config();
Config load_config_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

// ---- example ------------------------------------------------------------

enum class Example { twoH, twoH2, cH, cH2 };

std::optional<Example> parse_example(std::string_view name);
std::string_view example_name(Example e);

/// The generating function of an example.
StepFunction example_function(Example e, const GroupContext& context, int n_or_m);

/// Throws UsageError naming the violated precondition.
void check_example_parameters(Example e, std::int64_t p, int n_or_m);

struct Constants {
  double lower = 0.0;
  double upper = 0.0;
  double zero_measure = 0.0;
};

struct ExampleResult {
  Example example{};
  std::int64_t p = 0;
  int n_or_m = 0;
  SpectralSymbol phi{StepFunction::zero(GroupContext(2), 0, 0)};
  FrameReport report;
  double norm_squared = 0.0;

  int gram_level = 0;
  bool gram_computed = false;
  std::vector<double> gram_eigenvalues;
  double gram_phi_diff = 0.0;

  Constants expected;  // derived from the construction
  Constants printed;   // the published constants
  bool match_expected = false;
  bool match_paper = false;

  /// Largest Phi value (the amplitude on the support of Phi).
  double amplitude = 0.0;
  std::optional<double> printed_amplitude;
  std::string note;
};

inline constexpr double kConstantTol = 1e-9;

ExampleResult run_example(Example e, std::int64_t p, int n_or_m, const Section& section,
                          const Config& config);
std::string to_json(const ExampleResult& r);

// ---- phi ----------------------------------------------------------------

struct PhiResult {
  SpectralSymbol phi;
  FrameReport report;
};

PhiResult run_phi(const std::string& function_json, const std::optional<std::string>& section_json,
                  const Config& config);

// ---- verify -------------------------------------------------------------

enum class Suite { plancherel, grouplaw, lemmas, gram_phi };

std::optional<std::vector<Suite>> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckLine {
  std::string suite;
  std::string check;
  std::int64_t p = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

int default_trials(Suite s);
std::vector<CheckLine> run_suite(Suite s, std::int64_t p, int trials, std::uint64_t seed,
                                 const Config& config);
std::string to_json(const CheckLine& line);

}  // namespace padic_frames::cli
