#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "padic_frames_cli/cli.hpp"

namespace padic_frames::cli {

namespace {

using json = nlohmann::ordered_json;

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool matches(const FrameReport& r, const Constants& c) {
  return close(r.lower, c.lower, kConstantTol) && close(r.upper, c.upper, kConstantTol) &&
         close(r.zero_measure, c.zero_measure, kConstantTol);
}

json constants_json(const Constants& c) {
  return {{"A", c.lower}, {"B", c.upper}, {"zero_measure", c.zero_measure}};
}

}  // namespace

std::optional<Example> parse_example(std::string_view name) {
  if (name == "twoH") return Example::twoH;
  if (name == "twoH2") return Example::twoH2;
  if (name == "cH") return Example::cH;
  if (name == "cH2") return Example::cH2;
  return std::nullopt;
}

std::string_view example_name(Example e) {
  switch (e) {
    case Example::twoH: return "twoH";
    case Example::twoH2: return "twoH2";
    case Example::cH: return "cH";
    case Example::cH2: return "cH2";
  }
  return "";
}

void check_example_parameters(Example e, std::int64_t p, int n_or_m) {
  if (!is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
  switch (e) {
    case Example::twoH:
      if (p == 2) throw UsageError("twoH requires an odd prime p (use twoH2 for p = 2)");
      if (n_or_m < 1) throw UsageError("twoH requires n >= 1");
      break;
    case Example::twoH2:
      if (p != 2) throw UsageError("twoH2 requires p = 2");
      if (n_or_m < 1) throw UsageError("twoH2 requires n >= 1");
      break;
    case Example::cH:
    case Example::cH2:
      if (n_or_m < 1) throw UsageError(std::string(example_name(e)) + " requires c = p^m with m >= 1");
      break;
  }
}

StepFunction example_function(Example e, const GroupContext& ctx, int n) {
  const std::int64_t p = ctx.p();
  const PAdicRational origin = PAdicRational::zero(p);
  switch (e) {
    case Example::twoH:
    case Example::twoH2:
      // 1_H + 1_{a+H} with a = p^{-n}
      return indicator(ctx, origin, 0) + indicator(ctx, PAdicRational(p, 1, n), 0);
    case Example::cH:
      // sqrt(c) 1_{cH}, c = p^m
      return std::sqrt(static_cast<double>(ctx.pow(n))) * indicator(ctx, origin, n);
    case Example::cH2:
      // 1_{c^{-1}H}
      return {ctx, n, 0, std::vector<Complex>(static_cast<std::size_t>(ctx.pow(n)), Complex(1.0))};
  }
  throw Error("unknown example");
}

ExampleResult run_example(Example e, std::int64_t p, int n, const Section& section, const Config& config) {
  check_example_parameters(e, p, n);
  const GroupContext& ctx = section.context();
  if (ctx.p() != p) throw UsageError("--section: section prime differs from --p");

  ExampleResult r;
  r.example = e;
  r.p = p;
  r.n_or_m = n;
  const StepFunction f = example_function(e, ctx, n);
  r.phi = spectral_symbol(f, section);
  r.report = frame_report(r.phi, config.tol_rel);
  r.norm_squared = norm_squared(f);
  for (auto z : r.phi.values()) r.amplitude = std::max(r.amplitude, z.real());

  const double pn = static_cast<double>(ctx.pow(n));
  switch (e) {
    case Example::twoH:
      r.expected = {2.0 - 2.0 * std::cos(std::numbers::pi / pn), 4.0, 0.0};
      r.printed = r.expected;
      break;
    case Example::twoH2:
      r.expected = {2.0 - 2.0 * std::cos(std::numbers::pi / (pn / 2.0)), 4.0, 1.0 / pn};
      r.printed = r.expected;
      break;
    case Example::cH:
      r.expected = {1.0, 1.0, 0.0};
      r.printed = r.expected;
      break;
    case Example::cH2:
      r.expected = {pn * pn, pn * pn, (pn - 1.0) / pn};
      r.printed = {1.0, 1.0, (pn - 1.0) / pn};
      r.printed_amplitude = 1.0;
      break;
  }
  r.match_expected = matches(r.report, r.expected);
  r.match_paper = matches(r.report, r.printed);
  if (r.printed_amplitude && !close(r.amplitude, *r.printed_amplitude, kConstantTol)) {
    r.note = "computed Phi amplitude " + format_double(r.amplitude) + " differs from the printed amplitude " +
             format_double(*r.printed_amplitude) + "; the integral of Phi equals ||f||^2 = " +
             format_double(r.norm_squared) + ", which requires amplitude c^2";
  }

  r.gram_level = std::max(n, 1);
  r.gram_level = std::max(r.gram_level, f.support_level());
  if (ctx.pow(r.gram_level) <= config.matrix_cap) {
    r.gram_computed = true;
    r.gram_eigenvalues = hermitian_eigenvalues(gram_matrix(f, section, r.gram_level, config.matrix_cap));
    std::vector<double> expected;
    const std::int64_t repeat = ctx.pow(r.gram_level - r.phi.level());
    for (auto z : r.phi.values()) expected.insert(expected.end(), static_cast<std::size_t>(repeat), z.real());
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      r.gram_phi_diff = std::max(r.gram_phi_diff, std::abs(expected[i] - r.gram_eigenvalues[i]));
    }
  }
  return r;
}

std::string to_json(const ExampleResult& r) {
  json out;
  out["example"] = example_name(r.example);
  out["p"] = r.p;
  out[r.example == Example::cH || r.example == Example::cH2 ? "m" : "n"] = r.n_or_m;
  out["A"] = r.report.lower;
  out["B"] = r.report.upper;
  out["zero_measure"] = r.report.zero_measure;
  out["is_frame"] = r.report.is_frame;
  out["is_tight"] = r.report.is_tight;
  out["is_parseval"] = r.report.is_parseval;
  out["tol"] = r.report.tol;
  out["expected"] = constants_json(r.expected);
  out["match_expected"] = r.match_expected;
  out["printed"] = constants_json(r.printed);
  out["match_paper"] = r.match_paper;
  out["amplitude"] = r.amplitude;
  if (r.printed_amplitude) out["printed_amplitude"] = *r.printed_amplitude;
  out["integral_phi"] = r.phi.integral().real();
  out["norm_squared"] = r.norm_squared;
  if (r.gram_computed) {
    out["gram"] = {{"level", r.gram_level}, {"eigenvalues", r.gram_eigenvalues}, {"max_diff_vs_phi", r.gram_phi_diff}};
  } else {
    out["gram"] = {{"level", r.gram_level}, {"skipped", "p^M exceeds matrix cap"}};
  }
  std::vector<double> phi;
  for (auto z : r.phi.values()) phi.push_back(z.real());
  out["phi"] = phi;
  if (!r.note.empty()) out["note"] = r.note;
  return out.dump();
}

}  // namespace padic_frames::cli
