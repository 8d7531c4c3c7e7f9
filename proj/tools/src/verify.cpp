#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "padic_frames_cli/cli.hpp"

namespace padic_frames::cli {

namespace {

constexpr double kStructuralTol = 1e-12;
constexpr double kGramTol = 1e-8;

Rng make_rng(std::uint64_t seed, std::int64_t p, Suite s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(s)};
  return Rng(seq);
}

// Largest total level m + k with p^(m+k) <= budget.
int level_budget(const GroupContext& ctx, std::int64_t budget) {
  int l = 0;
  while (l < ctx.max_level() && ctx.pow(l + 1) <= budget) ++l;
  return l;
}

std::pair<int, int> random_levels(int total, Rng& rng) {
  std::uniform_int_distribution<int> t(0, total);
  const int m = t(rng);
  std::uniform_int_distribution<int> k(0, total - m);
  return {m, k(rng)};
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

class Tracker {
 public:
  Tracker(Suite s, std::int64_t p, int trials, std::uint64_t seed) : s_(s), p_(p), trials_(trials), seed_(seed) {}

  void record(const std::string& check, double error, double tol) {
    auto it = std::find_if(lines_.begin(), lines_.end(), [&](const CheckLine& l) { return l.check == check; });
    if (it == lines_.end()) {
      lines_.push_back({std::string(suite_name(s_)), check, p_, trials_, seed_, 0.0, tol, true});
      it = lines_.end() - 1;
    }
    it->max_error = std::max(it->max_error, error);
    // NaN fails
    if (!(error <= tol)) it->pass = false;
  }

  std::vector<CheckLine> lines() && { return std::move(lines_); }

 private:
  Suite s_;
  std::int64_t p_;
  int trials_;
  std::uint64_t seed_;
  std::vector<CheckLine> lines_;
};

void plancherel_trial(const GroupContext& ctx, Rng& rng, Tracker& t) {
  const auto [m, k] = random_levels(level_budget(ctx, 1024), rng);
  const StepFunction f = random_step_function(ctx, m, k, rng);
  const double nf = norm(f);
  const StepFunction fhat = fourier_fast(f);
  t.record("plancherel", rel(std::abs(norm(fhat) - nf), nf), kStructuralTol);
  t.record("roundtrip", std::max(sup_distance(inverse_fourier_fast(fhat), f),
                                 sup_distance(inverse_fourier(fourier(f)), f)),
           kStructuralTol);

  Complex mass{};
  for (const auto& [coset, value] : weil_periodize(f)) mass += value;
  t.record("weil_mass", std::abs(mass - integral(f)), kStructuralTol);

  const Section section = random_section(ctx, std::min(k, 2), 4, rng);
  const double n2 = nf * nf;
  t.record("phi_integral", rel(std::abs(spectral_symbol(f, section).integral().real() - n2), n2),
           kStructuralTol);
}

void grouplaw_trial(const GroupContext& ctx, int trial, Rng& rng, Tracker& t) {
  const Section section = trial % 2 == 0 ? Section(ctx) : random_section(ctx, 2, 4, rng);
  std::uniform_int_distribution<int> lv(0, 2);
  const StepFunction g = random_step_function(ctx, lv(rng), lv(rng), rng);
  const PrueferElement a = random_pruefer(ctx.p(), 2, rng);
  const PrueferElement b = random_pruefer(ctx.p(), 2, rng);
  t.record("group_law",
           sup_distance(translate(translate(g, a, section), b, section), translate(g, a + b, section)),
           kStructuralTol);
  const double ng = norm(g);
  t.record("isometry", rel(std::abs(norm(translate(g, a, section)) - ng), ng), kStructuralTol);

  // tau_b of a modulated indicator is (b, sigma_beta) f(x - b) for any lift of b.
  const std::int64_t n = ctx.pow(2);
  std::uniform_int_distribution<std::int64_t> res(0, n - 1);
  std::uniform_int_distribution<std::int64_t> lift(-5, 5);
  const PAdicRational shift = PAdicRational(ctx.p(), res(rng), 2) + PAdicRational(ctx.p(), lift(rng));
  const PAdicRational beta(ctx.p(), res(rng), lv(rng));
  const StepFunction f = indicator(ctx, shift, 0, beta);
  const PrueferElement x = random_pruefer(ctx.p(), 2, rng);
  const PAdicRational rep = x.representative() + PAdicRational(ctx.p(), lift(rng));
  const PAdicRational sigma = section_decompose(beta, section).sigma;
  t.record("modulated_phase",
           sup_distance(translate(f, x, section), character(rep, sigma) * pointwise_shift(f, rep)),
           kStructuralTol);
}

void lemmas_trial(const GroupContext& ctx, int trial, Rng& rng, Tracker& t) {
  const Section section = trial % 2 == 0 ? Section(ctx) : random_section(ctx, 2, 5, rng);
  std::uniform_int_distribution<int> lv(0, 2);
  const StepFunction f = random_step_function(ctx, lv(rng), lv(rng), rng);
  const TrigPolynomial theta = random_trig_polynomial(ctx, 2, 8, rng);
  t.record("norm_identity", check_norm_identity(f, theta, section).rel_error, kIdentityTol);
  t.record("frame_sum_identity", check_frame_sum_identity(f, theta, section).rel_error, kIdentityTol);

  const StepFunction g = synthesize(f, theta, section);
  const double fast = frame_sum(g, f, section);
  t.record("frame_sum_direct", rel(std::abs(fast - frame_sum_direct(g, f, section)), fast), kIdentityTol);
}

void gram_phi_trial(const GroupContext& ctx, const Config& config, int trial, Rng& rng, Tracker& t) {
  const Section section = trial % 2 == 0 ? Section(ctx) : random_section(ctx, 2, 4, rng);
  const int total = std::min(4, level_budget(ctx, 4096));
  int m = 0;
  int k = 0;
  do {
    std::tie(m, k) = random_levels(total, rng);
  } while (ctx.pow(m) > config.matrix_cap);
  const StepFunction f = random_step_function(ctx, m, k, rng);
  const SpectralSymbol phi = spectral_symbol(f, section);
  const auto eig = hermitian_eigenvalues(gram_matrix(f, section, m, config.matrix_cap));
  std::vector<double> expected;
  for (auto z : phi.values()) expected.push_back(z.real());
  std::sort(expected.begin(), expected.end());
  double diff = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) diff = std::max(diff, std::abs(expected[i] - eig[i]));
  t.record("gram_phi", diff, kGramTol);
}

}  // namespace

std::optional<std::vector<Suite>> parse_suite(std::string_view name) {
  if (name == "plancherel") return std::vector{Suite::plancherel};
  if (name == "grouplaw") return std::vector{Suite::grouplaw};
  if (name == "lemmas") return std::vector{Suite::lemmas};
  if (name == "gram-phi") return std::vector{Suite::gram_phi};
  if (name == "all") return std::vector{Suite::plancherel, Suite::grouplaw, Suite::lemmas, Suite::gram_phi};
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::plancherel: return "plancherel";
    case Suite::grouplaw: return "grouplaw";
    case Suite::lemmas: return "lemmas";
    case Suite::gram_phi: return "gram-phi";
  }
  return "";
}

int default_trials(Suite s) {
  switch (s) {
    case Suite::plancherel:
    case Suite::grouplaw: return 100;
    case Suite::lemmas: return 50;
    case Suite::gram_phi: return 20;
  }
  return 0;
}

std::vector<CheckLine> run_suite(Suite s, std::int64_t p, int trials, std::uint64_t seed, const Config& config) {
  if (!is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
  if (trials < 1) throw UsageError("--trials must be positive");
  const GroupContext ctx(p, config.max_level);
  Rng rng = make_rng(seed, p, s);
  Tracker tracker(s, p, trials, seed);
  for (int i = 0; i < trials; ++i) {
    switch (s) {
      case Suite::plancherel: plancherel_trial(ctx, rng, tracker); break;
      case Suite::grouplaw: grouplaw_trial(ctx, i, rng, tracker); break;
      case Suite::lemmas: lemmas_trial(ctx, i, rng, tracker); break;
      case Suite::gram_phi: gram_phi_trial(ctx, config, i, rng, tracker); break;
    }
  }
  return std::move(tracker).lines();
}

std::string to_json(const CheckLine& line) {
  nlohmann::ordered_json out;
  out["suite"] = line.suite;
  out["check"] = line.check;
  out["p"] = line.p;
  out["trials"] = line.trials;
  out["seed"] = line.seed;
  out["max_error"] = line.max_error;
  out["tol"] = line.tol;
  out["pass"] = line.pass;
  return out.dump();
}

}  // namespace padic_frames::cli
