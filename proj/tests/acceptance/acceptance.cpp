// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "padic_frames/padic_frames.hpp"
#include "padic_frames_cli/cli.hpp"

using namespace padic_frames;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

cli::ExampleResult example(cli::Example e, std::int64_t p, int n) {
  const GroupContext ctx(p);
  return cli::run_example(e, p, n, Section(ctx), cli::Config{});
}

Section alternating_section(const GroupContext& ctx, int trial, Rng& rng) {
  return trial % 2 == 0 ? Section(ctx) : random_section(ctx, 2, 5, rng);
}

// ---------------------------------------------------------------------------

void two_cosets(Outcome& out) {
  double dev = 0.0;
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const auto r = example(cli::Example::twoH, p, n);
    const double a = 2.0 - 2.0 * std::cos(std::numbers::pi / std::pow(p, n));
    const double da = std::abs(r.report.lower - a);
    const double db = std::abs(r.report.upper - 4.0);
    dev = std::max({dev, da, db});
    const std::string tag = "(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + ")";
    out.require(da <= 1e-9, tag + " A");
    out.require(db <= 1e-9, tag + " B");
    out.require(r.report.zero_measure == 0.0, tag + " zero_measure");
    out.require(r.match_paper, tag + " match_paper");
  }
  out.detail << "max |A-A*|,|B-4| = " << sci(dev) << " over 4 configurations";
}

void two_cosets_dyadic(Outcome& out) {
  double dev = 0.0;
  for (int n : {1, 2, 3}) {
    const auto r = example(cli::Example::twoH2, 2, n);
    const double a = 2.0 - 2.0 * std::cos(std::numbers::pi / std::pow(2.0, n - 1));
    const double da = std::abs(r.report.lower - a);
    const double db = std::abs(r.report.upper - 4.0);
    dev = std::max({dev, da, db});
    const std::string tag = "n=" + std::to_string(n);
    out.require(da <= 1e-9, tag + " A");
    out.require(db <= 1e-9, tag + " B");
    out.require(r.report.zero_measure == std::ldexp(1.0, -n), tag + " zero_measure");

    // Exhaustive enumeration of the 2^n classes: Phi(e) = |1 + zeta^e|^2 for
    // zeta a primitive 2^n-th root of unity; exactly one class gives zero.
    const int classes = 1 << n;
    int zeros = 0;
    std::vector<double> enumerated;
    for (int e = 0; e < classes; ++e) {
      const double v = std::norm(1.0 + std::polar(1.0, -2.0 * std::numbers::pi * e / classes));
      enumerated.push_back(v);
      if (v <= 1e-9) ++zeros;
    }
    std::vector<double> computed;
    for (auto z : r.phi.values()) computed.push_back(z.real());
    std::sort(enumerated.begin(), enumerated.end());
    std::sort(computed.begin(), computed.end());
    out.require(zeros == 1, tag + " one zero class");
    out.require(computed.size() == enumerated.size(), tag + " class count");
    for (std::size_t i = 0; i < std::min(computed.size(), enumerated.size()); ++i) {
      out.require(std::abs(computed[i] - enumerated[i]) <= 1e-12, tag + " class value");
    }
  }
  out.detail << "max |A-A*|,|B-4| = " << sci(dev) << ", zero_measure = 2^-n for n = 1,2,3";
}

void dilated_subgroup(Outcome& out) {
  double dev = 0.0;
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    const auto r = example(cli::Example::cH, p, m);
    for (auto z : r.phi.values()) dev = std::max(dev, std::abs(z - Complex(1.0)));
    out.require(r.report.is_parseval, "(p,m)=(" + std::to_string(p) + "," + std::to_string(m) + ") Parseval");
  }
  out.require(dev <= 1e-12, "Phi == 1");
  out.detail << "max |Phi-1| = " << sci(dev) << ", Parseval for 3 configurations";
}

void dilated_supergroup(Outcome& out) {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    const GroupContext ctx(p);
    const auto r = example(cli::Example::cH2, p, m);
    const double n = std::pow(p, m);
    const std::string tag = "(p,m)=(" + std::to_string(p) + "," + std::to_string(m) + ")";
    int support = 0;
    bool two_valued = true;
    for (auto z : r.phi.values()) {
      if (std::abs(z.real() - n * n) <= 1e-9 * n * n) {
        ++support;
      } else if (std::abs(z) > 1e-12) {
        two_valued = false;
      }
    }
    const double measure = static_cast<double>(support) / static_cast<double>(r.phi.size());
    out.require(two_valued, tag + " Phi in {0, n^2}");
    out.require(std::abs(measure - 1.0 / n) <= 1e-15, tag + " support measure 1/n");
    out.require(std::abs(r.report.zero_measure - (n - 1.0) / n) <= 1e-15, tag + " zero_measure");

    const StepFunction f = cli::example_function(cli::Example::cH2, ctx, m);
    const double ff = inner(f, f).real();
    out.require(std::abs(ff - n) <= 1e-12 * n, tag + " ||f||^2 = n");
    out.require(std::abs(r.phi.integral().real() - ff) <= 1e-12 * ff, tag + " integral Phi = ||f||^2");
    out.require(r.match_expected && !r.match_paper && !r.note.empty(), tag + " discrepancy flagged");
    if (p == 2 && m == 2) {
      out.detail << "n=4: amplitude " << format_double(r.amplitude) << " (printed "
                 << format_double(r.printed_amplitude.value_or(0.0)) << "), zero_measure "
                 << format_double(r.report.zero_measure) << ", integral " << format_double(r.phi.integral().real())
                 << "; flagged";
    }
  }
}

void gram_duality(Outcome& out) {
  Rng rng(20240501);
  const std::int64_t primes[] = {2, 3, 5};
  double dev = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::int64_t p = primes[t % 3];
    const GroupContext ctx(p);
    int m = 0;
    int k = 0;
    do {
      m = std::uniform_int_distribution<int>(0, 4)(rng);
      k = std::uniform_int_distribution<int>(0, 4 - m)(rng);
    } while (ctx.pow(m) > kDefaultMatrixCap);
    const Section section = alternating_section(ctx, t, rng);
    const StepFunction f = random_step_function(ctx, m, k, rng);
    const auto phi = spectral_symbol(f, section);
    const auto eig = hermitian_eigenvalues(gram_matrix(f, section, m));
    std::vector<double> expected;
    for (auto z : phi.values()) expected.push_back(z.real());
    std::sort(expected.begin(), expected.end());
    out.require(eig.size() == expected.size(), "spectrum size");
    for (std::size_t i = 0; i < std::min(eig.size(), expected.size()); ++i) {
      dev = std::max(dev, std::abs(eig[i] - expected[i]));
    }
  }
  out.require(dev <= 1e-8, "eigenvalues vs Phi");
  out.detail << "max |eig - Phi| = " << sci(dev) << " over 20 functions";
}

void identity_checks(Outcome& out) {
  double e21 = 0.0;
  double e22 = 0.0;
  int offsets = 0;
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    Rng rng(1000 + static_cast<std::uint64_t>(p));
    for (int t = 0; t < 50; ++t) {
      const Section section = alternating_section(ctx, t, rng);
      if (!section.is_canonical()) ++offsets;
      std::uniform_int_distribution<int> lv(0, 2);
      const StepFunction f = random_step_function(ctx, lv(rng), lv(rng), rng);
      const TrigPolynomial theta = random_trig_polynomial(ctx, 2, 8, rng);
      e21 = std::max(e21, check_norm_identity(f, theta, section).rel_error);
      e22 = std::max(e22, check_frame_sum_identity(f, theta, section).rel_error);
    }
  }
  out.require(e21 <= 1e-10, "norm identity");
  out.require(e22 <= 1e-10, "frame-sum identity");
  out.require(offsets > 0, "offset sections exercised");
  out.detail << "max rel error " << sci(e21) << " (norm), " << sci(e22) << " (frame sum); 150 pairs, " << offsets
             << " with offset sections";
}

void structural(Outcome& out) {
  // Plancherel, roundtrip, Weil mass balance, integral of Phi; group law,
  // isometry and the modulated-indicator phase on random data.
  for (auto suite : {cli::Suite::plancherel, cli::Suite::grouplaw}) {
    for (std::int64_t p : {2, 3, 5}) {
      const auto lines = cli::run_suite(suite, p, 100, 7, cli::Config{});
      out.require(!lines.empty(), "suite produced checks");
      for (const auto& line : lines) {
        out.require(line.max_error <= 1e-12, line.check + " p=" + std::to_string(p));
      }
    }
  }

  // Exhaustive phase identity for modulated indicators at level 2.
  double phase = 0.0;
  for (std::int64_t p : {2, 3}) {
    const GroupContext ctx(p);
    Section offset(ctx);
    offset.set_offset(PAdicRational::zero(p), PAdicRational(p, 2));
    offset.set_offset(PAdicRational(p, 1, 2), PAdicRational(p, -7));
    const std::int64_t n = ctx.pow(2);
    for (const Section& section : {Section(ctx), offset}) {
      for (std::int64_t br = 0; br < n; ++br) {
        const PAdicRational beta(p, br, 2);
        const StepFunction f = indicator(ctx, PAdicRational(p, 1, 1), 0, beta);
        const PAdicRational sigma = section_decompose(beta, section).sigma;
        for (std::int64_t xr = 0; xr < n; ++xr) {
          const PrueferElement x(p, xr, 2);
          const StepFunction lhs = translate(f, x, section);
          for (std::int64_t lift : {0, 2, -5}) {
            const PAdicRational rep = x.representative() + PAdicRational(p, lift);
            phase = std::max(phase, sup_distance(lhs, character(rep, sigma) * pointwise_shift(f, rep)));
          }
        }
      }
    }
  }
  out.require(phase <= 1e-12, "exhaustive phase identity");
  out.detail << "plancherel/roundtrip/weil/phi-integral/group-law/isometry over 300 trials each, exhaustive phase "
             << sci(phase);
}

void frame_inequality(Outcome& out) {
  int violations = 0;
  int configs = 0;
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const GroupContext ctx(p);
    const StepFunction f = cli::example_function(cli::Example::twoH, ctx, n);
    const auto r = check_frame_inequality(f, Section(ctx), 100, 500 + static_cast<std::uint64_t>(p * 10 + n));
    const double a = 2.0 - 2.0 * std::cos(std::numbers::pi / std::pow(p, n));
    const std::string tag = "twoH (" + std::to_string(p) + "," + std::to_string(n) + ")";
    violations += r.violations;
    ++configs;
    out.require(std::abs(r.attained_lower - a) <= 1e-9, tag + " lower bound attained");
    out.require(std::abs(r.attained_upper - 4.0) <= 1e-9, tag + " upper bound attained");
  }
  Rng rng(77);
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    for (int t = 0; t < 2; ++t) {
      const StepFunction f = random_step_function(ctx, 1, t, rng);
      const auto r = check_frame_inequality(f, alternating_section(ctx, t + 1, rng), 100, 900 + t);
      violations += r.violations;
      ++configs;
    }
  }
  const GroupContext c2(2);
  const auto twoh2 = check_frame_inequality(cli::example_function(cli::Example::twoH2, c2, 2), Section(c2), 100, 42);
  violations += twoh2.violations;
  ++configs;
  out.require(violations == 0, "no violations");
  out.detail << violations << " violations over " << configs << " configurations x 100 polynomials; twoH bounds attained";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"two-coset example, odd p: A = 2-2cos(pi/p^n), B = 4", two_cosets},
      {"two-coset example, p = 2: A = 2-2cos(pi/2^(n-1)), B = 4, zero measure 2^-n", two_cosets_dyadic},
      {"dilated subgroup sqrt(c) 1_cH: Phi = 1, Parseval", dilated_subgroup},
      {"1_{c^-1 H}: Phi = n^2 on measure 1/n, printed amplitude flagged", dilated_supergroup},
      {"Gram spectrum equals the Phi multiset", gram_duality},
      {"norm and frame-sum identities for synthesized functions", identity_checks},
      {"structural properties", structural},
      {"frame inequality sampling and bound attainment", frame_inequality},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    if (!out.pass) ++failed;
    std::printf("%s  criterion %zu  %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                out.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
