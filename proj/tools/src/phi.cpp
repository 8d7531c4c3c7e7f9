#include "padic_frames_cli/cli.hpp"

namespace padic_frames::cli {

PhiResult run_phi(const std::string& function_json, const std::optional<std::string>& section_json,
                  const Config& config) {
  const StepFunction f = step_function_from_json(function_json, config.max_level);
  const Section section = section_json ? section_from_json(*section_json, f.context()) : Section(f.context());
  SpectralSymbol phi = spectral_symbol(f, section);
  FrameReport report = frame_report(phi, config.tol_rel);
  return {std::move(phi), report};
}

}  // namespace padic_frames::cli
