#pragma once

// JSON and CSV formats.
//
//   StepFunction  {"p", "support_level", "constancy_level", "re": [...], "im": [...]}
//   PAdicRational "num/p^e" string, plain integer, or {"num": int, "exp": int}
//   PrueferElement {"res": int, "level": int}
//   Section       {"p": int, "offsets": [{"sigma": <rational>, "delta": <rational>}, ...]}
//   FrameReport   {"A", "B", "zero_measure", "is_frame", "is_tight", "is_parseval", "tol"}
//   CheckReport   {"lhs", "rhs", "rel_error", "pass", "seed"}
//   Phi CSV       "eta_class,value" header, one row per class
//
// Floats are written in shortest round-trip form, so output is byte-stable.
// Parse failures throw Error with a "$.field" path in the message.

#include <string>
#include <string_view>

#include "padic_frames/oracle.hpp"
#include "padic_frames/spectral.hpp"
#include "padic_frames/stepfn.hpp"

namespace padic_frames {

std::string format_double(double v);

/// max_level <= 0 picks the default cap for the prime in the document.
StepFunction step_function_from_json(std::string_view text, int max_level = 0);
std::string to_json(const StepFunction& f);

PAdicRational padic_rational_from_json(std::string_view text, std::int64_t p);
std::string to_json(const PAdicRational& x);

PrueferElement pruefer_from_json(std::string_view text, std::int64_t p);
std::string to_json(const PrueferElement& x);

Section section_from_json(std::string_view text, const GroupContext& context);
std::string to_json(const Section& section);

std::string to_json(const FrameReport& report);
std::string to_json(const CheckReport& report);

std::string to_csv(const SpectralSymbol& phi);

}  // namespace padic_frames
