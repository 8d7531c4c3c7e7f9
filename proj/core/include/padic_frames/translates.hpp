#pragma once

// Translation operators indexed by Q_p / Z_p.
//
// tau_{[b],C} acts on the Fourier side as multiplication by
// w_{[b],C}(gamma) = conj((b, eta_gamma)), where gamma = sigma_gamma + eta_gamma
// is the section decomposition.  These operators compose like the group
// Q_p / Z_p, unlike ordinary shifts by points of Q_p.

#include "padic_frames/stepfn.hpp"

namespace padic_frames {

Complex w_symbol(const PrueferElement& b, const Section& section, const PAdicRational& gamma);

/// tau_{[b],C} f.  The result has support level max(m, level(b)) and the
/// constancy level of f; throws if that exceeds max_level.
StepFunction translate(const StepFunction& f, const PrueferElement& b, const Section& section);

/// The classical shift x -> f(x - b).
StepFunction pointwise_shift(const StepFunction& f, const PAdicRational& b);

}  // namespace padic_frames
