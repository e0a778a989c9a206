#pragma once

#include "rnls/profile.hpp"
#include "rnls/transform.hpp"

namespace rnls {

/// D(t_k) = integral_0^{t_k} U(t_k - tau) F(tau) dtau on the field's own time
/// samples (composite trapezoid; the grid must contain tau = 0). Negative t_k
/// integrate with reversed orientation, so time reversal is consistent.
///
/// Evaluated spectrally: one forward transform per snapshot, cumulative
/// phase-weighted prefix sums, one inverse transform per output time.
SpaceTimeField duhamel_integral(const TransformPlan& plan, const SpaceTimeField& forcing,
                                int threads = 1);

/// Free evolution sampled on a time grid: column k is U(t_k) phi.
SpaceTimeField free_evolution_field(const TransformPlan& plan, const RadialProfile& phi,
                                    const TimeGrid& times, int threads = 1);

/// Index of the t = 0 node; throws if the grid lacks one.
Eigen::Index time_origin_index(const TimeGrid& times);

}  // namespace rnls
