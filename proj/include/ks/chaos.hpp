#pragma once

#include "ks/dynamics.hpp"
#include "ks/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ks {

/// Leading Lyapunov exponent estimate from two-trajectory renormalization.
struct LyapunovEstimate {
    double lambda1 = 0.0;         ///< time-averaged log growth rate (1/time)
    double renorm_interval = 0.0;
    int n_renorms = 0;
    std::vector<double> log_growth;  ///< log(||delta|| / delta0) per interval
    double std_error = 0.0;          ///< standard error of lambda1 over intervals
};

/// Benettin-style estimate of the leading exponent.
///
/// A fiducial trajectory and a copy perturbed by delta0 (in the discrete L2
/// norm, along a seeded zero-mean random direction) advance in lockstep.
/// Every renorm_interval the log separation growth is recorded and the
/// perturbed state is pulled back to distance delta0 along the current
/// difference direction.  Accumulation starts after t_transient and runs to
/// params.t_end.  Throws when the separation underflows to zero or blows
/// past the rescaling range.
LyapunovEstimate lyapunov1(const RealField& initial, const SolverParams& params,
                           double delta0 = 1e-7, double renorm_interval = 1.0,
                           double t_transient = 50.0, std::uint64_t direction_seed = 1);

/// Raw separation growth without renormalization: (t, log ||delta(t)||)
/// sampled every save_stride steps, stopping once ||delta|| exceeds 1 or
/// params.t_end is reached.  delta0 must be positive.
std::vector<std::pair<double, double>> separation_curve(const RealField& initial,
                                                        const SolverParams& params,
                                                        double delta0 = 1e-7,
                                                        std::uint64_t direction_seed = 1);

}  // namespace ks
