#pragma once

#include "ks/field.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ks {

/// Spectral amplitude above which a run is declared numerically blown up.
/// The attractor keeps |u_hat_n| of order one, so any excursion this large
/// is a failure of the integration, not dynamics.
inline constexpr double kBlowupThreshold = 1e8;

struct SolverParams {
    Grid grid;
    double dt = 0.05;
    double t_end = 1.0;
    int save_stride = 5;
    /// Re-zero the mean mode after every step.  Disable only for
    /// moving-frame (Galilei boost) checks, where the mean carries the
    /// frame velocity.
    bool project_zero_mean = true;

    /// Throws std::invalid_argument when dt, t_end or save_stride are out
    /// of range (dt must lie in (0, 0.5]).
    void validate() const;
};

/// Time-ordered snapshots saved every save_stride steps, t = 0 included.
struct Trajectory {
    Grid grid;
    std::vector<double> times;
    std::vector<RealField> snapshots;

    size_t size() const { return times.size(); }
};

class BlowupError : public std::runtime_error {
public:
    BlowupError(long step_index_, int mode_, double magnitude_);
    long step_index;
    int mode;
    double magnitude;
};

/// Fourth-order exponential time differencing (ETDRK4) for
///   du/dt = L u + N(u),   L_n = k_n^2 - k_n^4,   N(u) = -(1/2) d/dx (u^2).
///
/// The linear part is integrated exactly through exp(dt L); the phi-function
/// weights are evaluated by averaging over a complex contour around each
/// dt*L_n, which stays accurate near L_n = 0.  The quadratic term is formed
/// pointwise in physical space and dealiased by the 2/3 rule, so the kept
/// band is alias-free.
class Etdrk4Stepper {
public:
    Etdrk4Stepper(const Grid& grid, double dt, bool project_zero_mean = true);

    /// Advance one step.  step_index is only used to label blow-up
    /// diagnostics.  Throws BlowupError when any |u_hat_n| exceeds
    /// kBlowupThreshold (or goes non-finite).
    SpectralField step(const SpectralField& state, long step_index = 0) const;

    double dt() const { return dt_; }
    const Grid& grid() const { return grid_; }

private:
    SpectralField nonlinear(const SpectralField& s) const;

    Grid grid_;
    double dt_;
    bool project_zero_mean_;
    // Per-mode weights over the half spectrum.
    std::vector<double> exp_full_, exp_half_, q_, f1_, f2_, f3_;
};

/// One ETDRK4 step with the given parameters (state must live on params.grid).
SpectralField ks_step(const SpectralField& state, const SolverParams& params);

/// Integrate from initial (projected to zero mean unless the flag is off)
/// and save every save_stride steps, including t = 0.  The step count is
/// rounded up to a whole number of save strides so saved times stay
/// uniformly spaced; the last saved time may therefore exceed t_end by less
/// than one stride.  Deterministic for identical inputs.
Trajectory evolve(const RealField& initial, const SolverParams& params);

/// Exact solution of the linearized dynamics: each mode is multiplied by
/// exp((k_n^2 - k_n^4) t).  Backward time (t < 0) anti-diffuses high modes;
/// the call is rejected when the amplification factor would overflow.
SpectralField linear_evolve_exact(const SpectralField& initial, double t);

/// u(x - a) via spectral phase shift; exact for band-limited fields and
/// equal to an index rotation when a is a whole number of grid cells.
RealField translate(const RealField& f, double a);

/// The reflection symmetry -u(-x), evaluated as an index remap (exact).
RealField reflect(const RealField& f);

/// The Galilei boost u(x - t v) + v.  Note the result has mean v.
RealField boost(const RealField& f, double v, double t);

/// iid uniform[-1, 1] samples, one per grid point, from a seeded 64-bit
/// generator.  The same seed always produces the same field.
RealField random_uniform_field(const Grid& grid, std::uint64_t seed);

}  // namespace ks
