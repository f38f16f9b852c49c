#pragma once

#include "ks/field.hpp"
#include "ks/heatmap.hpp"
#include "ks/run_config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace ks {

struct SimulateOptions {
    bool write_csv = false;
    bool zero_initial = false;  ///< start from u = 0 instead of seeded noise
    HeatmapSpec heatmap;
};

/// Run the solver and write trajectory.bin plus heatmap.ppm (and
/// trajectory.csv on request) into config.out_dir.
int cmd_simulate(const RunConfig& config, const SimulateOptions& options = {});

/// Stripe analysis of a stored trajectory: overlay.ppm, events.csv,
/// density.csv, stripe_mask.bin.  Solver fields come from the trajectory
/// file; sigma, t_transient, min_stripe_width and out_dir come from the
/// given config.
int cmd_stripes(const RunConfig& config, const std::filesystem::path& trajectory_path);

/// Per-mode measured vs. theoretical linear growth rates -> linear_check.csv.
/// Measures modes 1..max_mode (default: every unstable mode plus a margin
/// of five, capped at the dealias cutoff).
int cmd_linear_check(const RunConfig& config, int max_mode = 0);

/// Stripe density across domain lengths and seeds, run on up to `jobs`
/// threads -> density_sweep.csv (per-L mean/std) and density_sweep_runs.csv
/// (one row per run).  Per-run failures are reported and make the exit
/// status nonzero, without discarding completed rows.
int cmd_density_sweep(const RunConfig& base, const std::vector<double>& lengths,
                      const std::vector<std::uint64_t>& seeds, int jobs);

/// Leading Lyapunov exponent of a seeded run -> lyapunov.csv + summary line.
int cmd_lyapunov(const RunConfig& config);

/// Unstable-mode table as CSV (n, k, rate) on the given stream.
int cmd_modes(const RunConfig& config, std::ostream& os);

/// Exponential growth rate of mode n measured from a nonlinear simulation
/// seeded with u = amplitude * cos(k_n x), over t_measure time units.
double measured_mode_rate(const Grid& grid, int n, double dt, double t_measure,
                          double amplitude);

/// Grid size for a swept domain length, keeping the base config's spacing.
int scaled_n_points(const RunConfig& base, double length);

}  // namespace ks
