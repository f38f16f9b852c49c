#pragma once

#include "ks/dynamics.hpp"
#include "ks/field.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace ks {

/// Every knob of a run: solver, analysis, and output parameters plus the
/// RNG seed.  Serializable to a flat key = value text file ('#' starts a
/// comment); the full config is embedded in every output a run produces.
struct RunConfig {
    double length = 0.0;  // set in ctor (default 32 pi)
    int n_points = 256;
    double dt = 0.05;
    double t_end = 200.0;
    int save_stride = 5;
    std::uint64_t seed = 1;
    double sigma = 2.0;
    double t_transient = 50.0;
    bool zero_mean_projection = true;
    double min_stripe_width = 0.0;
    double delta0 = 1e-7;
    double renorm_interval = 1.0;
    std::string out_dir = "out";

    RunConfig();

    Grid grid() const { return Grid(length, n_points); }
    SolverParams solver_params() const;
    void validate() const;

    std::string to_text() const;
    static RunConfig from_text(const std::string& text);
    static RunConfig load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    bool operator==(const RunConfig&) const = default;
};

/// Parse a scalar that may carry a "pi" suffix: "32pi" -> 32*pi, "pi" -> pi.
double parse_scalar(const std::string& token);

}  // namespace ks
