#include "ks/commands.hpp"

#include "ks/chaos.hpp"
#include "ks/dynamics.hpp"
#include "ks/linear_analysis.hpp"
#include "ks/spectral.hpp"
#include "ks/stripes.hpp"
#include "ks/trajectory_io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace ks {

namespace {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_config_comment(std::ostream& os, const RunConfig& config) {
    std::istringstream lines(config.to_text());
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << "\n";
}

std::ofstream open_csv(const fs::path& path, const RunConfig& config) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    write_config_comment(os, config);
    return os;
}

// PPM headers may carry '#' comment lines; splice the config in right after
// the magic so images are self-describing like every other output.
std::vector<std::uint8_t> ppm_with_config(std::vector<std::uint8_t> ppm,
                                          const RunConfig& config) {
    std::ostringstream comment;
    write_config_comment(comment, config);
    const std::string text = comment.str();
    const auto insert_at = std::find(ppm.begin(), ppm.end(), '\n');
    if (insert_at != ppm.end()) ppm.insert(insert_at + 1, text.begin(), text.end());
    return ppm;
}

std::string arc_bounds(const StripeSlice& slice, const std::vector<int>& indices) {
    std::string s;
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += '|';
        const StripeArc& arc = slice.arcs[static_cast<size_t>(indices[i])];
        s += std::to_string(arc.start_index) + ':' + std::to_string(arc.end_index);
    }
    return s;
}

}  // namespace

double measured_mode_rate(const Grid& grid, int n, double dt, double t_measure,
                          double amplitude) {
    if (n < 1 || 3 * n > grid.n_points)
        throw std::invalid_argument("measured_mode_rate: mode outside the dealiased band");
    SpectralField state(grid);
    state.coeffs[static_cast<size_t>(n)] = 0.5 * amplitude;  // u = amplitude cos(k_n x)

    const Etdrk4Stepper stepper(grid, dt);
    const long steps = static_cast<long>(std::max<long long>(1, std::llround(t_measure / dt)));
    for (long s = 1; s <= steps; ++s) state = stepper.step(state, s);

    const double final_amp = std::abs(state.coeffs[static_cast<size_t>(n)]);
    return std::log(final_amp / (0.5 * amplitude)) / (static_cast<double>(steps) * dt);
}

int scaled_n_points(const RunConfig& base, double length) {
    int n = static_cast<int>(std::llround(base.n_points * length / base.length));
    if (n % 2 != 0) ++n;
    return std::max(n, 16);
}

int cmd_simulate(const RunConfig& config, const SimulateOptions& options) {
    config.validate();
    fs::create_directories(config.out_dir);
    const Grid grid = config.grid();

    const RealField initial =
        options.zero_initial ? RealField(grid) : random_uniform_field(grid, config.seed);
    const Trajectory traj = evolve(initial, config.solver_params());

    const fs::path out(config.out_dir);
    write_trajectory(out / "trajectory.bin", traj, config);
    write_ppm(out / "heatmap.ppm",
              ppm_with_config(render_trajectory_heatmap(traj, options.heatmap), config));
    if (options.write_csv) write_trajectory_csv(out / "trajectory.csv", traj, config);

    std::cout << "simulate: " << traj.size() << " snapshots, t in [0, "
              << traj.times.back() << "] -> " << (out / "trajectory.bin").string() << "\n";
    return 0;
}

int cmd_stripes(const RunConfig& config, const std::filesystem::path& trajectory_path) {
    const TrajectoryFile file = read_trajectory(trajectory_path);

    RunConfig effective = file.config;
    effective.sigma = config.sigma;
    effective.t_transient = config.t_transient;
    effective.min_stripe_width = config.min_stripe_width;
    effective.out_dir = config.out_dir;
    fs::create_directories(effective.out_dir);
    const fs::path out(effective.out_dir);

    const TrackResult tracked = track(file.trajectory, effective.sigma, effective.t_transient,
                                      effective.min_stripe_width);
    const DensityReport report = density(file.trajectory, effective.sigma,
                                         effective.t_transient, effective.min_stripe_width);

    {
        std::ofstream os = open_csv(out / "events.csv", effective);
        os << "t_before,t_after,kind,before_arcs,after_arcs\n";
        // Events arrive in transition order, so a single cursor recovers the
        // slice pair of each event by its t_before.
        size_t slice_idx = 0;
        for (const StripeEvent& e : tracked.events) {
            while (slice_idx + 1 < tracked.slices.size() &&
                   tracked.slices[slice_idx].t < e.t_before)
                ++slice_idx;
            os << format_double(e.t_before) << ',' << format_double(e.t_after) << ','
               << to_string(e.kind) << ',' << arc_bounds(tracked.slices[slice_idx], e.before)
               << ',' << arc_bounds(tracked.slices[slice_idx + 1], e.after) << "\n";
        }
    }

    {
        std::ofstream os = open_csv(out / "density.csv", effective);
        os << "# mean_count = " << format_double(report.mean_count) << "\n";
        os << "# density = " << format_double(report.density) << "\n";
        os << "t,count\n";
        for (size_t i = 0; i < report.times.size(); ++i)
            os << format_double(report.times[i]) << ',' << report.counts[i] << "\n";
    }

    std::vector<std::vector<std::uint8_t>> masks;
    masks.reserve(tracked.slices.size());
    for (const StripeSlice& slice : tracked.slices) masks.push_back(slice_mask(slice));
    write_stripe_mask(out / "stripe_mask.bin", masks, file.trajectory.grid.n_points,
                      effective);

    std::vector<std::vector<double>> columns;
    columns.reserve(file.trajectory.size());
    for (const RealField& snap : file.trajectory.snapshots) columns.push_back(snap.values);
    HeatmapSpec spec;
    spec.overlay = true;
    write_ppm(out / "overlay.ppm", ppm_with_config(render_heatmap(columns, spec, &masks), effective));

    std::cout << "stripes: density = " << report.density << " (mean count "
              << report.mean_count << " over t >= " << effective.t_transient << "), events: "
              << tracked.pre_transient.births + tracked.post_transient.births << " births, "
              << tracked.pre_transient.deaths + tracked.post_transient.deaths << " deaths, "
              << tracked.pre_transient.merges + tracked.post_transient.merges << " merges, "
              << tracked.pre_transient.splits + tracked.post_transient.splits << " splits\n";
    return 0;
}

int cmd_linear_check(const RunConfig& config, int max_mode) {
    config.validate();
    fs::create_directories(config.out_dir);
    const Grid grid = config.grid();

    if (max_mode <= 0)
        max_mode = static_cast<int>(unstable_modes(grid).size() / 2) + 5;
    max_mode = std::min(max_mode, grid.dealias_cutoff());

    constexpr double amplitude = 1e-8;
    const double t_measure = 1.0;

    std::ofstream os = open_csv(fs::path(config.out_dir) / "linear_check.csv", config);
    os << "n,k,theoretical_rate,measured_rate,relative_error\n";
    double worst = 0.0;
    for (int n = 1; n <= max_mode; ++n) {
        const double k = grid.wavenumber(n);
        const double theory = growth_rate(k);
        const double measured = measured_mode_rate(grid, n, config.dt, t_measure, amplitude);
        // For marginal modes the relative error column degrades to the
        // absolute error.
        const double err = theory != 0.0 ? std::abs(measured - theory) / std::abs(theory)
                                         : std::abs(measured);
        worst = std::max(worst, err);
        os << n << ',' << format_double(k) << ',' << format_double(theory) << ','
           << format_double(measured) << ',' << format_double(err) << "\n";
    }
    std::cout << "linear-check: modes 1.." << max_mode << ", worst relative error = " << worst
              << "\n";
    return 0;
}

int cmd_density_sweep(const RunConfig& base, const std::vector<double>& lengths,
                      const std::vector<std::uint64_t>& seeds, int jobs) {
    base.validate();
    if (lengths.empty()) throw std::invalid_argument("density-sweep: no domain lengths given");
    const std::vector<std::uint64_t> seed_list = seeds.empty()
                                                     ? std::vector<std::uint64_t>{base.seed}
                                                     : seeds;

    struct Row {
        double length = 0.0;
        int n_points = 0;
        std::uint64_t seed = 0;
        double mean_count = 0.0;
        double density = 0.0;
    };
    struct Task {
        double length;
        std::uint64_t seed;
    };

    std::vector<Task> tasks;
    for (double L : lengths)
        for (std::uint64_t s : seed_list) tasks.push_back({L, s});

    std::vector<Row> rows(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<size_t> next{0};

    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            RunConfig cfg = base;
            cfg.length = tasks[i].length;
            cfg.n_points = scaled_n_points(base, tasks[i].length);
            cfg.seed = tasks[i].seed;
            try {
                const Grid grid = cfg.grid();
                const Trajectory traj =
                    evolve(random_uniform_field(grid, cfg.seed), cfg.solver_params());
                const DensityReport rep =
                    density(traj, cfg.sigma, cfg.t_transient, cfg.min_stripe_width);
                rows[i] = {cfg.length, cfg.n_points, cfg.seed, rep.mean_count, rep.density};
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };

    int n_threads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(tasks.size())));
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    fs::create_directories(base.out_dir);
    const fs::path out(base.out_dir);
    {
        std::ofstream os = open_csv(out / "density_sweep_runs.csv", base);
        os << "L,n_points,seed,mean_count,density\n";
        for (size_t i = 0; i < tasks.size(); ++i) {
            if (!errors[i].empty()) continue;
            os << format_double(rows[i].length) << ',' << rows[i].n_points << ','
               << rows[i].seed << ',' << format_double(rows[i].mean_count) << ','
               << format_double(rows[i].density) << "\n";
        }
    }
    {
        std::ofstream os = open_csv(out / "density_sweep.csv", base);
        os << "L,n_points,n_runs,density_mean,density_std\n";
        for (double L : lengths) {
            std::vector<double> densities;
            int n_points = 0;
            for (size_t i = 0; i < tasks.size(); ++i) {
                if (tasks[i].length == L && errors[i].empty()) {
                    densities.push_back(rows[i].density);
                    n_points = rows[i].n_points;
                }
            }
            if (densities.empty()) continue;
            double mean = 0.0;
            for (double d : densities) mean += d;
            mean /= static_cast<double>(densities.size());
            double var = 0.0;
            for (double d : densities) var += (d - mean) * (d - mean);
            const double stddev = densities.size() > 1
                                      ? std::sqrt(var / static_cast<double>(densities.size() - 1))
                                      : 0.0;
            os << format_double(L) << ',' << n_points << ',' << densities.size() << ','
               << format_double(mean) << ',' << format_double(stddev) << "\n";
            std::cout << "density-sweep: L = " << L << " -> density " << mean << " +/- "
                      << stddev << " over " << densities.size() << " run(s)\n";
        }
    }

    int status = 0;
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i].empty()) continue;
        std::cerr << "density-sweep: L = " << tasks[i].length << ", seed = " << tasks[i].seed
                  << " failed: " << errors[i] << "\n";
        status = 1;
    }
    return status;
}

int cmd_lyapunov(const RunConfig& config) {
    config.validate();
    fs::create_directories(config.out_dir);
    const Grid grid = config.grid();

    const LyapunovEstimate est =
        lyapunov1(random_uniform_field(grid, config.seed), config.solver_params(),
                  config.delta0, config.renorm_interval, config.t_transient, config.seed + 1);

    std::ofstream os = open_csv(fs::path(config.out_dir) / "lyapunov.csv", config);
    os << "# lambda1 = " << format_double(est.lambda1) << "\n";
    os << "# std_error = " << format_double(est.std_error) << "\n";
    os << "interval,t,log_growth,rate\n";
    for (size_t i = 0; i < est.log_growth.size(); ++i) {
        const double t = config.t_transient + (static_cast<double>(i) + 1.0) *
                                                  est.renorm_interval;
        os << i << ',' << format_double(t) << ',' << format_double(est.log_growth[i]) << ','
           << format_double(est.log_growth[i] / est.renorm_interval) << "\n";
    }

    std::cout << "lyapunov: lambda1 = " << est.lambda1 << " +/- " << est.std_error << " ("
              << est.n_renorms << " intervals of " << est.renorm_interval << ")\n";
    return 0;
}

int cmd_modes(const RunConfig& config, std::ostream& os) {
    const Grid grid = config.grid();
    const FastestMode fastest = fastest_mode(grid);
    write_config_comment(os, config);
    os << "# fastest discrete mode: n = " << fastest.discrete.n << ", k = "
       << format_double(fastest.discrete.k) << ", rate = "
       << format_double(fastest.discrete.rate) << "\n";
    os << "# continuum maximizer: k = " << format_double(fastest.k_star)
       << ", wavelength = " << format_double(fastest.wavelength_star)
       << ", inverse wavelength = " << format_double(fastest.inverse_wavelength_star) << "\n";
    os << "n,k,rate\n";
    for (const ModeInfo& m : unstable_modes(grid))
        os << m.n << ',' << format_double(m.k) << ',' << format_double(m.rate) << "\n";
    return 0;
}

}  // namespace ks
