// ks: spectral Kuramoto-Sivashinsky solver and stripe-analysis driver.

#include "ks/commands.hpp"
#include "ks/run_config.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral Kuramoto-Sivashinsky solver with stripe tracking, "
                 "linear-theory checks and Lyapunov diagnostics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, length_str;
    std::uint64_t seed = 0;
    int n_points = 0, save_stride = 0, jobs = 0;
    double dt = 0, t_end = 0, sigma = 0, t_transient = -1, min_stripe_width = -1;
    double delta0 = 0, renorm_interval = 0;
    bool no_projection = false;

    auto* opt_config = app.add_option("--config", config_path, "Run configuration file");
    auto* opt_out = app.add_option("--out", out_dir, "Output directory");
    auto* opt_seed = app.add_option("--seed", seed, "RNG seed (64-bit)");
    auto* opt_L = app.add_option("--L", length_str, "Domain length (accepts e.g. 32pi)");
    auto* opt_N = app.add_option("--N", n_points, "Grid points (even, >= 16)");
    auto* opt_dt = app.add_option("--dt", dt, "Time step");
    auto* opt_t_end = app.add_option("--t-end", t_end, "Final time");
    auto* opt_stride = app.add_option("--save-stride", save_stride, "Steps between saves");
    auto* opt_sigma = app.add_option("--sigma", sigma, "Stripe smoothing width");
    auto* opt_transient = app.add_option("--t-transient", t_transient, "Transient cutoff time");
    auto* opt_minw = app.add_option("--min-stripe-width", min_stripe_width,
                                    "Drop stripes narrower than this (0 = keep all)");
    auto* opt_delta0 = app.add_option("--delta0", delta0, "Initial separation norm");
    auto* opt_renorm = app.add_option("--renorm-interval", renorm_interval,
                                      "Time between Lyapunov renormalizations");
    app.add_flag("--no-projection", no_projection,
                 "Do not re-zero the mean mode (moving-frame runs)");
    app.add_option("--jobs", jobs, "Worker threads for sweeps");

    auto* sim = app.add_subcommand("simulate", "Integrate and write trajectory + heatmap");
    bool sim_csv = false, sim_zero = false;
    int img_width = 0, img_height = 0;
    sim->add_flag("--csv", sim_csv, "Also export the trajectory as CSV");
    sim->add_flag("--zero-initial", sim_zero, "Start from u = 0 instead of seeded noise");
    sim->add_option("--img-width", img_width, "Heatmap width in pixels (0 = native)");
    sim->add_option("--img-height", img_height, "Heatmap height in pixels (0 = native)");

    auto* stripes = app.add_subcommand("stripes", "Stripe extraction, events and density");
    std::string trajectory_path;
    stripes->add_option("trajectory", trajectory_path, "Trajectory file from 'simulate'")
        ->required();

    auto* linear = app.add_subcommand("linear-check",
                                      "Measured vs. theoretical linear growth rates");
    int n_max = 0;
    linear->add_option("--n-max", n_max, "Highest mode to measure");

    auto* sweep = app.add_subcommand("density-sweep", "Stripe density across domain lengths");
    std::string L_list_str, seeds_str;
    sweep->add_option("--L-list", L_list_str, "Comma-separated lengths (e.g. 16pi,32pi,64pi)")
        ->required();
    sweep->add_option("--seeds", seeds_str, "Comma-separated seeds (default: config seed)");

    auto* lyap = app.add_subcommand("lyapunov", "Leading Lyapunov exponent estimate");
    auto* modes = app.add_subcommand("modes", "Unstable-mode table (CSV on stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        ks::RunConfig cfg;
        if (opt_config->count()) cfg = ks::RunConfig::load(config_path);
        if (opt_out->count()) cfg.out_dir = out_dir;
        if (opt_seed->count()) cfg.seed = seed;
        if (opt_L->count()) cfg.length = ks::parse_scalar(length_str);
        if (opt_N->count()) cfg.n_points = n_points;
        if (opt_dt->count()) cfg.dt = dt;
        if (opt_t_end->count()) cfg.t_end = t_end;
        if (opt_stride->count()) cfg.save_stride = save_stride;
        if (opt_sigma->count()) cfg.sigma = sigma;
        if (opt_transient->count()) cfg.t_transient = t_transient;
        if (opt_minw->count()) cfg.min_stripe_width = min_stripe_width;
        if (opt_delta0->count()) cfg.delta0 = delta0;
        if (opt_renorm->count()) cfg.renorm_interval = renorm_interval;
        if (no_projection) cfg.zero_mean_projection = false;

        if (sim->parsed()) {
            ks::SimulateOptions opts;
            opts.write_csv = sim_csv;
            opts.zero_initial = sim_zero;
            opts.heatmap.width = img_width;
            opts.heatmap.height = img_height;
            return ks::cmd_simulate(cfg, opts);
        }
        if (stripes->parsed()) return ks::cmd_stripes(cfg, trajectory_path);
        if (linear->parsed()) return ks::cmd_linear_check(cfg, n_max);
        if (sweep->parsed()) {
            std::vector<double> lengths;
            for (const auto& tok : split_list(L_list_str))
                lengths.push_back(ks::parse_scalar(tok));
            std::vector<std::uint64_t> seeds;
            for (const auto& tok : split_list(seeds_str)) seeds.push_back(std::stoull(tok));
            return ks::cmd_density_sweep(cfg, lengths, seeds, jobs);
        }
        if (lyap->parsed()) return ks::cmd_lyapunov(cfg);
        if (modes->parsed()) return ks::cmd_modes(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
