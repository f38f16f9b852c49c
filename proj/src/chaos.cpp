#include "ks/chaos.hpp"

#include "ks/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ks {

namespace {

// Parseval: ||u||_L2^2 = L (|u_0|^2 + 2 sum_{0<n<N/2} |u_n|^2 + |u_{N/2}|^2).
double l2_norm_of_difference(const SpectralField& a, const SpectralField& b) {
    const int nyq = a.grid.nyquist_index();
    double sum = std::norm(a.coeffs[0] - b.coeffs[0]);
    for (int n = 1; n < nyq; ++n) sum += 2.0 * std::norm(a.coeffs[n] - b.coeffs[n]);
    sum += std::norm(a.coeffs[nyq] - b.coeffs[nyq]);
    return std::sqrt(a.grid.length * sum);
}

SpectralField prepared_state(const RealField& initial, bool project) {
    SpectralField s = to_spectral(initial);
    if (project) s = project_zero_mean(std::move(s));
    return dealias(std::move(s));
}

// Zero-mean, dealiased perturbation of the given L2 norm.
SpectralField perturbation(const Grid& grid, std::uint64_t direction_seed, double delta0) {
    SpectralField p = dealias(project_zero_mean(to_spectral(random_uniform_field(grid, direction_seed))));
    SpectralField zero(grid);
    const double norm = l2_norm_of_difference(p, zero);
    if (!(norm > 0.0)) throw std::invalid_argument("perturbation direction has zero norm");
    const double scale = delta0 / norm;
    for (auto& c : p.coeffs) c *= scale;
    return p;
}

}  // namespace

LyapunovEstimate lyapunov1(const RealField& initial, const SolverParams& params, double delta0,
                           double renorm_interval, double t_transient,
                           std::uint64_t direction_seed) {
    params.validate();
    if (!(delta0 > 0.0)) throw std::invalid_argument("lyapunov1: delta0 must be positive");
    if (!(renorm_interval > 0.0))
        throw std::invalid_argument("lyapunov1: renorm_interval must be positive");

    const long steps_per_interval = std::max<long long>(1, std::llround(renorm_interval / params.dt));
    const double interval = static_cast<double>(steps_per_interval) * params.dt;
    const long transient_steps = std::max<long long>(0, std::llround(t_transient / params.dt));
    const int n_renorms =
        static_cast<int>(std::floor((params.t_end - t_transient) / interval + 1e-9));
    if (n_renorms < 1)
        throw std::invalid_argument("lyapunov1: t_end leaves no room after t_transient");

    const Etdrk4Stepper stepper(params.grid, params.dt, params.project_zero_mean);

    SpectralField fiducial = prepared_state(initial, params.project_zero_mean);
    long step = 0;
    for (long i = 0; i < transient_steps; ++i) fiducial = stepper.step(fiducial, ++step);

    SpectralField perturbed = fiducial;
    {
        const SpectralField p = perturbation(params.grid, direction_seed, delta0);
        for (size_t n = 0; n < perturbed.coeffs.size(); ++n) perturbed.coeffs[n] += p.coeffs[n];
    }

    LyapunovEstimate est;
    est.renorm_interval = interval;
    est.n_renorms = n_renorms;
    est.log_growth.reserve(n_renorms);

    long pstep = step;
    for (int r = 0; r < n_renorms; ++r) {
        for (long i = 0; i < steps_per_interval; ++i) {
            fiducial = stepper.step(fiducial, ++step);
            perturbed = stepper.step(perturbed, ++pstep);
        }
        const double dist = l2_norm_of_difference(perturbed, fiducial);
        if (!(dist > 0.0) || !std::isfinite(dist) || dist > 1e100)
            throw std::runtime_error(
                "lyapunov1: separation left the rescaling range at interval " +
                std::to_string(r));
        est.log_growth.push_back(std::log(dist / delta0));
        const double pullback = delta0 / dist;
        for (size_t n = 0; n < perturbed.coeffs.size(); ++n) {
            perturbed.coeffs[n] =
                fiducial.coeffs[n] + pullback * (perturbed.coeffs[n] - fiducial.coeffs[n]);
        }
    }

    double sum = 0.0;
    for (double g : est.log_growth) sum += g;
    est.lambda1 = sum / (static_cast<double>(n_renorms) * interval);

    if (n_renorms > 1) {
        const double mean_rate = est.lambda1;
        double var = 0.0;
        for (double g : est.log_growth) {
            const double r = g / interval - mean_rate;
            var += r * r;
        }
        var /= static_cast<double>(n_renorms - 1);
        est.std_error = std::sqrt(var / static_cast<double>(n_renorms));
    }
    return est;
}

std::vector<std::pair<double, double>> separation_curve(const RealField& initial,
                                                        const SolverParams& params, double delta0,
                                                        std::uint64_t direction_seed) {
    params.validate();
    if (!(delta0 > 0.0))
        throw std::invalid_argument("separation_curve: delta0 must be positive (zero is degenerate)");

    const Etdrk4Stepper stepper(params.grid, params.dt, params.project_zero_mean);
    const long n_steps = std::llround(params.t_end / params.dt);

    SpectralField fiducial = prepared_state(initial, params.project_zero_mean);
    SpectralField perturbed = fiducial;
    {
        const SpectralField p = perturbation(params.grid, direction_seed, delta0);
        for (size_t n = 0; n < perturbed.coeffs.size(); ++n) perturbed.coeffs[n] += p.coeffs[n];
    }

    std::vector<std::pair<double, double>> curve;
    curve.emplace_back(0.0, std::log(delta0));
    for (long step = 1; step <= n_steps; ++step) {
        fiducial = stepper.step(fiducial, step);
        perturbed = stepper.step(perturbed, step);
        if (step % params.save_stride != 0) continue;
        const double dist = l2_norm_of_difference(perturbed, fiducial);
        curve.emplace_back(static_cast<double>(step) * params.dt,
                           dist > 0.0 ? std::log(dist) : -std::numeric_limits<double>::infinity());
        if (dist > 1.0) break;
    }
    return curve;
}

}  // namespace ks
