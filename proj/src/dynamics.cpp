#include "ks/dynamics.hpp"

#include "ks/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

constexpr int kContourPoints = 32;

double growth_symbol(double k) {
    const double k2 = k * k;
    return k2 - k2 * k2;
}

std::string blowup_message(long step_index, int mode, double magnitude) {
    std::ostringstream os;
    os << "solution blew up at step " << step_index << ": |u_hat[" << mode
       << "]| = " << magnitude << " exceeds " << kBlowupThreshold;
    return os.str();
}

}  // namespace

void SolverParams::validate() const {
    if (!(dt > 0.0) || dt > 0.5)
        throw std::invalid_argument("SolverParams: dt must lie in (0, 0.5]");
    if (!(t_end > 0.0)) throw std::invalid_argument("SolverParams: t_end must be positive");
    if (save_stride < 1) throw std::invalid_argument("SolverParams: save_stride must be >= 1");
    if (grid.n_points == 0) throw std::invalid_argument("SolverParams: grid is unset");
}

BlowupError::BlowupError(long step_index_, int mode_, double magnitude_)
    : std::runtime_error(blowup_message(step_index_, mode_, magnitude_)),
      step_index(step_index_),
      mode(mode_),
      magnitude(magnitude_) {}

Etdrk4Stepper::Etdrk4Stepper(const Grid& grid, double dt, bool project_zero_mean)
    : grid_(grid), dt_(dt), project_zero_mean_(project_zero_mean) {
    if (!(dt > 0.0) || dt > 0.5)
        throw std::invalid_argument("Etdrk4Stepper: dt must lie in (0, 0.5]");

    const int n_modes = grid.n_points / 2 + 1;
    exp_full_.resize(n_modes);
    exp_half_.resize(n_modes);
    q_.resize(n_modes);
    f1_.resize(n_modes);
    f2_.resize(n_modes);
    f3_.resize(n_modes);

    using cplx = std::complex<double>;
    for (int n = 0; n < n_modes; ++n) {
        const double hl = dt * growth_symbol(grid.wavenumber(n));
        exp_full_[n] = std::exp(hl);
        exp_half_[n] = std::exp(0.5 * hl);

        // Contour average of the phi functions on a unit circle around hl.
        // The integrands have removable singularities at z = 0; sampling a
        // circle of radius 1 keeps every z away from it.
        cplx q = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
        for (int m = 0; m < kContourPoints; ++m) {
            const double theta = std::numbers::pi * (m + 0.5) / kContourPoints;
            const cplx z = hl + std::polar(1.0, theta);
            const cplx ez = std::exp(z);
            const cplx z2 = z * z;
            const cplx z3 = z2 * z;
            q += (std::exp(0.5 * z) - 1.0) / z;
            f1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z2)) / z3;
            f2 += (2.0 + z + ez * (-2.0 + z)) / z3;
            f3 += (-4.0 - 3.0 * z - z2 + ez * (4.0 - z)) / z3;
        }
        const double scale = dt / kContourPoints;
        q_[n] = scale * q.real();
        f1_[n] = scale * f1.real();
        f2_[n] = scale * f2.real();
        f3_[n] = scale * f3.real();
    }
}

SpectralField Etdrk4Stepper::nonlinear(const SpectralField& s) const {
    const RealField u = to_real(s);
    RealField squared(u.grid);
    for (size_t j = 0; j < u.values.size(); ++j)
        squared.values[j] = u.values[j] * u.values[j];
    SpectralField w = dealias(to_spectral(squared));
    // N(u) = -(1/2) d/dx (u^2)
    const int nyq = grid_.nyquist_index();
    for (int n = 0; n < nyq; ++n) {
        const std::complex<double> ik(0.0, grid_.wavenumber(n));
        w.coeffs[n] = -0.5 * ik * w.coeffs[n];
    }
    w.coeffs[nyq] = {0.0, 0.0};
    return w;
}

SpectralField Etdrk4Stepper::step(const SpectralField& state, long step_index) const {
    if (!(state.grid == grid_))
        throw std::invalid_argument("Etdrk4Stepper: state grid does not match stepper grid");

    const SpectralField v = dealias(state);
    const int n_modes = v.n_modes();

    const SpectralField nv = nonlinear(v);
    SpectralField a(grid_), b(grid_), c(grid_), out(grid_);

    for (int n = 0; n < n_modes; ++n)
        a.coeffs[n] = exp_half_[n] * v.coeffs[n] + q_[n] * nv.coeffs[n];
    const SpectralField na = nonlinear(a);

    for (int n = 0; n < n_modes; ++n)
        b.coeffs[n] = exp_half_[n] * v.coeffs[n] + q_[n] * na.coeffs[n];
    const SpectralField nb = nonlinear(b);

    for (int n = 0; n < n_modes; ++n)
        c.coeffs[n] = exp_half_[n] * a.coeffs[n] + q_[n] * (2.0 * nb.coeffs[n] - nv.coeffs[n]);
    const SpectralField nc = nonlinear(c);

    for (int n = 0; n < n_modes; ++n) {
        out.coeffs[n] = exp_full_[n] * v.coeffs[n] + f1_[n] * nv.coeffs[n] +
                        2.0 * f2_[n] * (na.coeffs[n] + nb.coeffs[n]) + f3_[n] * nc.coeffs[n];
    }
    if (project_zero_mean_) out.coeffs[0] = {0.0, 0.0};

    for (int n = 0; n < n_modes; ++n) {
        const double mag = std::abs(out.coeffs[n]);
        if (!(mag <= kBlowupThreshold)) throw BlowupError(step_index, n, mag);
    }
    return out;
}

SpectralField ks_step(const SpectralField& state, const SolverParams& params) {
    params.validate();
    return Etdrk4Stepper(params.grid, params.dt, params.project_zero_mean).step(state);
}

Trajectory evolve(const RealField& initial, const SolverParams& params) {
    params.validate();
    if (!(initial.grid == params.grid))
        throw std::invalid_argument("evolve: initial field grid does not match params.grid");

    long n_steps = std::llround(params.t_end / params.dt);
    if (n_steps < 1) n_steps = 1;
    if (n_steps % params.save_stride != 0)
        n_steps += params.save_stride - n_steps % params.save_stride;

    const Etdrk4Stepper stepper(params.grid, params.dt, params.project_zero_mean);

    SpectralField state = to_spectral(initial);
    if (params.project_zero_mean) state = project_zero_mean(std::move(state));
    state = dealias(std::move(state));

    Trajectory traj;
    traj.grid = params.grid;
    traj.times.reserve(n_steps / params.save_stride + 1);
    traj.snapshots.reserve(n_steps / params.save_stride + 1);
    traj.times.push_back(0.0);
    traj.snapshots.push_back(to_real(state));

    for (long step = 1; step <= n_steps; ++step) {
        state = stepper.step(state, step);
        if (step % params.save_stride == 0) {
            traj.times.push_back(static_cast<double>(step) * params.dt);
            traj.snapshots.push_back(to_real(state));
        }
    }
    return traj;
}

SpectralField linear_evolve_exact(const SpectralField& initial, double t) {
    SpectralField out(initial.grid);
    const int n_modes = initial.n_modes();
    for (int n = 0; n < n_modes; ++n) {
        const double expo = growth_symbol(initial.grid.wavenumber(n)) * t;
        if (expo > 700.0)
            throw std::domain_error(
                "linear_evolve_exact: amplification overflows (backward time anti-diffuses "
                "high modes)");
        out.coeffs[n] = std::exp(expo) * initial.coeffs[n];
    }
    return out;
}

RealField translate(const RealField& f, double a) {
    SpectralField s = to_spectral(f);
    const int nyq = s.grid.nyquist_index();
    for (int n = 0; n < nyq; ++n) {
        const double phase = -s.grid.wavenumber(n) * a;
        s.coeffs[n] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    // The Nyquist mode has no Hermitian partner; only the real (cosine)
    // part of its shift is representable on the grid.
    s.coeffs[nyq] *= std::cos(s.grid.wavenumber(nyq) * a);
    return to_real(s);
}

RealField reflect(const RealField& f) {
    const int n = f.grid.n_points;
    RealField out(f.grid);
    for (int j = 0; j < n; ++j) out.values[j] = -f.values[(n - j) % n];
    return out;
}

RealField boost(const RealField& f, double v, double t) {
    RealField out = translate(f, t * v);
    for (double& u : out.values) u += v;
    return out;
}

RealField random_uniform_field(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    RealField f(grid);
    for (double& v : f.values) {
        // Top 53 bits -> uniform [0, 1); affine map to [-1, 1].  Avoids the
        // library distribution so the stream is identical everywhere.
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        v = 2.0 * u - 1.0;
    }
    return f;
}

}  // namespace ks
