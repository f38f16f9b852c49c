#include "ks/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ks {

namespace {

// The FFTW planner is not thread-safe; plan creation and destruction are
// serialized behind this lock.  Executing distinct plans is safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// One set of plans and work buffers per transform size.  Instances are
// cached thread_local, so concurrent trajectories never share buffers.
class FftEngine {
public:
    explicit FftEngine(int n) : n_(n) {
        real_ = fftw_alloc_real(static_cast<size_t>(n));
        cplx_ = fftw_alloc_complex(static_cast<size_t>(n / 2 + 1));
        if (!real_ || !cplx_) throw std::bad_alloc();
        std::lock_guard<std::mutex> lock(planner_mutex());
        // FFTW_ESTIMATE keeps plan selection independent of runtime timing,
        // which keeps repeated runs bit-identical.
        forward_ = fftw_plan_dft_r2c_1d(n, real_, cplx_, FFTW_ESTIMATE);
        inverse_ = fftw_plan_dft_c2r_1d(n, cplx_, real_, FFTW_ESTIMATE);
    }

    ~FftEngine() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(inverse_);
        fftw_free(real_);
        fftw_free(cplx_);
    }

    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

    void forward(const double* in, std::complex<double>* out) {
        for (int j = 0; j < n_; ++j) real_[j] = in[j];
        fftw_execute(forward_);
        const double scale = 1.0 / n_;
        for (int m = 0; m <= n_ / 2; ++m)
            out[m] = std::complex<double>(cplx_[m][0] * scale, cplx_[m][1] * scale);
    }

    void inverse(const std::complex<double>* in, double* out) {
        for (int m = 0; m <= n_ / 2; ++m) {
            cplx_[m][0] = in[m].real();
            cplx_[m][1] = in[m].imag();
        }
        fftw_execute(inverse_);
        for (int j = 0; j < n_; ++j) out[j] = real_[j];
    }

private:
    int n_;
    double* real_ = nullptr;
    fftw_complex* cplx_ = nullptr;
    fftw_plan forward_ = nullptr;
    fftw_plan inverse_ = nullptr;
};

FftEngine& engine_for(int n) {
    thread_local std::map<int, std::unique_ptr<FftEngine>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftEngine>(n);
    return *slot;
}

}  // namespace

SpectralField to_spectral(const RealField& f) {
    if (!f.all_finite())
        throw std::invalid_argument("to_spectral: input field contains NaN or Inf");
    SpectralField s(f.grid);
    engine_for(f.grid.n_points).forward(f.values.data(), s.coeffs.data());
    return s;
}

RealField to_real(const SpectralField& s) {
    RealField f(s.grid);
    engine_for(s.grid.n_points).inverse(s.coeffs.data(), f.values.data());
    return f;
}

SpectralField project_zero_mean(SpectralField s) {
    s.coeffs[0] = {0.0, 0.0};
    return s;
}

SpectralField derivative(const SpectralField& s, int order) {
    if (order < 1) throw std::invalid_argument("derivative: order must be >= 1");
    SpectralField out(s.grid);
    const int nyq = s.grid.nyquist_index();
    for (int n = 0; n < nyq; ++n) {
        const std::complex<double> ik(0.0, s.grid.wavenumber(n));
        std::complex<double> m(1.0, 0.0);
        for (int p = 0; p < order; ++p) m *= ik;
        out.coeffs[static_cast<size_t>(n)] = m * s.coeffs[static_cast<size_t>(n)];
    }
    out.coeffs[static_cast<size_t>(nyq)] = {0.0, 0.0};
    return out;
}

SpectralField dealias(SpectralField s) {
    const int n_points = s.grid.n_points;
    for (int n = 0; n <= n_points / 2; ++n) {
        if (3 * n > n_points) s.coeffs[static_cast<size_t>(n)] = {0.0, 0.0};
    }
    return s;
}

SpectralField gaussian_multiplier(const SpectralField& s, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_multiplier: sigma must be positive");
    SpectralField out(s.grid);
    const int nyq = s.grid.nyquist_index();
    for (int n = 0; n < nyq; ++n) {
        const double k = s.grid.wavenumber(n);
        out.coeffs[static_cast<size_t>(n)] =
            std::exp(-0.5 * sigma * sigma * k * k) * s.coeffs[static_cast<size_t>(n)];
    }
    out.coeffs[static_cast<size_t>(nyq)] = {0.0, 0.0};
    return out;
}

}  // namespace ks
