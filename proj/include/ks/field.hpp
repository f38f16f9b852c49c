#pragma once

#include <complex>
#include <vector>

namespace ks {

/// Uniform periodic grid on [0, L): N samples at x_j = j L / N, with x = L
/// identified with x = 0.
struct Grid {
    double length = 0.0;
    int n_points = 0;

    Grid() = default;
    Grid(double length_, int n_points_);

    double dx() const { return length / n_points; }
    double x(int j) const { return j * length / n_points; }

    /// Wavenumber of mode n: k_n = 2 pi n / L.
    double wavenumber(int n) const;

    /// Largest mode index kept by the 2/3 dealias rule (3|n| <= N).
    int dealias_cutoff() const { return n_points / 3; }
    int nyquist_index() const { return n_points / 2; }

    bool operator==(const Grid&) const = default;
};

/// Real samples of a field on a Grid.
struct RealField {
    Grid grid;
    std::vector<double> values;

    RealField() = default;
    explicit RealField(const Grid& g) : grid(g), values(static_cast<size_t>(g.n_points), 0.0) {}
    RealField(const Grid& g, std::vector<double> v);

    double mean() const;
    double max_norm() const;
    /// Discrete L2 norm sqrt(dx * sum u_j^2), consistent with the integral norm.
    double l2_norm() const;
    bool all_finite() const;
};

/// Half-spectrum Fourier coefficients of a real field.
///
/// coeffs[n] holds the series coefficient u_hat_n for n = 0..N/2, where
/// u(x) = sum_n u_hat_n exp(i k_n x).  The negative modes are implied by
/// u_hat_{-n} = conj(u_hat_n), so Hermitian symmetry holds by construction.
struct SpectralField {
    Grid grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    explicit SpectralField(const Grid& g)
        : grid(g), coeffs(static_cast<size_t>(g.n_points / 2 + 1), {0.0, 0.0}) {}
    SpectralField(const Grid& g, std::vector<std::complex<double>> c);

    int n_modes() const { return grid.n_points / 2 + 1; }
    std::complex<double> mode(int n) const { return coeffs[static_cast<size_t>(n)]; }
    double max_abs_coeff() const;
};

}  // namespace ks
