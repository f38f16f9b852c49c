#pragma once

#include "ks/field.hpp"

namespace ks {

/// Forward transform to half-spectrum series coefficients.
/// coeffs[0] equals the mean of f; no projection or dealiasing is applied,
/// so to_real(to_spectral(f)) reproduces f to rounding accuracy.
/// Throws std::invalid_argument if f contains NaN or Inf.
SpectralField to_spectral(const RealField& f);

/// Inverse transform back to grid samples.
RealField to_real(const SpectralField& s);

/// Zero the mean mode u_hat_0; all other coefficients are unchanged.
SpectralField project_zero_mean(SpectralField s);

/// Spectral derivative of the given order: mode n is multiplied by
/// (i k_n)^order.  The Nyquist mode is zeroed (it has no Hermitian partner
/// under odd-order differentiation and sits inside the dealias band).
SpectralField derivative(const SpectralField& s, int order);

/// 2/3-rule dealiasing: zero all modes with 3|n| > N.
SpectralField dealias(SpectralField s);

/// Periodic convolution with a normalized Gaussian of standard deviation
/// sigma, applied as the Fourier multiplier exp(-sigma^2 k_n^2 / 2).
SpectralField gaussian_multiplier(const SpectralField& s, double sigma);

}  // namespace ks
