#pragma once

#include "ks/field.hpp"

#include <vector>

namespace ks {

/// One Fourier mode of the linearized dynamics.
struct ModeInfo {
    int n = 0;        ///< mode index (nonzero)
    double k = 0.0;   ///< wavenumber 2 pi n / L
    double rate = 0.0;  ///< linear growth rate k^2 - k^4
};

/// Linear growth rate k^2 - k^4 of a disturbance with wavenumber k.
double growth_rate(double k);

/// All modes with strictly positive growth rate (0 < |k_n| < 1), sorted by
/// descending rate; ties resolve toward smaller |n|, positive n first.
/// Marginal modes (rate exactly zero) are excluded.
std::vector<ModeInfo> unstable_modes(const Grid& grid);

struct FastestMode {
    ModeInfo discrete;  ///< grid mode maximizing the rate (positive-n representative)
    double k_star;      ///< continuum maximizer 1/sqrt(2)
    double wavelength_star;          ///< 2 pi / k_star = 2^{3/2} pi
    double inverse_wavelength_star;  ///< 1 / wavelength_star
};

/// The fastest-growing mode the grid admits, plus the continuum maximizer.
/// Rate ties between distinct |n| resolve toward the smaller |n|.
FastestMode fastest_mode(const Grid& grid);

}  // namespace ks
