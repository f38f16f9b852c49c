#include "ks/linear_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ks {

double growth_rate(double k) {
    const double k2 = k * k;
    return k2 - k2 * k2;
}

std::vector<ModeInfo> unstable_modes(const Grid& grid) {
    std::vector<ModeInfo> modes;
    for (int n = 1; n <= grid.nyquist_index(); ++n) {
        const double k = grid.wavenumber(n);
        const double rate = growth_rate(k);
        if (rate > 0.0) {
            modes.push_back({n, k, rate});
            modes.push_back({-n, -k, rate});
        }
    }
    std::sort(modes.begin(), modes.end(), [](const ModeInfo& a, const ModeInfo& b) {
        if (a.rate != b.rate) return a.rate > b.rate;
        if (std::abs(a.n) != std::abs(b.n)) return std::abs(a.n) < std::abs(b.n);
        return a.n > b.n;
    });
    return modes;
}

FastestMode fastest_mode(const Grid& grid) {
    if (grid.nyquist_index() < 1)
        throw std::invalid_argument("fastest_mode: grid admits no nonzero mode");

    ModeInfo best{1, grid.wavenumber(1), growth_rate(grid.wavenumber(1))};
    for (int n = 2; n <= grid.nyquist_index(); ++n) {
        const double rate = growth_rate(grid.wavenumber(n));
        if (rate > best.rate) best = {n, grid.wavenumber(n), rate};
    }

    FastestMode result;
    result.discrete = best;
    result.k_star = 1.0 / std::sqrt(2.0);
    result.wavelength_star = 2.0 * std::numbers::pi / result.k_star;
    result.inverse_wavelength_star = 1.0 / result.wavelength_star;
    return result;
}

}  // namespace ks
