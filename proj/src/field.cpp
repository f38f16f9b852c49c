#include "ks/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ks {

Grid::Grid(double length_, int n_points_) : length(length_), n_points(n_points_) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("Grid: length must be positive and finite");
    if (n_points < 16 || n_points % 2 != 0)
        throw std::invalid_argument("Grid: n_points must be an even integer >= 16, got " +
                                    std::to_string(n_points));
}

double Grid::wavenumber(int n) const {
    return 2.0 * std::numbers::pi * n / length;
}

RealField::RealField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<size_t>(grid.n_points))
        throw std::invalid_argument("RealField: value count does not match grid");
}

double RealField::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double RealField::max_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double RealField::l2_norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(grid.dx() * s);
}

bool RealField::all_finite() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

SpectralField::SpectralField(const Grid& g, std::vector<std::complex<double>> c)
    : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != static_cast<size_t>(grid.n_points / 2 + 1))
        throw std::invalid_argument("SpectralField: coefficient count does not match grid");
}

double SpectralField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace ks
