#pragma once

#include "ks/dynamics.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace ks {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

struct HeatmapSpec {
    int width = 0;        ///< output pixels across time; 0 = one per snapshot
    int height = 0;       ///< output pixels across space; 0 = one per grid point
    bool overlay = false; ///< tint stripe-mask samples green
};

/// Zero-centered blue-white-red lookup table, 256 entries.
///
/// Entry i corresponds to s = (i - 127.5) / 127.5 in [-1, 1]:
///   s <= 0:  r = g = round(255 (1 + s)),  b = 255
///   s >  0:  r = 255,  g = b = round(255 (1 - s))
/// so lut[255 - i] equals lut[i] with red and blue swapped, entry 0 is
/// saturated blue, entry 255 saturated red, and the two central entries are
/// near-white.
const std::array<Rgb, 256>& diverging_lut();

/// Index into the lookup table for a value on the symmetric scale
/// [-scale, scale]; values outside clamp.  scale = 0 maps everything to the
/// central entry 128.
int color_index(double value, double scale);

/// Render a spacetime field as a binary PPM (P6).  columns[i] is the
/// snapshot at save index i (length n_x); time runs left to right, x bottom
/// to top.  Resampling to a requested width/height is nearest neighbor.
/// The color scale is the max |value| over the whole field, so the image is
/// a pure function of (data, spec).  masks, when given (same shape as
/// columns, values 0/1), marks samples to tint when spec.overlay is set.
std::vector<std::uint8_t> render_heatmap(const std::vector<std::vector<double>>& columns,
                                         const HeatmapSpec& spec,
                                         const std::vector<std::vector<std::uint8_t>>* masks
                                         = nullptr);

std::vector<std::uint8_t> render_trajectory_heatmap(const Trajectory& trajectory,
                                                    const HeatmapSpec& spec);

void write_ppm(const std::filesystem::path& path, const std::vector<std::uint8_t>& ppm_bytes);

}  // namespace ks
