#include "ks/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ks {

const std::array<Rgb, 256>& diverging_lut() {
    static const std::array<Rgb, 256> lut = [] {
        std::array<Rgb, 256> t{};
        for (int i = 0; i < 256; ++i) {
            const double s = (i - 127.5) / 127.5;
            const auto ramp = [](double f) {
                return static_cast<std::uint8_t>(std::llround(255.0 * f));
            };
            if (s <= 0.0) {
                t[i] = {ramp(1.0 + s), ramp(1.0 + s), 255};
            } else {
                t[i] = {255, ramp(1.0 - s), ramp(1.0 - s)};
            }
        }
        return t;
    }();
    return lut;
}

int color_index(double value, double scale) {
    if (!(scale > 0.0)) return 128;
    const double s = std::clamp(value / scale, -1.0, 1.0);
    return static_cast<int>(std::llround((0.5 + 0.5 * s) * 255.0));
}

std::vector<std::uint8_t> render_heatmap(const std::vector<std::vector<double>>& columns,
                                         const HeatmapSpec& spec,
                                         const std::vector<std::vector<std::uint8_t>>* masks) {
    if (columns.empty() || columns.front().empty())
        throw std::invalid_argument("render_heatmap: no data");
    const int n_t = static_cast<int>(columns.size());
    const int n_x = static_cast<int>(columns.front().size());
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != n_x)
            throw std::invalid_argument("render_heatmap: ragged columns");
    if (masks && static_cast<int>(masks->size()) != n_t)
        throw std::invalid_argument("render_heatmap: mask shape mismatch");

    const int width = spec.width > 0 ? spec.width : n_t;
    const int height = spec.height > 0 ? spec.height : n_x;

    double scale = 0.0;
    for (const auto& col : columns)
        for (double v : col) scale = std::max(scale, std::abs(v));

    const auto& lut = diverging_lut();
    std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<size_t>(width) * height * 3);

    for (int py = 0; py < height; ++py) {
        // Row 0 is the top of the image; x increases bottom to top.
        const int xi = n_x - 1 - static_cast<int>((py + 0.5) * n_x / height);
        for (int px = 0; px < width; ++px) {
            const int ti = static_cast<int>((px + 0.5) * n_t / width);
            Rgb c = lut[static_cast<size_t>(color_index(columns[ti][xi], scale))];
            if (spec.overlay && masks && (*masks)[ti][xi]) {
                // Tint stripe samples toward green; integer blend keeps the
                // pixel contract exact.
                c = {static_cast<std::uint8_t>(c.r / 2),
                     static_cast<std::uint8_t>((c.g + 255) / 2),
                     static_cast<std::uint8_t>(c.b / 2)};
            }
            out.push_back(c.r);
            out.push_back(c.g);
            out.push_back(c.b);
        }
    }
    return out;
}

std::vector<std::uint8_t> render_trajectory_heatmap(const Trajectory& trajectory,
                                                    const HeatmapSpec& spec) {
    std::vector<std::vector<double>> columns;
    columns.reserve(trajectory.size());
    for (const RealField& snap : trajectory.snapshots) columns.push_back(snap.values);
    return render_heatmap(columns, spec);
}

void write_ppm(const std::filesystem::path& path, const std::vector<std::uint8_t>& ppm_bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os.write(reinterpret_cast<const char*>(ppm_bytes.data()),
             static_cast<std::streamsize>(ppm_bytes.size()));
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ks
