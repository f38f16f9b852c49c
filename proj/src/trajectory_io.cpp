#include "ks/trajectory_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ks {

namespace {

constexpr char kMagic[8] = {'K', 'S', 'T', 'R', 'A', 'J', '0', '1'};

template <typename T>
void write_le(std::ostream& os, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(std::begin(bytes), std::end(bytes));
    os.write(bytes, sizeof(T));
}

template <typename T>
T read_le(std::istream& is) {
    char bytes[sizeof(T)];
    is.read(bytes, sizeof(T));
    if (!is) throw std::runtime_error("trajectory file: truncated");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(std::begin(bytes), std::end(bytes));
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_config_comment(std::ostream& os, const RunConfig& config) {
    std::istringstream lines(config.to_text());
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << "\n";
}

}  // namespace

void write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory,
                      const RunConfig& config) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());

    os.write(kMagic, sizeof(kMagic));
    write_le<std::uint32_t>(os, kTrajectoryFormatVersion);
    write_le<std::uint32_t>(os, static_cast<std::uint32_t>(trajectory.grid.n_points));
    write_le<double>(os, trajectory.grid.length);
    write_le<double>(os, config.dt);
    write_le<std::uint32_t>(os, static_cast<std::uint32_t>(config.save_stride));
    write_le<std::uint32_t>(os, 0u);
    write_le<std::uint64_t>(os, config.seed);

    const std::string config_text = config.to_text();
    write_le<std::uint64_t>(os, config_text.size());
    os.write(config_text.data(), static_cast<std::streamsize>(config_text.size()));

    write_le<std::uint64_t>(os, trajectory.size());
    for (double t : trajectory.times) write_le<double>(os, t);
    for (const RealField& snap : trajectory.snapshots)
        for (double v : snap.values) write_le<double>(os, v);

    if (!os) throw std::runtime_error("write failed: " + path.string());
}

TrajectoryFile read_trajectory(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());

    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("trajectory file: bad magic in " + path.string());

    const auto version = read_le<std::uint32_t>(is);
    if (version != kTrajectoryFormatVersion)
        throw std::runtime_error("trajectory file: unsupported format version " +
                                 std::to_string(version));

    const auto n_points = read_le<std::uint32_t>(is);
    const double length = read_le<double>(is);
    const double dt = read_le<double>(is);
    const auto save_stride = read_le<std::uint32_t>(is);
    (void)read_le<std::uint32_t>(is);  // reserved
    const auto seed = read_le<std::uint64_t>(is);

    const auto config_len = read_le<std::uint64_t>(is);
    std::string config_text(config_len, '\0');
    is.read(config_text.data(), static_cast<std::streamsize>(config_len));
    if (!is) throw std::runtime_error("trajectory file: truncated config block");

    TrajectoryFile result;
    result.config = RunConfig::from_text(config_text);
    if (result.config.n_points != static_cast<int>(n_points) ||
        result.config.length != length || result.config.dt != dt ||
        result.config.save_stride != static_cast<int>(save_stride) ||
        result.config.seed != seed)
        throw std::runtime_error("trajectory file: header disagrees with embedded config");

    const Grid grid(length, static_cast<int>(n_points));
    result.trajectory.grid = grid;

    const auto n_snapshots = read_le<std::uint64_t>(is);
    result.trajectory.times.resize(n_snapshots);
    for (auto& t : result.trajectory.times) t = read_le<double>(is);
    result.trajectory.snapshots.reserve(n_snapshots);
    for (std::uint64_t i = 0; i < n_snapshots; ++i) {
        RealField snap(grid);
        for (double& v : snap.values) v = read_le<double>(is);
        result.trajectory.snapshots.push_back(std::move(snap));
    }
    return result;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                          const RunConfig& config) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    write_config_comment(os, config);
    os << "t,x,u\n";
    for (size_t i = 0; i < trajectory.size(); ++i) {
        const std::string t = format_double(trajectory.times[i]);
        for (int j = 0; j < trajectory.grid.n_points; ++j) {
            os << t << ',' << format_double(trajectory.grid.x(j)) << ','
               << format_double(trajectory.snapshots[i].values[j]) << "\n";
        }
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

void write_stripe_mask(const std::filesystem::path& path,
                       const std::vector<std::vector<std::uint8_t>>& masks, int n_points,
                       const RunConfig& config) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    const char magic[8] = {'K', 'S', 'M', 'A', 'S', 'K', '0', '1'};
    os.write(magic, sizeof(magic));
    write_le<std::uint32_t>(os, 1u);
    write_le<std::uint32_t>(os, static_cast<std::uint32_t>(n_points));
    const std::string config_text = config.to_text();
    write_le<std::uint64_t>(os, config_text.size());
    os.write(config_text.data(), static_cast<std::streamsize>(config_text.size()));
    write_le<std::uint64_t>(os, masks.size());
    for (const auto& mask : masks) {
        if (mask.size() != static_cast<size_t>(n_points))
            throw std::invalid_argument("stripe mask width does not match n_points");
        os.write(reinterpret_cast<const char*>(mask.data()),
                 static_cast<std::streamsize>(mask.size()));
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ks
