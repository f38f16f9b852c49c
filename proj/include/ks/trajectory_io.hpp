#pragma once

#include "ks/dynamics.hpp"
#include "ks/run_config.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace ks {

/// Binary trajectory container, version 1.  Little-endian throughout.
///
///   bytes 0..7   magic "KSTRAJ01"
///   u32          format version (1)
///   u32          N (grid points)
///   f64          L (domain length)
///   f64          dt
///   u32          save_stride
///   u32          reserved (0)
///   u64          seed
///   u64          config text length, followed by that many bytes
///                (the full RunConfig, key = value lines)
///   u64          number of snapshots
///   f64[n]       save times
///   f64[n * N]   snapshot values, snapshot-major
inline constexpr std::uint32_t kTrajectoryFormatVersion = 1;

struct TrajectoryFile {
    Trajectory trajectory;
    RunConfig config;
};

void write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory,
                      const RunConfig& config);

/// Reads a version-1 trajectory container.  Rejects bad magic, any other
/// format version, and headers inconsistent with the embedded config.
TrajectoryFile read_trajectory(const std::filesystem::path& path);

/// Long-format CSV export: one (t, x, u) row per sample, with the config
/// embedded as leading '#' comment lines.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                          const RunConfig& config);

/// Binary stripe-mask raster aligned with a trajectory: "KSMASK01", u32
/// version, u32 N, u64 config text length + that many bytes, u64 slice
/// count, then one byte (0/1) per sample, slice-major.
void write_stripe_mask(const std::filesystem::path& path,
                       const std::vector<std::vector<std::uint8_t>>& masks, int n_points,
                       const RunConfig& config);

}  // namespace ks
