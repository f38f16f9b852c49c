#include "ks/stripes.hpp"

#include "ks/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ks {

namespace {

bool circular_ranges_overlap(const StripeArc& a, const StripeArc& b, int n_points) {
    const int da = ((b.start_index - a.start_index) % n_points + n_points) % n_points;
    const int db = ((a.start_index - b.start_index) % n_points + n_points) % n_points;
    return da < a.sample_count() || db < b.sample_count();
}

double circular_centroid(int start, int count, const Grid& grid) {
    double c = 0.0, s = 0.0;
    for (int i = 0; i < count; ++i) {
        const double theta = 2.0 * std::numbers::pi * ((start + i) % grid.n_points) /
                             grid.n_points;
        c += std::cos(theta);
        s += std::sin(theta);
    }
    if (c == 0.0 && s == 0.0) return 0.0;  // full circle or perfectly balanced
    double pos = std::atan2(s, c) / (2.0 * std::numbers::pi) * grid.length;
    if (pos < 0.0) pos += grid.length;
    return pos;
}

}  // namespace

SmoothedSlope smoothed_slope(const RealField& u, double sigma) {
    const SpectralField v = gaussian_multiplier(derivative(to_spectral(u), 1), sigma);
    SmoothedSlope out;
    out.grid = u.grid;
    out.values = to_real(v).values;
    out.sigma = sigma;
    return out;
}

bool StripeArc::contains(int j, int n_points) const {
    const int d = ((j - start_index) % n_points + n_points) % n_points;
    return d < sample_count();
}

StripeSlice extract_stripes(const SmoothedSlope& v, double t, double min_width) {
    const int n = v.grid.n_points;
    StripeSlice slice;
    slice.grid = v.grid;
    slice.t = t;

    int n_negative = 0;
    for (double x : v.values)
        if (x < 0.0) ++n_negative;

    if (n_negative == 0) return slice;

    if (n_negative == n) {
        slice.arcs.push_back({0, n, 0.0, v.grid.length});
        return slice;
    }

    for (int j = 0; j < n; ++j) {
        const bool neg = v.values[j] < 0.0;
        const bool prev_neg = v.values[(j + n - 1) % n] < 0.0;
        if (!neg || prev_neg) continue;
        int len = 0;
        while (v.values[(j + len) % n] < 0.0) ++len;
        StripeArc arc;
        arc.start_index = j;
        arc.end_index = j + len;
        arc.width = len * v.grid.dx();
        arc.centroid = circular_centroid(j, len, v.grid);
        if (min_width <= 0.0 || arc.width >= min_width) slice.arcs.push_back(arc);
    }
    return slice;
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Birth: return "birth";
        case EventKind::Death: return "death";
        case EventKind::Merge: return "merge";
        case EventKind::Split: return "split";
        case EventKind::Continue: return "continue";
    }
    return "?";
}

void EventCounts::add(EventKind kind) {
    switch (kind) {
        case EventKind::Birth: ++births; break;
        case EventKind::Death: ++deaths; break;
        case EventKind::Merge: ++merges; break;
        case EventKind::Split: ++splits; break;
        case EventKind::Continue: ++continues; break;
    }
}

std::vector<StripeEvent> match_slices(const StripeSlice& a, const StripeSlice& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("match_slices: slices come from different grids");
    if (!(a.t < b.t))
        throw std::invalid_argument("match_slices: slices must be in increasing time order");

    const int n = a.grid.n_points;
    const int na = static_cast<int>(a.arcs.size());
    const int nb = static_cast<int>(b.arcs.size());

    std::vector<std::vector<int>> succs(na), preds(nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            if (circular_ranges_overlap(a.arcs[i], b.arcs[j], n)) {
                succs[i].push_back(j);
                preds[j].push_back(i);
            }
        }
    }

    std::vector<StripeEvent> events;
    auto emit = [&](EventKind kind, std::vector<int> before, std::vector<int> after) {
        events.push_back({a.t, b.t, kind, std::move(before), std::move(after)});
    };

    for (int j = 0; j < nb; ++j)
        if (preds[j].empty()) emit(EventKind::Birth, {}, {j});
    for (int i = 0; i < na; ++i)
        if (succs[i].empty()) emit(EventKind::Death, {i}, {});
    for (int j = 0; j < nb; ++j)
        if (preds[j].size() >= 2) emit(EventKind::Merge, preds[j], {j});
    for (int i = 0; i < na; ++i)
        if (succs[i].size() >= 2) emit(EventKind::Split, {i}, succs[i]);
    for (int i = 0; i < na; ++i) {
        if (succs[i].size() == 1 && preds[succs[i][0]].size() == 1)
            emit(EventKind::Continue, {i}, {succs[i][0]});
    }
    return events;
}

TrackResult track(const Trajectory& trajectory, double sigma, double t_transient,
                  double min_width) {
    if (trajectory.size() == 0) throw std::invalid_argument("track: empty trajectory");

    TrackResult result;
    result.t_transient = t_transient;
    result.slices.reserve(trajectory.size());
    for (size_t i = 0; i < trajectory.size(); ++i) {
        result.slices.push_back(extract_stripes(smoothed_slope(trajectory.snapshots[i], sigma),
                                                trajectory.times[i], min_width));
    }

    for (size_t i = 0; i + 1 < result.slices.size(); ++i) {
        auto events = match_slices(result.slices[i], result.slices[i + 1]);
        for (auto& e : events) {
            (e.t_before < t_transient ? result.pre_transient : result.post_transient).add(e.kind);
            result.events.push_back(std::move(e));
        }
    }
    return result;
}

DensityReport density(const Trajectory& trajectory, double sigma, double t_transient,
                      double min_width) {
    DensityReport report;
    report.length = trajectory.grid.length;
    report.t_transient = t_transient;

    long post_slices = 0;
    long post_count_sum = 0;
    for (size_t i = 0; i < trajectory.size(); ++i) {
        const StripeSlice slice = extract_stripes(
            smoothed_slope(trajectory.snapshots[i], sigma), trajectory.times[i], min_width);
        report.times.push_back(trajectory.times[i]);
        report.counts.push_back(static_cast<int>(slice.arcs.size()));
        if (trajectory.times[i] >= t_transient) {
            ++post_slices;
            post_count_sum += static_cast<long>(slice.arcs.size());
        }
    }
    if (post_slices == 0)
        throw std::invalid_argument("density: trajectory has no slices with t >= t_transient");

    report.mean_count = static_cast<double>(post_count_sum) / static_cast<double>(post_slices);
    report.density = report.mean_count / report.length;
    return report;
}

std::vector<std::uint8_t> slice_mask(const StripeSlice& slice) {
    std::vector<std::uint8_t> mask(static_cast<size_t>(slice.grid.n_points), 0);
    for (const StripeArc& arc : slice.arcs) {
        for (int i = 0; i < arc.sample_count(); ++i)
            mask[static_cast<size_t>((arc.start_index + i) % slice.grid.n_points)] = 1;
    }
    return mask;
}

}  // namespace ks
