#pragma once

#include "ks/dynamics.hpp"
#include "ks/field.hpp"

#include <cstdint>
#include <vector>

namespace ks {

/// v = (Gaussian of standard deviation sigma) * u_x, sampled on the grid.
/// Computed spectrally, so mean(v) = 0 exactly (the derivative kills the
/// mean mode).
struct SmoothedSlope {
    Grid grid;
    std::vector<double> values;
    double sigma = 2.0;
};

SmoothedSlope smoothed_slope(const RealField& u, double sigma);

/// A maximal circular arc of grid samples where v < 0 (strictly).
/// Indices are end-exclusive; end_index may exceed N for arcs that wrap
/// through x = 0.  A slice where v < 0 everywhere yields the single arc
/// [0, N).
struct StripeArc {
    int start_index = 0;
    int end_index = 0;
    double centroid = 0.0;  ///< circular mean position, in [0, L)
    double width = 0.0;     ///< sample count * dx

    int sample_count() const { return end_index - start_index; }
    bool contains(int j, int n_points) const;
};

/// Stripe arcs of one time slice, ordered by start_index.
struct StripeSlice {
    Grid grid;
    double t = 0.0;
    std::vector<StripeArc> arcs;
};

/// Arcs where v < 0.  A sample exactly at zero separates arcs.  Arcs
/// narrower than min_width are dropped when min_width > 0.
StripeSlice extract_stripes(const SmoothedSlope& v, double t, double min_width = 0.0);

enum class EventKind { Birth, Death, Merge, Split, Continue };

const char* to_string(EventKind kind);

/// A classified transition between stripes of two consecutive slices.
/// `before` and `after` index into the arcs of the earlier and later slice.
struct StripeEvent {
    double t_before = 0.0;
    double t_after = 0.0;
    EventKind kind = EventKind::Continue;
    std::vector<int> before;
    std::vector<int> after;
};

/// Bipartite overlap matching between consecutive slices: arcs are linked
/// iff their circular index ranges intersect.  A later arc with no
/// predecessor is a birth; an earlier arc with no successor is a death;
/// >= 2 predecessors is a merge; >= 2 successors is a split; exclusive 1-1
/// links continue.  An arc can appear in both a merge and a split within
/// one transition.
std::vector<StripeEvent> match_slices(const StripeSlice& a, const StripeSlice& b);

struct EventCounts {
    long births = 0;
    long deaths = 0;
    long merges = 0;
    long splits = 0;
    long continues = 0;

    void add(EventKind kind);
};

struct TrackResult {
    std::vector<StripeSlice> slices;
    std::vector<StripeEvent> events;
    double t_transient = 0.0;
    EventCounts pre_transient;   ///< events with t_before <  t_transient
    EventCounts post_transient;  ///< events with t_before >= t_transient
};

/// Extract stripes from every snapshot and classify every consecutive
/// transition.
TrackResult track(const Trajectory& trajectory, double sigma, double t_transient,
                  double min_width = 0.0);

struct DensityReport {
    double length = 0.0;
    double t_transient = 0.0;
    double mean_count = 0.0;  ///< mean arc count over slices with t >= t_transient
    double density = 0.0;     ///< mean_count / L
    std::vector<double> times;  ///< per-slice times (all slices)
    std::vector<int> counts;    ///< per-slice arc counts (all slices)
};

/// Stripe density of the post-transient part of a trajectory.  Throws
/// std::invalid_argument when no slice has t >= t_transient.
DensityReport density(const Trajectory& trajectory, double sigma, double t_transient,
                      double min_width = 0.0);

/// 0/1 membership mask of the slice's arcs over the grid.
std::vector<std::uint8_t> slice_mask(const StripeSlice& slice);

}  // namespace ks
