#pragma once

#include <array>
#include <vector>

#include "palmreg/types.hpp"

namespace palmreg {

/// Ordered closed contour. Consecutive points (and last -> first) are
/// 8-adjacent; every point is an object pixel with at least one 4-adjacent
/// background pixel. A coordinate may appear twice only where a one-pixel-thin
/// protrusion is walked on both sides (distinct entry directions).
using BoundaryPath = std::vector<PixelCoord>;

/// The four boundary indices nearest the center, ordered ascending by
/// distance value.
struct MinimaSet {
  std::array<int, 4> indices{};
};

/// Moore-neighbor tracing, clockwise in screen coordinates, starting at the
/// first 0->1 transition in raster order. The walk stops when a
/// (pixel, backtrack) state repeats, which realizes Jacob's stopping criterion
/// and also terminates on one-pixel-thin shapes.
///
/// Throws SampleError("empty-mask") for an all-background mask and
/// SampleError("degenerate-shape") for objects smaller than 8 pixels.
BoundaryPath trace_boundary(const BinaryImage& mask);

/// Mean of the boundary point coordinates.
Vec2 centroid_of(const BoundaryPath& path);

/// Mean of all object pixel coordinates (filled-region alternative).
Vec2 region_centroid(const BinaryImage& mask);

/// values[i] = Euclidean distance from center to path[i].
Eigen::VectorXd distance_profile(const BoundaryPath& path, const Vec2& center);

/// Locates the four boundary points nearest the center.
///
/// The profile is smoothed with a circular moving average of width `window`;
/// circular local minima of the smoothed curve (minimal over +/- window, with
/// at least one strict inequality) that dip at least `min_depth_frac` below
/// the mean are refined to the nearest raw local minimum by downhill descent.
/// The raw global minimum is always a candidate. Any candidate within
/// `window` indices of a deeper one is suppressed; the four smallest
/// survivors are returned ordered by value.
///
/// Throws SampleError("insufficient-structure") when fewer than four minima
/// survive. Requires profile length > 4 * window.
MinimaSet find_minima(const Eigen::VectorXd& profile, int window,
                      double min_depth_frac = 0.05);

}  // namespace palmreg
