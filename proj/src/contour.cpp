#include "palmreg/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "palmreg/errors.hpp"

namespace palmreg {

namespace {

// Clockwise compass ring in screen coordinates (y down):
// N, NE, E, SE, S, SW, W, NW.
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kWest = 6;

int direction_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d)
    if (kDx[d] == dx && kDy[d] == dy) return d;
  throw std::logic_error("not an 8-neighborhood offset");
}

bool object_at(const BinaryImage& mask, int x, int y) {
  return in_bounds(mask, x, y) && mask(y, x) != 0;
}

int circular_index(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

int circular_distance(int a, int b, int n) {
  const int d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

}  // namespace

BoundaryPath trace_boundary(const BinaryImage& mask) {
  const int w = width(mask);
  const int h = height(mask);

  std::int64_t object_count = 0;
  PixelCoord start{-1, -1};
  for (int y = 0; y < h && start.x < 0; ++y)
    for (int x = 0; x < w; ++x)
      if (mask(y, x)) {
        start = {x, y};
        break;
      }
  for (Eigen::Index i = 0; i < mask.size(); ++i) object_count += mask.data()[i] != 0;

  if (object_count == 0) throw SampleError("empty-mask", "boundary trace on an empty mask");
  if (object_count < 8) {
    throw SampleError("degenerate-shape", "object has only " + std::to_string(object_count) +
                                              " pixels; need at least 8");
  }

  // Walk state is (pixel, backtrack direction). Per pixel, one bit per
  // possible backtrack direction; a repeated state closes the contour.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
  const auto state_byte = [&](const PixelCoord& q) -> std::uint8_t& {
    return seen[static_cast<std::size_t>(q.y) * w + q.x];
  };

  BoundaryPath path;
  PixelCoord p = start;
  int bdir = kWest;  // raster scan arrives from the west

  while (!(state_byte(p) & (1u << bdir))) {
    state_byte(p) |= (1u << bdir);
    path.push_back(p);

    int k = 0;
    bool moved = false;
    for (int step = 1; step <= 8; ++step) {
      k = (bdir + step) % 8;
      const int nx = p.x + kDx[k];
      const int ny = p.y + kDy[k];
      if (object_at(mask, nx, ny)) {
        const int prev = (k + 7) % 8;  // last examined background neighbor
        const PixelCoord back{p.x + kDx[prev], p.y + kDy[prev]};
        p = {nx, ny};
        bdir = direction_index(back.x - p.x, back.y - p.y);
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw SampleError("degenerate-shape", "isolated pixel encountered during boundary trace");
    }
  }

  // The initial state is off-cycle for thin shapes; drop the duplicated
  // closing coordinate it can leave behind.
  if (path.size() > 1 && path.front() == path.back()) path.pop_back();
  return path;
}

Vec2 centroid_of(const BoundaryPath& path) {
  if (path.empty()) throw std::invalid_argument("centroid of an empty boundary path");
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (const PixelCoord& p : path) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(path.size());
  return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

Vec2 region_centroid(const BinaryImage& mask) {
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  std::int64_t n = 0;
  for (int y = 0; y < height(mask); ++y)
    for (int x = 0; x < width(mask); ++x)
      if (mask(y, x)) {
        sx += x;
        sy += y;
        ++n;
      }
  if (n == 0) throw SampleError("empty-mask", "region centroid of an empty mask");
  return {static_cast<double>(sx) / static_cast<double>(n),
          static_cast<double>(sy) / static_cast<double>(n)};
}

Eigen::VectorXd distance_profile(const BoundaryPath& path, const Vec2& center) {
  Eigen::VectorXd values(static_cast<Eigen::Index>(path.size()));
  for (std::size_t i = 0; i < path.size(); ++i) {
    const double dx = path[i].x - center.x();
    const double dy = path[i].y - center.y();
    values[static_cast<Eigen::Index>(i)] = std::sqrt(dx * dx + dy * dy);
  }
  return values;
}

MinimaSet find_minima(const Eigen::VectorXd& profile, int window, double min_depth_frac) {
  const int n = static_cast<int>(profile.size());
  if (window < 1) throw std::invalid_argument("smoothing window must be >= 1");
  if (n <= 4 * window) {
    throw std::invalid_argument("profile length " + std::to_string(n) +
                                " must exceed 4 * window = " + std::to_string(4 * window));
  }

  // Circular moving average of width `window` (centered, so effectively
  // 2*(window/2)+1 samples).
  const int half = window / 2;
  Eigen::VectorXd smoothed(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int d = -half; d <= half; ++d) acc += profile[circular_index(i + d, n)];
    smoothed[i] = acc / (2 * half + 1);
  }

  const double depth_ceiling = smoothed.mean() * (1.0 - min_depth_frac);

  // Candidates: minima of the smoothed curve over +/- window that dip below
  // the significance ceiling. Pure rasterization ripple stays above it.
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    if (smoothed[i] > depth_ceiling) continue;
    bool minimal = true;
    bool strict = false;
    for (int d = 1; d <= window && minimal; ++d) {
      for (const int j : {circular_index(i - d, n), circular_index(i + d, n)}) {
        if (smoothed[i] > smoothed[j]) minimal = false;
        if (smoothed[i] < smoothed[j]) strict = true;
      }
    }
    if (minimal && strict) candidates.push_back(i);
  }

  // Refine each candidate to the raw valley bottom by downhill descent.
  std::vector<int> refined;
  for (int c : candidates) {
    int cur = c;
    for (int guard = 0; guard < n; ++guard) {
      const int l = circular_index(cur - 1, n);
      const int r = circular_index(cur + 1, n);
      if (profile[l] < profile[cur] && profile[l] <= profile[r]) {
        cur = l;
      } else if (profile[r] < profile[cur]) {
        cur = r;
      } else {
        break;
      }
    }
    refined.push_back(cur);
  }

  // The nearest point overall is always a candidate.
  int global_min = 0;
  for (int i = 1; i < n; ++i)
    if (profile[i] < profile[global_min]) global_min = i;
  refined.push_back(global_min);

  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());

  // Deeper minima suppress shallower ones within `window` indices.
  std::sort(refined.begin(), refined.end(), [&](int a, int b) {
    if (profile[a] != profile[b]) return profile[a] < profile[b];
    return a < b;
  });
  std::vector<int> survivors;
  for (int idx : refined) {
    bool suppressed = false;
    for (int s : survivors) {
      if (circular_distance(idx, s, n) <= window) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) survivors.push_back(idx);
  }

  if (survivors.size() < 4) {
    throw SampleError("insufficient-structure",
                      "found " + std::to_string(survivors.size()) +
                          " usable distance minima; the pipeline needs 4");
  }
  MinimaSet result;
  std::copy_n(survivors.begin(), 4, result.indices.begin());
  return result;
}

}  // namespace palmreg
