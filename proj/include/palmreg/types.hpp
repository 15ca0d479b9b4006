#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace palmreg {

/// Dense row-major pixel grid. Indexed as img(y, x) with y growing downward
/// and x growing rightward (screen coordinates).
template <typename Scalar>
using ImageT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 8-bit intensities in [0, 255].
using GrayImage = ImageT<std::uint8_t>;

/// Strictly {0, 1}; 1 = object, 0 = background.
using BinaryImage = ImageT<std::uint8_t>;

/// 2D point or direction in screen coordinates (x right, y down).
using Vec2 = Eigen::Vector2d;

/// 0-based pixel coordinate: x = column, y = row.
struct PixelCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// 8-connected components of a binary image. Object labels are exactly
/// 1..count, assigned in first-encounter raster order; 0 is background.
struct LabelImage {
  ImageT<std::int32_t> labels;
  int count = 0;

  int width() const { return static_cast<int>(labels.cols()); }
  int height() const { return static_cast<int>(labels.rows()); }
};

template <typename Scalar>
int width(const ImageT<Scalar>& img) {
  return static_cast<int>(img.cols());
}

template <typename Scalar>
int height(const ImageT<Scalar>& img) {
  return static_cast<int>(img.rows());
}

template <typename Scalar>
bool in_bounds(const ImageT<Scalar>& img, int x, int y) {
  return x >= 0 && y >= 0 && x < width(img) && y < height(img);
}

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle in degrees to (-180, 180].
inline double wrap_angle_deg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a <= -180.0) a += 360.0;
  if (a > 180.0) a -= 360.0;
  return a;
}

}  // namespace palmreg
