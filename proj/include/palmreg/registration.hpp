#pragma once

#include "palmreg/contour.hpp"
#include "palmreg/types.hpp"

namespace palmreg {

/// Signed angle from a to b in degrees, range (-180, 180]:
/// atan2(a x b, a . b). Positive angles are clockwise on screen because y
/// points down. Throws std::domain_error on a zero vector.
double angle_between(const Vec2& a, const Vec2& b);

/// Index (into the boundary path) of the minima entry with the globally
/// smallest distance; ties go to the smaller boundary index.
int choose_anchor(const MinimaSet& minima, const Eigen::VectorXd& profile);

/// Signed angle from the reference ray (default +x from the centroid) to the
/// vector centroid -> path[anchor]. Throws SampleError("degenerate-geometry")
/// when the anchor coincides with the centroid.
double registration_angle(const BoundaryPath& path, const Vec2& centroid, int anchor,
                          double reference_angle_deg = 0.0);

/// Geometry shared by the image and mask rotations: output canvas covering
/// the rotated bounding box, plus the forward/inverse point maps.
struct RotationFrame {
  Vec2 center;       // rotation center in source coordinates
  double content_deg = 0.0;  // angle the content is turned by (clockwise on screen)
  double offset_x = 0.0;     // world coordinate of output pixel (0, 0)
  double offset_y = 0.0;
  int out_width = 0;
  int out_height = 0;

  Vec2 to_source(double out_x, double out_y) const;
  Vec2 to_output(const Vec2& src) const;
};

/// Frame for rotating w x h content by `content_deg` about `center`.
RotationFrame make_rotation_frame(int w, int h, const Vec2& center, double content_deg);

/// Rotates the image content by -theta_deg about `center` (so a direction at
/// theta lands on the reference ray). Bilinear interpolation; the canvas
/// grows to the rotated bounding box; samples outside the source read `fill`.
GrayImage rotate_image(const GrayImage& img, const Vec2& center, double theta_deg,
                       std::uint8_t fill);

/// Mask counterpart of rotate_image: nearest-neighbor, background fill.
BinaryImage rotate_mask(const BinaryImage& mask, const Vec2& center, double theta_deg);

struct RegistrationOptions {
  int smoothing_window = 0;  // 0 = max(5, round(path length / 100))
  double reference_angle_deg = 0.0;
  bool use_region_centroid = false;
  double min_depth_frac = 0.05;
  std::uint8_t fill = 0;
};

/// Everything the registration stage produced for one sample.
struct RegistrationRecord {
  Vec2 centroid;
  BoundaryPath path;
  Eigen::VectorXd profile;
  MinimaSet minima;
  int anchor_index = 0;
  PixelCoord anchor;
  double theta_deg = 0.0;
  GrayImage registered;
  BinaryImage registered_mask;
};

/// Full registration: trace -> centroid -> profile -> minima -> anchor ->
/// angle -> rotate image and mask into canonical orientation.
RegistrationRecord register_sample(const GrayImage& img, const BinaryImage& mask,
                                   const RegistrationOptions& options = {});

}  // namespace palmreg
