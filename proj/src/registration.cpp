#include "palmreg/registration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "palmreg/errors.hpp"

namespace palmreg {

namespace {

// Rotate v by `deg`, clockwise on screen (y down).
Vec2 rotate_vec(const Vec2& v, double deg) {
  const double c = std::cos(deg_to_rad(deg));
  const double s = std::sin(deg_to_rad(deg));
  return {v.x() * c - v.y() * s, v.x() * s + v.y() * c};
}

}  // namespace

double angle_between(const Vec2& a, const Vec2& b) {
  if (a.isZero(0.0) || b.isZero(0.0)) {
    throw std::domain_error("angle between vectors requires nonzero vectors");
  }
  const double cross = a.x() * b.y() - a.y() * b.x();
  const double dot = a.x() * b.x() + a.y() * b.y();
  double deg = rad_to_deg(std::atan2(cross, dot));
  if (deg <= -180.0) deg = 180.0;  // keep the antiparallel case on the +180 branch
  return deg;
}

int choose_anchor(const MinimaSet& minima, const Eigen::VectorXd& profile) {
  int best = minima.indices[0];
  for (int idx : minima.indices) {
    if (profile[idx] < profile[best] || (profile[idx] == profile[best] && idx < best)) {
      best = idx;
    }
  }
  return best;
}

double registration_angle(const BoundaryPath& path, const Vec2& centroid, int anchor,
                          double reference_angle_deg) {
  if (anchor < 0 || anchor >= static_cast<int>(path.size())) {
    throw std::invalid_argument("anchor index out of range");
  }
  const Vec2 v2{path[anchor].x - centroid.x(), path[anchor].y - centroid.y()};
  if (v2.norm() < 1e-9) {
    throw SampleError("degenerate-geometry", "anchor point coincides with the centroid");
  }
  const Vec2 v1{std::cos(deg_to_rad(reference_angle_deg)),
                std::sin(deg_to_rad(reference_angle_deg))};
  return angle_between(v1, v2);
}

Vec2 RotationFrame::to_source(double out_x, double out_y) const {
  const Vec2 world{out_x + offset_x, out_y + offset_y};
  return center + rotate_vec(world - center, -content_deg);
}

Vec2 RotationFrame::to_output(const Vec2& src) const {
  const Vec2 world = center + rotate_vec(src - center, content_deg);
  return {world.x() - offset_x, world.y() - offset_y};
}

RotationFrame make_rotation_frame(int w, int h, const Vec2& center, double content_deg) {
  RotationFrame frame;
  frame.center = center;
  frame.content_deg = content_deg;

  const Vec2 corners[4] = {{0.0, 0.0},
                           {static_cast<double>(w - 1), 0.0},
                           {0.0, static_cast<double>(h - 1)},
                           {static_cast<double>(w - 1), static_cast<double>(h - 1)}};
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Vec2 r = center + rotate_vec(corners[i] - center, content_deg);
    if (i == 0) {
      min_x = max_x = r.x();
      min_y = max_y = r.y();
    } else {
      min_x = std::min(min_x, r.x());
      max_x = std::max(max_x, r.x());
      min_y = std::min(min_y, r.y());
      max_y = std::max(max_y, r.y());
    }
  }
  frame.offset_x = std::floor(min_x);
  frame.offset_y = std::floor(min_y);
  frame.out_width = static_cast<int>(std::ceil(max_x) - frame.offset_x) + 1;
  frame.out_height = static_cast<int>(std::ceil(max_y) - frame.offset_y) + 1;
  return frame;
}

GrayImage rotate_image(const GrayImage& img, const Vec2& center, double theta_deg,
                       std::uint8_t fill) {
  const RotationFrame frame = make_rotation_frame(width(img), height(img), center, -theta_deg);
  GrayImage out(frame.out_height, frame.out_width);

  const auto sample = [&](int x, int y) -> double {
    return in_bounds(img, x, y) ? static_cast<double>(img(y, x)) : static_cast<double>(fill);
  };

  for (int y = 0; y < frame.out_height; ++y) {
    for (int x = 0; x < frame.out_width; ++x) {
      const Vec2 src = frame.to_source(x, y);
      const double fx = std::floor(src.x());
      const double fy = std::floor(src.y());
      const int x0 = static_cast<int>(fx);
      const int y0 = static_cast<int>(fy);
      const double ax = src.x() - fx;
      const double ay = src.y() - fy;
      const double v = (sample(x0, y0) * (1.0 - ax) + sample(x0 + 1, y0) * ax) * (1.0 - ay) +
                       (sample(x0, y0 + 1) * (1.0 - ax) + sample(x0 + 1, y0 + 1) * ax) * ay;
      out(y, x) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return out;
}

BinaryImage rotate_mask(const BinaryImage& mask, const Vec2& center, double theta_deg) {
  const RotationFrame frame = make_rotation_frame(width(mask), height(mask), center, -theta_deg);
  BinaryImage out(frame.out_height, frame.out_width);
  for (int y = 0; y < frame.out_height; ++y) {
    for (int x = 0; x < frame.out_width; ++x) {
      const Vec2 src = frame.to_source(x, y);
      const int sx = static_cast<int>(std::lround(src.x()));
      const int sy = static_cast<int>(std::lround(src.y()));
      out(y, x) = in_bounds(mask, sx, sy) ? mask(sy, sx) : 0;
    }
  }
  return out;
}

RegistrationRecord register_sample(const GrayImage& img, const BinaryImage& mask,
                                   const RegistrationOptions& options) {
  if (img.rows() != mask.rows() || img.cols() != mask.cols()) {
    throw std::invalid_argument("image and mask dimensions differ");
  }

  RegistrationRecord rec;
  rec.path = trace_boundary(mask);
  rec.centroid = options.use_region_centroid ? region_centroid(mask) : centroid_of(rec.path);
  rec.profile = distance_profile(rec.path, rec.centroid);

  const int n = static_cast<int>(rec.profile.size());
  int window = options.smoothing_window > 0
                   ? options.smoothing_window
                   : static_cast<int>(std::max(5L, std::lround(n / 100.0)));
  window = std::clamp(window, 1, std::max(1, (n - 1) / 4));

  rec.minima = find_minima(rec.profile, window, options.min_depth_frac);
  rec.anchor_index = choose_anchor(rec.minima, rec.profile);
  rec.anchor = rec.path[static_cast<std::size_t>(rec.anchor_index)];
  rec.theta_deg =
      registration_angle(rec.path, rec.centroid, rec.anchor_index, options.reference_angle_deg);
  rec.registered = rotate_image(img, rec.centroid, rec.theta_deg, options.fill);
  rec.registered_mask = rotate_mask(mask, rec.centroid, rec.theta_deg);
  return rec;
}

}  // namespace palmreg
