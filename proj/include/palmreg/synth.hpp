#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "palmreg/classify.hpp"
#include "palmreg/types.hpp"

namespace palmreg {

enum class Handedness { Left, Right };

const char* to_string(Handedness h);

/// Parameters of a schematic palm silhouette: a disk palm with capped
/// rectangle fingers and a thumb, separated by V-shaped valley notches carved
/// into the palm rim. The central inter-finger notch is cut three times as
/// deep as the others and serves as the registration anchor.
struct HandSpec {
  int image_size = 256;           // square canvas
  double palm_radius = 70.0;      // pixels
  int finger_count = 4;
  bool thumb = true;
  double finger_length = 30.0;    // beyond the palm rim
  double finger_width = 14.0;
  double valley_depth = 6.0;      // notch depth; the anchor notch uses 3x
  double base_orientation_deg = 0.0;  // rotation away from the canonical pose
  Handedness handedness = Handedness::Right;
  int noise_blob_count = 3;
  double noise_blob_min = 3.0;    // blob radius range, pixels
  double noise_blob_max = 7.0;
  std::uint32_t seed = 1;
};

/// Everything the generator knows exactly about a sample.
struct GroundTruth {
  BinaryImage mask;                   // hand silhouette only, no noise blobs
  std::vector<PixelCoord> valleys;    // notch apexes, anchor last
  PixelCoord anchor_valley;           // deepest notch apex
  double canonical_orientation_deg = 0.0;  // equals the requested base orientation
  LineAnnotation annotation;          // canonical-frame heart/life endpoints
  Handedness handedness = Handedness::Right;
};

/// Renders a bright hand silhouette (~200 +/- jitter) on a dark background
/// (~30 +/- jitter) plus the requested noise blobs, and reports exact ground
/// truth. The geometry is turned so that, seen from the silhouette's boundary
/// centroid, the anchor notch sits at base_orientation_deg; with the default
/// orientation the pipeline therefore measures a registration angle near
/// zero. Annotation endpoint signs encode handedness: Right hands get
/// negative heart/life inclinations, Left hands positive ones.
///
/// Throws std::invalid_argument for geometry that cannot fit the canvas.
std::pair<GrayImage, GroundTruth> generate_hand(const HandSpec& spec);

/// Queue-based 8-connected flood fill, labels in first-encounter raster
/// order. Reference partition for label_components.
LabelImage flood_fill_label(const BinaryImage& mask);

/// Exhaustive scan for strict circular local minima (no smoothing). Superset
/// reference for find_minima survivors.
std::vector<int> brute_force_minima(const Eigen::VectorXd& profile);

}  // namespace palmreg
