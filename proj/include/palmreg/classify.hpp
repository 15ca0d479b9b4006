#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "palmreg/types.hpp"

namespace palmreg {

/// Heart-line and life-line endpoints in registered-image coordinates. The
/// heart line may be absent (it is often short or faint); the life line is
/// always required.
struct LineAnnotation {
  bool heart_present = false;
  PixelCoord heart_start;  // P1
  PixelCoord heart_end;    // P2
  PixelCoord life_start;   // Q1
  PixelCoord life_end;     // Q2
};

enum class PalmClass { Left, Right, Indeterminate };

enum class ClassifyRule {
  TwoLevel,    // disagreeing signs fall back to the life line
  Algorithm1,  // both negative -> Right, anything else -> Left
};

const char* to_string(PalmClass c);

struct ClassificationRecord {
  std::optional<double> theta1_deg;  // heart line, absent when no heart line
  double theta2_deg = 0.0;           // life line
  PalmClass palm_class = PalmClass::Indeterminate;
  std::string rule_path;             // which branch of the decision fired
};

/// Inclination of the line through start -> end, measured y-up, reduced to
/// the (-90, 90] line branch so mirroring negates it exactly. Throws
/// std::domain_error on coincident points.
double inclination(const PixelCoord& start, const PixelCoord& end);

/// Left/Right decision from the line inclinations. Angles within
/// epsilon_deg of zero carry no sign. TwoLevel: both negative -> Right, both
/// positive -> Left, otherwise the life line alone decides (Indeterminate
/// when it is also signless). Algorithm1: both negative -> Right, else Left.
ClassificationRecord classify_sample(const LineAnnotation& ann, double epsilon_deg = 1.0,
                                     ClassifyRule rule = ClassifyRule::TwoLevel);

/// Horizontal flip of every endpoint: x -> width - 1 - x. Endpoint order is
/// preserved, so every inclination is negated.
LineAnnotation mirror_annotation(const LineAnnotation& ann, int image_width);

/// Structural checks plus (optional) bounds checks against the registered
/// image. Pass width/height <= 0 to skip the bounds check. Throws
/// SampleError("annotation") naming the offending field.
void validate_annotation(const LineAnnotation& ann, int image_width, int image_height);

/// Sidecar JSON: {"heart": [[x,y],[x,y]] | null, "life": [[x,y],[x,y]]}.
LineAnnotation load_annotation(const std::filesystem::path& path);
void save_annotation(const LineAnnotation& ann, const std::filesystem::path& path);

}  // namespace palmreg
