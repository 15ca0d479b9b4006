#include "palmreg/classify.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "palmreg/errors.hpp"

namespace palmreg {

namespace {

// -1, 0 or +1; angles inside the dead band carry no sign.
int sign_with_deadband(double deg, double epsilon_deg) {
  if (deg < -epsilon_deg) return -1;
  if (deg > epsilon_deg) return 1;
  return 0;
}

using nlohmann::json;

PixelCoord parse_point(const json& j, const std::string& field,
                       const std::filesystem::path& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw SampleError("annotation",
                      field + " must be an [x, y] integer pair: " + path.string());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

const char* to_string(PalmClass c) {
  switch (c) {
    case PalmClass::Left: return "LEFT";
    case PalmClass::Right: return "RIGHT";
    case PalmClass::Indeterminate: return "INDET";
  }
  return "INDET";
}

double inclination(const PixelCoord& start, const PixelCoord& end) {
  if (start == end) throw std::domain_error("inclination of coincident points");
  double deg = rad_to_deg(std::atan2(static_cast<double>(start.y - end.y),
                                     static_cast<double>(end.x - start.x)));
  // Palm lines are undirected; fold onto the (-90, 90] branch so a mirrored
  // segment yields exactly the negated angle.
  if (deg > 90.0) deg -= 180.0;
  if (deg <= -90.0) deg += 180.0;
  return deg;
}

ClassificationRecord classify_sample(const LineAnnotation& ann, double epsilon_deg,
                                     ClassifyRule rule) {
  validate_annotation(ann, 0, 0);

  ClassificationRecord rec;
  if (ann.heart_present) rec.theta1_deg = inclination(ann.heart_start, ann.heart_end);
  rec.theta2_deg = inclination(ann.life_start, ann.life_end);

  const int s1 = ann.heart_present ? sign_with_deadband(*rec.theta1_deg, epsilon_deg) : 0;
  const int s2 = sign_with_deadband(rec.theta2_deg, epsilon_deg);

  if (rule == ClassifyRule::Algorithm1) {
    if (ann.heart_present && s1 < 0 && s2 < 0) {
      rec.palm_class = PalmClass::Right;
      rec.rule_path = "algorithm1-both-negative";
    } else {
      rec.palm_class = PalmClass::Left;
      rec.rule_path = "algorithm1-else";
    }
    return rec;
  }

  if (ann.heart_present && s1 < 0 && s2 < 0) {
    rec.palm_class = PalmClass::Right;
    rec.rule_path = "both-negative";
  } else if (ann.heart_present && s1 > 0 && s2 > 0) {
    rec.palm_class = PalmClass::Left;
    rec.rule_path = "both-positive";
  } else if (s2 < 0) {
    rec.palm_class = PalmClass::Right;
    rec.rule_path = "life-fallback";
  } else if (s2 > 0) {
    rec.palm_class = PalmClass::Left;
    rec.rule_path = "life-fallback";
  } else {
    rec.palm_class = PalmClass::Indeterminate;
    rec.rule_path = "life-indeterminate";
  }
  return rec;
}

LineAnnotation mirror_annotation(const LineAnnotation& ann, int image_width) {
  const auto flip = [image_width](PixelCoord p) {
    return PixelCoord{image_width - 1 - p.x, p.y};
  };
  LineAnnotation out = ann;
  out.heart_start = flip(ann.heart_start);
  out.heart_end = flip(ann.heart_end);
  out.life_start = flip(ann.life_start);
  out.life_end = flip(ann.life_end);
  return out;
}

void validate_annotation(const LineAnnotation& ann, int image_width, int image_height) {
  if (ann.heart_present && ann.heart_start == ann.heart_end) {
    throw SampleError("annotation", "heart line endpoints coincide");
  }
  if (ann.life_start == ann.life_end) {
    throw SampleError("annotation", "life line endpoints coincide");
  }
  if (image_width <= 0 || image_height <= 0) return;

  const auto check_bounds = [&](const PixelCoord& p, const char* field) {
    if (p.x < 0 || p.y < 0 || p.x >= image_width || p.y >= image_height) {
      throw SampleError("annotation", std::string(field) + " point (" + std::to_string(p.x) +
                                          ", " + std::to_string(p.y) +
                                          ") lies outside the registered image");
    }
  };
  if (ann.heart_present) {
    check_bounds(ann.heart_start, "heart start");
    check_bounds(ann.heart_end, "heart end");
  }
  check_bounds(ann.life_start, "life start");
  check_bounds(ann.life_end, "life end");
}

LineAnnotation load_annotation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SampleError("annotation", "invalid JSON in " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("life")) {
    throw SampleError("annotation", "missing required field 'life': " + path.string());
  }

  LineAnnotation ann;
  const json& life = j["life"];
  if (!life.is_array() || life.size() != 2) {
    throw SampleError("annotation", "'life' must be two [x, y] points: " + path.string());
  }
  ann.life_start = parse_point(life[0], "life start", path);
  ann.life_end = parse_point(life[1], "life end", path);

  if (j.contains("heart") && !j["heart"].is_null()) {
    const json& heart = j["heart"];
    if (!heart.is_array() || heart.size() != 2) {
      throw SampleError("annotation", "'heart' must be null or two [x, y] points: " + path.string());
    }
    ann.heart_present = true;
    ann.heart_start = parse_point(heart[0], "heart start", path);
    ann.heart_end = parse_point(heart[1], "heart end", path);
  }
  return ann;
}

void save_annotation(const LineAnnotation& ann, const std::filesystem::path& path) {
  json j;
  if (ann.heart_present) {
    j["heart"] = {{ann.heart_start.x, ann.heart_start.y}, {ann.heart_end.x, ann.heart_end.y}};
  } else {
    j["heart"] = nullptr;
  }
  j["life"] = {{ann.life_start.x, ann.life_start.y}, {ann.life_end.x, ann.life_end.y}};

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write annotation: " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace palmreg
