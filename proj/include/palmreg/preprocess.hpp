#pragma once

#include "palmreg/types.hpp"

namespace palmreg {

/// Square Gaussian low-pass kernel. The default matches the pipeline's
/// smoothing stage: 5x5 with a sub-pixel sigma, which is close to a delta.
struct KernelSpec {
  int size = 5;        // odd, >= 3
  double sigma = 0.25; // pixels, > 0
};

/// Normalized Gaussian weights w(x, y) ~ exp(-(x^2+y^2) / (2 sigma^2)) sampled
/// at integer offsets from the kernel center. Weights sum to 1 within 1e-9.
Eigen::ArrayXXd gaussian_kernel(const KernelSpec& spec);

/// 2D convolution with replicate border extension. Results are rounded to the
/// nearest integer and clamped to [0, 255]; dimensions are preserved.
GrayImage filter_image(const GrayImage& img, const KernelSpec& spec);

/// Arithmetic mean of all pixel values (the sum is accumulated exactly).
double mean_intensity(const GrayImage& img);

/// pixel > threshold -> 1, otherwise 0. Equality maps to background so a
/// constant image binarized at its own mean comes out empty.
BinaryImage binarize(const GrayImage& img, double threshold);

/// 8-connected component labeling (two-pass with union-find). Labels are
/// 1..count in first-encounter raster order.
LabelImage label_components(const BinaryImage& mask);

/// Keeps only the component with the largest pixel count; ties go to the
/// smallest label. An empty labeling yields an all-zero mask.
BinaryImage keep_largest(const LabelImage& labels);

/// Smooth, binarize at the filtered mean, label, and keep the largest object.
BinaryImage preprocess_sample(const GrayImage& img, const KernelSpec& spec);

}  // namespace palmreg
