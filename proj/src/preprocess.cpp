#include "palmreg/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace palmreg {

namespace {

void check_spec(const KernelSpec& spec) {
  if (spec.size < 3 || spec.size % 2 == 0) {
    throw std::invalid_argument("kernel size must be odd and >= 3, got " +
                                std::to_string(spec.size));
  }
  if (!(spec.sigma > 0.0)) {
    throw std::invalid_argument("kernel sigma must be positive");
  }
}

// Union-find over provisional labels.
int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  parent[b] = a;
}

}  // namespace

Eigen::ArrayXXd gaussian_kernel(const KernelSpec& spec) {
  check_spec(spec);
  const int r = spec.size / 2;
  Eigen::ArrayXXd k(spec.size, spec.size);
  const double inv = 1.0 / (2.0 * spec.sigma * spec.sigma);
  for (int y = -r; y <= r; ++y)
    for (int x = -r; x <= r; ++x)
      k(y + r, x + r) = std::exp(-(x * x + y * y) * inv);
  k /= k.sum();
  return k;
}

GrayImage filter_image(const GrayImage& img, const KernelSpec& spec) {
  const Eigen::ArrayXXd kernel = gaussian_kernel(spec);
  const int r = spec.size / 2;
  const int w = width(img);
  const int h = height(img);

  // Replicate-padded copy so the inner loop needs no bounds checks.
  Eigen::ArrayXXd padded(h + 2 * r, w + 2 * r);
  for (int y = 0; y < h + 2 * r; ++y) {
    const int sy = std::clamp(y - r, 0, h - 1);
    for (int x = 0; x < w + 2 * r; ++x) {
      const int sx = std::clamp(x - r, 0, w - 1);
      padded(y, x) = img(sy, sx);
    }
  }

  GrayImage out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int ky = 0; ky < spec.size; ++ky)
        for (int kx = 0; kx < spec.size; ++kx)
          acc += kernel(ky, kx) * padded(y + ky, x + kx);
      const long v = std::lround(acc);
      out(y, x) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }
  }
  return out;
}

double mean_intensity(const GrayImage& img) {
  std::uint64_t sum = 0;
  const std::uint8_t* p = img.data();
  const std::uint8_t* end = p + img.size();
  for (; p != end; ++p) sum += *p;
  return static_cast<double>(sum) / static_cast<double>(img.size());
}

BinaryImage binarize(const GrayImage& img, double threshold) {
  BinaryImage out(img.rows(), img.cols());
  for (Eigen::Index i = 0; i < img.size(); ++i)
    out.data()[i] = img.data()[i] > threshold ? 1 : 0;
  return out;
}

LabelImage label_components(const BinaryImage& mask) {
  const int w = width(mask);
  const int h = height(mask);
  ImageT<std::int32_t> provisional = ImageT<std::int32_t>::Zero(h, w);
  std::vector<int> parent{0};  // parent[0] unused (background)

  // First pass: assign provisional labels, merging across the four
  // already-scanned 8-neighbors (W, NW, N, NE).
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(y, x)) continue;
      int best = 0;
      const int nbr[4][2] = {{x - 1, y}, {x - 1, y - 1}, {x, y - 1}, {x + 1, y - 1}};
      for (const auto& n : nbr) {
        if (n[0] < 0 || n[1] < 0 || n[0] >= w) continue;
        const int lbl = provisional(n[1], n[0]);
        if (lbl == 0) continue;
        if (best == 0) {
          best = lbl;
        } else {
          unite(parent, best, lbl);
        }
      }
      if (best == 0) {
        best = static_cast<int>(parent.size());
        parent.push_back(best);
      }
      provisional(y, x) = best;
    }
  }

  // Second pass: compress to final labels in first-encounter raster order.
  std::vector<int> final_label(parent.size(), 0);
  LabelImage out;
  out.labels = ImageT<std::int32_t>::Zero(h, w);
  int next = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int p = provisional(y, x);
      if (p == 0) continue;
      const int root = find_root(parent, p);
      if (final_label[root] == 0) final_label[root] = ++next;
      out.labels(y, x) = final_label[root];
    }
  }
  out.count = next;
  return out;
}

BinaryImage keep_largest(const LabelImage& labels) {
  BinaryImage out = BinaryImage::Zero(labels.labels.rows(), labels.labels.cols());
  if (labels.count == 0) return out;

  std::vector<std::int64_t> area(labels.count + 1, 0);
  for (Eigen::Index i = 0; i < labels.labels.size(); ++i) ++area[labels.labels.data()[i]];

  int best = 1;
  for (int lbl = 2; lbl <= labels.count; ++lbl)
    if (area[lbl] > area[best]) best = lbl;  // strict: ties keep the smaller label

  for (Eigen::Index i = 0; i < labels.labels.size(); ++i)
    out.data()[i] = labels.labels.data()[i] == best ? 1 : 0;
  return out;
}

BinaryImage preprocess_sample(const GrayImage& img, const KernelSpec& spec) {
  const GrayImage filtered = filter_image(img, spec);
  const double mu = mean_intensity(filtered);
  return keep_largest(label_components(binarize(filtered, mu)));
}

}  // namespace palmreg
