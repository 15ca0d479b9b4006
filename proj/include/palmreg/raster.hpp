#pragma once

#include <filesystem>

#include "palmreg/types.hpp"

namespace palmreg {

/// Reads a P5 (binary) PGM or an 8-bit grayscale/RGB PNG. RGB is converted to
/// luminance round(0.299 R + 0.587 G + 0.114 B). The container is detected
/// from the magic bytes, not the extension.
///
/// Throws IoError when the file cannot be read and FormatError for anything
/// that is not one of the supported encodings.
GrayImage load_gray(const std::filesystem::path& path);

/// Writes a P5 PGM with maxval 255. load_gray(save_gray(img)) is bit-exact.
void save_gray(const GrayImage& img, const std::filesystem::path& path);

/// Maps 1 -> 255 and 0 -> 0, preserving dimensions.
GrayImage binary_to_gray(const BinaryImage& mask);

}  // namespace palmreg
