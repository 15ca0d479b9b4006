#include "palmreg/raster.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "palmreg/errors.hpp"

namespace palmreg {

namespace {

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
  std::string tok;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  return tok;
}

int parse_pgm_int(std::istream& in, const char* field, const std::filesystem::path& path) {
  const std::string tok = next_pgm_token(in);
  if (tok.empty()) {
    throw FormatError("truncated PGM header (missing " + std::string(field) + "): " +
                      path.string());
  }
  try {
    std::size_t pos = 0;
    const int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw FormatError("malformed PGM " + std::string(field) + " '" + tok + "': " + path.string());
  }
}

GrayImage load_pgm(std::ifstream& in, const std::filesystem::path& path) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5') {
    throw FormatError("expected P5 PGM magic: " + path.string());
  }
  const int w = parse_pgm_int(in, "width", path);
  const int h = parse_pgm_int(in, "height", path);
  const int maxval = parse_pgm_int(in, "maxval", path);
  if (w < 1 || h < 1) {
    throw FormatError("invalid PGM dimensions " + std::to_string(w) + "x" + std::to_string(h) +
                      ": " + path.string());
  }
  if (maxval < 1 || maxval > 255) {
    throw FormatError("unsupported PGM maxval " + std::to_string(maxval) +
                      " (only 8-bit supported): " + path.string());
  }
  // The single whitespace byte after maxval was already consumed by the
  // token reader. Raw samples follow; values are kept as stored.
  GrayImage img(h, w);
  in.read(reinterpret_cast<char*>(img.data()), static_cast<std::streamsize>(w) * h);
  if (in.gcount() != static_cast<std::streamsize>(w) * h) {
    throw FormatError("truncated PGM pixel data: " + path.string());
  }
  return img;
}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;

  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

GrayImage load_png(const std::filesystem::path& path) {
  PngReader r;
  r.fp = std::fopen(path.string().c_str(), "rb");
  if (!r.fp) throw IoError("cannot open file: " + path.string());

  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw IoError("libpng allocation failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw IoError("libpng allocation failed");

  if (setjmp(png_jmpbuf(r.png))) {
    throw FormatError("corrupt PNG stream: " + path.string());
  }
  png_init_io(r.png, r.fp);
  png_read_info(r.png, r.info);

  const png_uint_32 w = png_get_image_width(r.png, r.info);
  const png_uint_32 h = png_get_image_height(r.png, r.info);
  const int bit_depth = png_get_bit_depth(r.png, r.info);
  const int color_type = png_get_color_type(r.png, r.info);

  if (bit_depth != 8) {
    throw FormatError("unsupported PNG bit depth " + std::to_string(bit_depth) +
                      " (only 8-bit supported): " + path.string());
  }
  if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB) {
    throw FormatError("unsupported PNG color type " + std::to_string(color_type) +
                      " (only grayscale and RGB supported): " + path.string());
  }
  png_set_interlace_handling(r.png);
  png_read_update_info(r.png, r.info);

  const std::size_t rowbytes = png_get_rowbytes(r.png, r.info);
  std::vector<std::uint8_t> buf(rowbytes * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = buf.data() + y * rowbytes;
  png_read_image(r.png, rows.data());

  GrayImage img(h, w);
  if (color_type == PNG_COLOR_TYPE_GRAY) {
    for (png_uint_32 y = 0; y < h; ++y)
      for (png_uint_32 x = 0; x < w; ++x) img(y, x) = rows[y][x];
  } else {
    for (png_uint_32 y = 0; y < h; ++y) {
      for (png_uint_32 x = 0; x < w; ++x) {
        const std::uint8_t* px = rows[y] + 3 * x;
        const double lum = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
        img(y, x) = static_cast<std::uint8_t>(std::lround(lum));
      }
    }
  }
  return img;
}

}  // namespace

GrayImage load_gray(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2) throw FormatError("file too short to identify: " + path.string());
  in.seekg(0);
  if (magic[0] == 'P' && magic[1] == '5') return load_pgm(in, path);
  if (magic[0] == 'P' && magic[1] >= '1' && magic[1] <= '7') {
    throw FormatError(std::string("unsupported netpbm variant P") + magic[1] +
                      " (only binary P5 supported): " + path.string());
  }
  if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
    in.close();
    return load_png(path);
  }
  throw FormatError("unrecognized image format (expected P5 PGM or PNG): " + path.string());
}

void save_gray(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << "P5\n" << width(img) << ' ' << height(img) << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data()),
            static_cast<std::streamsize>(img.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

GrayImage binary_to_gray(const BinaryImage& mask) {
  return (mask.cast<int>() * 255).cast<std::uint8_t>();
}

}  // namespace palmreg
