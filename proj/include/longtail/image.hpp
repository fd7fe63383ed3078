#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace longtail {

// 8-bit RGB raster, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // height * width * 3

  Image() = default;
  Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t* at(int x, int y) {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }

  bool operator==(const Image&) const = default;
};

Image solid(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Drawing helpers for synthetic fixtures. Coordinates are clipped.
void fill_rect(Image& img, int x, int y, int w, int h, std::uint8_t r, std::uint8_t g,
               std::uint8_t b);
void fill_ellipse(Image& img, int x, int y, int w, int h, std::uint8_t r, std::uint8_t g,
                  std::uint8_t b);

// Bilinear resampling with pixel-center alignment:
// src_x = (dst_x + 0.5) * src_w / dst_w - 0.5, clamped to the source.
Image resize_bilinear(const Image& src, int out_width, int out_height);

// Minimal PNG codec (8-bit, non-interlaced). The encoder always writes
// color type 2 (RGB) with filter 0 scanlines and a fixed zlib level, so
// byte output is deterministic. The decoder accepts gray, RGB and RGBA.
std::vector<std::uint8_t> encode_png(const Image& img);
Image decode_png(const std::vector<std::uint8_t>& bytes);

void write_png(const std::string& path, const Image& img);
Image read_png(const std::string& path);

}  // namespace longtail
