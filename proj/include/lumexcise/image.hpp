#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lumexcise/error.hpp"

namespace lumexcise {

struct Pixel {
  int x = 0;
  int y = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const;
};

/// Common width/height bookkeeping for the row-major rasters below.
class Extent {
 public:
  Extent() = default;
  Extent(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t area() const { return static_cast<std::size_t>(width_) * height_; }

  bool contains(Pixel p) const { return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_; }
  std::size_t index(Pixel p) const { return static_cast<std::size_t>(p.y) * width_ + p.x; }
  Pixel pixel_at(std::size_t index) const {
    return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
  }

  bool same_size(const Extent& o) const { return width_ == o.width_ && height_ == o.height_; }

 protected:
  int width_ = 0;
  int height_ = 0;
};

/// 8-bit RGB raster, interleaved row-major.
class RgbImage : public Extent {
 public:
  RgbImage() = default;
  RgbImage(int width, int height, Rgb fill = {});
  RgbImage(int width, int height, std::vector<std::uint8_t> interleaved);

  Rgb at(Pixel p) const {
    const std::size_t i = index(p) * 3;
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(Pixel p, Rgb c) {
    const std::size_t i = index(p) * 3;
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
  }

  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

  friend bool operator==(const RgbImage& a, const RgbImage& b) {
    return a.same_size(b) && a.data_ == b.data_;
  }

 private:
  std::vector<std::uint8_t> data_;
};

/// Intensities in [0,1].
class GrayImage : public Extent {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);

  double at(Pixel p) const { return data_[index(p)]; }
  void set(Pixel p, double v) { data_[index(p)] = v; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

 private:
  std::vector<double> data_;
};

/// true marks an unknown (to be filled) pixel.
class Mask : public Extent {
 public:
  Mask() = default;
  Mask(int width, int height, bool fill = false);

  bool at(Pixel p) const { return data_[index(p)] != 0; }
  void set(Pixel p, bool unknown) { data_[index(p)] = unknown ? 1 : 0; }

  bool unknown(Pixel p) const { return at(p); }
  bool known(Pixel p) const { return !at(p); }

  std::size_t unknown_count() const;
  bool all_known() const { return unknown_count() == 0; }

  std::span<const std::uint8_t> data() const { return data_; }

  friend bool operator==(const Mask& a, const Mask& b) {
    return a.same_size(b) && a.data_ == b.data_;
  }

 private:
  std::vector<std::uint8_t> data_;
};

/// Square odd-sided window; cells outside the image are absent, not zero.
class PatchWindow {
 public:
  PatchWindow(Pixel center, int side);

  Pixel center() const { return center_; }
  int side() const { return side_; }
  int half() const { return side_ / 2; }

  /// Number of window cells lying inside `extent`.
  std::size_t in_bounds_count(const Extent& extent) const;
  bool fully_inside(const Extent& extent) const;

  /// Calls fn(Pixel) for every in-bounds cell in row-major order.
  template <typename Fn>
  void for_each_in_bounds(const Extent& extent, Fn&& fn) const {
    const int y0 = std::max(center_.y - half(), 0);
    const int y1 = std::min(center_.y + half(), extent.height() - 1);
    const int x0 = std::max(center_.x - half(), 0);
    const int x1 = std::min(center_.x + half(), extent.width() - 1);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) fn(Pixel{x, y});
  }

 private:
  Pixel center_;
  int side_;
};

/// Unknown pixels with at least one known 4-neighbour, row-major order.
using FillFront = std::vector<Pixel>;

void require_same_size(const Extent& a, const Extent& b, const char* what);

}  // namespace lumexcise
