#include "lumexcise/image.hpp"

#include <cmath>
#include <string>

namespace lumexcise {

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

Extent::Extent(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw Error(Errc::InvalidArgument,
                "raster must be at least 1x1, got " + std::to_string(width) + "x" +
                    std::to_string(height));
}

RgbImage::RgbImage(int width, int height, Rgb fill) : Extent(width, height) {
  data_.resize(area() * 3);
  for (std::size_t i = 0; i < area(); ++i) {
    data_[3 * i] = fill.r;
    data_[3 * i + 1] = fill.g;
    data_[3 * i + 2] = fill.b;
  }
}

RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> interleaved)
    : Extent(width, height), data_(std::move(interleaved)) {
  if (data_.size() != area() * 3)
    throw Error(Errc::InvalidArgument, "RGB buffer holds " + std::to_string(data_.size()) +
                                           " bytes, expected " + std::to_string(area() * 3));
}

GrayImage::GrayImage(int width, int height, double fill)
    : Extent(width, height), data_(area(), fill) {}

Mask::Mask(int width, int height, bool fill) : Extent(width, height), data_(area(), fill ? 1 : 0) {}

std::size_t Mask::unknown_count() const {
  std::size_t n = 0;
  for (auto v : data_) n += v;
  return n;
}

PatchWindow::PatchWindow(Pixel center, int side) : center_(center), side_(side) {
  if (side < 1 || side % 2 == 0)
    throw Error(Errc::InvalidArgument, "patch side must be odd and positive, got " +
                                           std::to_string(side));
}

std::size_t PatchWindow::in_bounds_count(const Extent& extent) const {
  const int x0 = std::max(center_.x - half(), 0);
  const int x1 = std::min(center_.x + half(), extent.width() - 1);
  const int y0 = std::max(center_.y - half(), 0);
  const int y1 = std::min(center_.y + half(), extent.height() - 1);
  if (x1 < x0 || y1 < y0) return 0;
  return static_cast<std::size_t>(x1 - x0 + 1) * static_cast<std::size_t>(y1 - y0 + 1);
}

bool PatchWindow::fully_inside(const Extent& extent) const {
  return center_.x - half() >= 0 && center_.y - half() >= 0 &&
         center_.x + half() < extent.width() && center_.y + half() < extent.height();
}

void require_same_size(const Extent& a, const Extent& b, const char* what) {
  if (!a.same_size(b))
    throw Error(Errc::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
}

}  // namespace lumexcise
