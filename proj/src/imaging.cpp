#include "lumexcise/imaging.hpp"

#include <algorithm>
#include <optional>

namespace lumexcise {

double luma(Rgb c) {
  const double v = (0.299 * c.r + 0.587 * c.g + 0.114 * c.b) / 255.0;
  return std::clamp(v, 0.0, 1.0);
}

GrayImage to_grayscale(const RgbImage& img) {
  GrayImage gray(img.width(), img.height());
  auto src = img.data();
  auto dst = gray.data();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = luma({src[3 * i], src[3 * i + 1], src[3 * i + 2]});
  return gray;
}

namespace {

double sample_or_center(const GrayImage& gray, const Mask& mask, Pixel q, double center) {
  if (!gray.contains(q) || mask.unknown(q)) return center;
  return gray.at(q);
}

double mask_sample(const Mask& mask, Pixel q, double center) {
  if (!mask.contains(q)) return center;
  return mask.unknown(q) ? 1.0 : 0.0;
}

}  // namespace

Vec2 gradient_at(const GrayImage& gray, const Mask& mask, Pixel p) {
  const double c = gray.at(p);
  const double right = sample_or_center(gray, mask, {p.x + 1, p.y}, c);
  const double left = sample_or_center(gray, mask, {p.x - 1, p.y}, c);
  const double down = sample_or_center(gray, mask, {p.x, p.y + 1}, c);
  const double up = sample_or_center(gray, mask, {p.x, p.y - 1}, c);
  return {(right - left) / 2.0, (down - up) / 2.0};
}

Vec2 isophote_at(const GrayImage& gray, const Mask& mask, Pixel p) {
  const Vec2 g = gradient_at(gray, mask, p);
  return {-g.y, g.x};
}

Vec2 boundary_normal_at(const Mask& mask, Pixel p) {
  const double c = mask.unknown(p) ? 1.0 : 0.0;
  const Vec2 raw{(mask_sample(mask, {p.x + 1, p.y}, c) - mask_sample(mask, {p.x - 1, p.y}, c)) / 2.0,
                 (mask_sample(mask, {p.x, p.y + 1}, c) - mask_sample(mask, {p.x, p.y - 1}, c)) / 2.0};
  const double n = raw.norm();
  if (n == 0.0) return {0.0, 0.0};
  return {raw.x / n, raw.y / n};
}

double local_variance(const GrayImage& gray, const Mask& mask, const PatchWindow& w) {
  // Deviations are taken from the first known sample, so a constant window
  // gives exactly zero.
  std::optional<double> pivot;
  double sum = 0.0;
  std::size_t n = 0;
  w.for_each_in_bounds(gray, [&](Pixel q) {
    if (mask.known(q)) {
      if (!pivot) pivot = gray.at(q);
      sum += gray.at(q) - *pivot;
      ++n;
    }
  });
  if (n == 0)
    throw Error(Errc::AllUnknownWindow, "no known pixel in window at (" +
                                            std::to_string(w.center().x) + "," +
                                            std::to_string(w.center().y) + ")");
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  w.for_each_in_bounds(gray, [&](Pixel q) {
    if (mask.known(q)) {
      const double d = gray.at(q) - *pivot - mean;
      ss += d * d;
    }
  });
  return ss / static_cast<double>(n);
}

bool on_fill_front(const Mask& mask, Pixel p) {
  if (!mask.unknown(p)) return false;
  constexpr Pixel offsets[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Pixel d : offsets) {
    const Pixel q{p.x + d.x, p.y + d.y};
    if (mask.contains(q) && mask.known(q)) return true;
  }
  return false;
}

FillFront extract_fill_front(const Mask& mask) {
  FillFront front;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x)
      if (on_fill_front(mask, {x, y})) front.push_back({x, y});
  return front;
}

}  // namespace lumexcise
