#include "lumexcise/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace lumexcise::synth {

namespace {

std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); }

// Smoothly interpolated lattice noise in [0,1].
class ValueNoise {
 public:
  ValueNoise(int width, int height, double cell, Rng& rng)
      : cell_(cell), cols_(static_cast<int>(width / cell) + 2), rows_(static_cast<int>(height / cell) + 2) {
    lattice_.resize(static_cast<std::size_t>(cols_) * rows_);
    for (auto& v : lattice_) v = rng.uniform();
  }

  double operator()(double x, double y) const {
    const double gx = x / cell_, gy = y / cell_;
    const int ix = static_cast<int>(gx), iy = static_cast<int>(gy);
    const double fx = smooth(gx - ix), fy = smooth(gy - iy);
    const double top = lerp(at(ix, iy), at(ix + 1, iy), fx);
    const double bottom = lerp(at(ix, iy + 1), at(ix + 1, iy + 1), fx);
    return lerp(top, bottom, fy);
  }

 private:
  static double smooth(double t) { return t * t * (3.0 - 2.0 * t); }
  static double lerp(double a, double b, double t) { return a + (b - a) * t; }
  double at(int x, int y) const { return lattice_[static_cast<std::size_t>(y) * cols_ + x]; }

  double cell_;
  int cols_, rows_;
  std::vector<double> lattice_;
};

}  // namespace

RgbImage vertical_stripes(int width, int height, int period, Rgb a, Rgb b) {
  RgbImage img(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) img.set({x, y}, (x % period) < period / 2 ? a : b);
  return img;
}

RgbImage checkerboard(int width, int height, int period, Rgb a, Rgb b) {
  RgbImage img(width, height);
  const int half = period / 2;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) img.set({x, y}, ((x / half) + (y / half)) % 2 == 0 ? a : b);
  return img;
}

RgbImage tissue(int width, int height, std::uint64_t seed) {
  Rng rng(seed);
  const ValueNoise blotches(width, height, 14.0, rng);
  const ValueNoise grain(width, height, 3.0, rng);

  const double base_r = rng.uniform(160.0, 200.0);
  const double base_g = rng.uniform(60.0, 90.0);
  const double base_b = rng.uniform(45.0, 70.0);

  // Mucosal folds: a few oriented sinusoids.
  struct Fold { double kx, ky, phase, depth; };
  std::vector<Fold> folds(static_cast<std::size_t>(rng.integer(2, 3)));
  for (auto& f : folds) {
    const double angle = rng.uniform(0.0, std::numbers::pi);
    const double freq = 2.0 * std::numbers::pi / rng.uniform(18.0, 40.0);
    f = {freq * std::cos(angle), freq * std::sin(angle), rng.uniform(0.0, 2.0 * std::numbers::pi),
         rng.uniform(0.06, 0.14)};
  }

  // Vessels: wavy darker curves y = c + a*sin(k*x + phi) (or transposed).
  struct Vessel { bool vertical; double c, amp, k, phase, width; };
  std::vector<Vessel> vessels(static_cast<std::size_t>(rng.integer(1, 3)));
  for (auto& v : vessels) {
    v.vertical = rng.uniform() < 0.5;
    v.c = rng.uniform(0.1, 0.9) * (v.vertical ? width : height);
    v.amp = rng.uniform(2.0, 8.0);
    v.k = 2.0 * std::numbers::pi / rng.uniform(25.0, 60.0);
    v.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    v.width = rng.uniform(0.8, 1.8);
  }

  const double cx = rng.uniform(0.3, 0.7) * width, cy = rng.uniform(0.3, 0.7) * height;
  const double radius = std::hypot(width, height) * 0.6;

  // Dark lumen: a soft blob where all channels collapse towards black.
  const double lumen_x = rng.uniform(0.0, 1.0) * width, lumen_y = rng.uniform(0.0, 1.0) * height;
  const double lumen_r = rng.uniform(0.08, 0.2) * width;

  RgbImage img(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const double r = std::hypot(x - cx, y - cy) / radius;
      // Capsule illumination falls off strongly towards the corners.
      double shade = 1.0 - 0.55 * r * r;
      const double ld = std::hypot(x - lumen_x, y - lumen_y) / lumen_r;
      shade *= 1.0 - 0.8 * std::exp(-ld * ld);
      shade *= 0.85 + 0.3 * blotches(x, y);
      for (const auto& f : folds) shade -= f.depth * (0.5 + 0.5 * std::sin(f.kx * x + f.ky * y + f.phase));

      double vessel = 0.0;
      for (const auto& v : vessels) {
        const double along = v.vertical ? y : x;
        const double across = v.vertical ? x : y;
        const double d = std::abs(across - (v.c + v.amp * std::sin(v.k * along + v.phase)));
        vessel = std::max(vessel, std::exp(-(d * d) / (2.0 * v.width * v.width)));
      }

      const double g = grain(x, y) - 0.5;
      const double red = base_r * shade * (1.0 - 0.15 * vessel) + 10.0 * g;
      const double green = base_g * shade * (1.0 - 0.35 * vessel) + 6.0 * g;
      const double blue = base_b * shade * (1.0 - 0.25 * vessel) + 5.0 * g;
      img.set({x, y}, {to_byte(red), to_byte(green), to_byte(blue)});
    }
  return img;
}

Mask blob_mask(int width, int height, double min_coverage, double max_coverage, Rng& rng) {
  const double area = static_cast<double>(width) * height;
  for (;;) {
    const double goal = rng.uniform(min_coverage, max_coverage);
    Mask mask(width, height);
    std::size_t unknown = 0;
    while (static_cast<double>(unknown) < goal * area) {
      const double cx = rng.uniform(0.0, width), cy = rng.uniform(0.0, height);
      const double rx = rng.uniform(1.0, width / 8.0), ry = rng.uniform(1.0, height / 8.0);
      const bool ellipse = rng.uniform() < 0.6;
      for (int y = std::max(0, static_cast<int>(cy - ry)); y <= std::min(height - 1, static_cast<int>(cy + ry)); ++y)
        for (int x = std::max(0, static_cast<int>(cx - rx)); x <= std::min(width - 1, static_cast<int>(cx + rx)); ++x) {
          const double nx = (x - cx) / rx, ny = (y - cy) / ry;
          if (ellipse && nx * nx + ny * ny > 1.0) continue;
          if (!mask.at({x, y})) {
            mask.set({x, y}, true);
            ++unknown;
          }
        }
    }
    const double coverage = static_cast<double>(unknown) / area;
    if (coverage >= min_coverage && coverage <= max_coverage) return mask;
  }
}

HighlightSample highlight_sample(int width, int height, std::uint64_t seed) {
  HighlightSample out{tissue(width, height, seed), {}, Mask(width, height)};
  out.image = out.pristine;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);

  const int spots = rng.integer(3, 7);
  const int margin = 6;
  for (int s = 0; s < spots; ++s) {
    const double cx = rng.uniform(margin, width - margin), cy = rng.uniform(margin, height - margin);
    const double rx = rng.uniform(1.5, 5.5), ry = rng.uniform(1.5, 5.5);
    const double angle = rng.uniform(0.0, std::numbers::pi);
    const double ca = std::cos(angle), sa = std::sin(angle);
    const double peak = rng.uniform(235.0, 255.0);
    const double tint = rng.uniform(0.0, 12.0);
    const int reach = static_cast<int>(std::ceil(std::max(rx, ry) * 2.0));
    for (int y = std::max(0, static_cast<int>(cy) - reach); y <= std::min(height - 1, static_cast<int>(cy) + reach); ++y)
      for (int x = std::max(0, static_cast<int>(cx) - reach); x <= std::min(width - 1, static_cast<int>(cx) + reach); ++x) {
        const double u = ((x - cx) * ca + (y - cy) * sa) / rx;
        const double v = (-(x - cx) * sa + (y - cy) * ca) / ry;
        const double d2 = u * u + v * v;
        // Saturated core with a fast Gaussian fall-off.
        const double alpha = d2 <= 1.0 ? 1.0 : std::exp(-3.0 * (d2 - 1.0));
        if (alpha < 0.02) continue;
        const Rgb c = out.image.at({x, y});
        auto blend = [&](double base, double target) { return to_byte(base + (target - base) * alpha); };
        out.image.set({x, y}, {blend(c.r, peak), blend(c.g, peak - tint), blend(c.b, peak - tint * 0.5)});
        out.mask.set({x, y}, true);
      }
  }
  return out;
}

}  // namespace lumexcise::synth
