#include "lumexcise/maskgen.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "lumexcise/imaging.hpp"

namespace lumexcise {

void DetectorConfig::validate() const {
  if (!(brightness_min >= 0.0 && brightness_min <= 1.0))
    throw Error(Errc::InvalidArgument, "brightness_min must lie in [0,1]");
  if (!(rb_closeness_max >= 0.0)) throw Error(Errc::InvalidArgument, "rb_closeness_max must be >= 0");
  if (dilation_radius < 0) throw Error(Errc::InvalidArgument, "dilation_radius must be >= 0");
}

Mask detect_highlights(const RgbImage& img, const DetectorConfig& cfg) {
  cfg.validate();
  Mask raw(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      const Rgb c = img.at({x, y});
      const double closeness = std::abs(static_cast<int>(c.r) - static_cast<int>(c.b)) / 255.0;
      raw.set({x, y}, luma(c) >= cfg.brightness_min && closeness <= cfg.rb_closeness_max);
    }
  return dilate_mask(raw, cfg.dilation_radius);
}

Mask dilate_mask(const Mask& mask, int radius) {
  if (radius < 0) throw Error(Errc::InvalidArgument, "dilation radius must be >= 0, got " + std::to_string(radius));
  if (radius == 0) return mask;
  const int w = mask.width(), h = mask.height();

  // Square structuring element: horizontal pass, then vertical pass.
  Mask rows(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      bool hit = false;
      for (int k = std::max(0, x - radius); k <= std::min(w - 1, x + radius) && !hit; ++k)
        hit = mask.at({k, y});
      rows.set({x, y}, hit);
    }
  Mask out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      bool hit = false;
      for (int k = std::max(0, y - radius); k <= std::min(h - 1, y + radius) && !hit; ++k)
        hit = rows.at({x, k});
      out.set({x, y}, hit);
    }
  return out;
}

}  // namespace lumexcise
