#pragma once

#include "lumexcise/image.hpp"

namespace lumexcise {

/// Thresholds for the heuristic highlight detector. Specular spots are
/// bright and have nearly equal R and B channels, unlike surrounding
/// tissue. This is a convenience for unannotated images only.
struct DetectorConfig {
  double brightness_min = 0.85;
  /// Upper bound on |R - B| / 255.
  double rb_closeness_max = 0.15;
  int dilation_radius = 2;

  void validate() const;
};

Mask detect_highlights(const RgbImage& img, const DetectorConfig& cfg = {});

/// Dilation by a (2r+1)x(2r+1) square, clipped at the border.
Mask dilate_mask(const Mask& mask, int radius);

}  // namespace lumexcise
