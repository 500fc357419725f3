#pragma once

#include <cstddef>
#include <optional>

#include "lumexcise/image.hpp"

namespace lumexcise {

/// Population statistics of grayscale intensities inside a region.
struct RegionStats {
  double std = 0.0;
  double mean = 0.0;
  /// std / mean; empty when the region mean is zero.
  std::optional<double> cov;
  std::size_t pixel_count = 0;

  bool zero_mean() const { return !cov.has_value(); }
};

/// Throws Errc::EmptyRegion if `region` has no true pixel.
RegionStats region_stats(const GrayImage& gray, const Mask& region);

}  // namespace lumexcise
