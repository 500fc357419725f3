#include "lumexcise/metrics.hpp"

#include <cmath>

namespace lumexcise {

RegionStats region_stats(const GrayImage& gray, const Mask& region) {
  require_same_size(gray, region, "image and region dimensions differ");
  const auto values = gray.data();
  const auto flags = region.data();

  // Sums run over deviations from the first region value, which keeps a
  // constant region at exactly zero spread.
  RegionStats out;
  double pivot = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!flags[i]) continue;
    if (out.pixel_count == 0) pivot = values[i];
    sum += values[i] - pivot;
    ++out.pixel_count;
  }
  if (out.pixel_count == 0) throw Error(Errc::EmptyRegion, "region contains no pixel");

  const double n = static_cast<double>(out.pixel_count);
  const double shift = sum / n;
  out.mean = pivot + shift;
  double ss = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!flags[i]) continue;
    const double d = values[i] - pivot - shift;
    ss += d * d;
  }
  out.std = std::sqrt(ss / n);
  if (out.mean > 0.0) out.cov = out.std / out.mean;
  return out;
}

}  // namespace lumexcise
