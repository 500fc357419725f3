#pragma once

#include <cstdint>
#include <random>

#include "lumexcise/image.hpp"

namespace lumexcise::synth {

/// Platform-independent uniform draws on top of mt19937_64 (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

RgbImage vertical_stripes(int width, int height, int period, Rgb a, Rgb b);
RgbImage checkerboard(int width, int height, int period, Rgb a, Rgb b);

/// Reddish mucosa-like texture: smooth shading, folds, vessels and grain.
RgbImage tissue(int width, int height, std::uint64_t seed);

/// Union of random ellipses and rectangles whose coverage lies in
/// [min_coverage, max_coverage].
Mask blob_mask(int width, int height, double min_coverage, double max_coverage, Rng& rng);

struct HighlightSample {
  RgbImage pristine;
  RgbImage image;
  Mask mask;
};

/// Tissue with several near-white specular spots painted on it and the
/// annotation mask that covers them.
HighlightSample highlight_sample(int width, int height, std::uint64_t seed);

}  // namespace lumexcise::synth
