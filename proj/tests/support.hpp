#pragma once

#include "lumexcise/image.hpp"
#include "lumexcise/synth.hpp"

namespace testing_support {

inline lumexcise::RgbImage random_image(int w, int h, lumexcise::synth::Rng& rng, int levels = 256) {
  lumexcise::RgbImage img(w, h);
  const int step = 256 / levels;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      img.set({x, y}, {static_cast<std::uint8_t>(rng.integer(0, levels - 1) * step),
                       static_cast<std::uint8_t>(rng.integer(0, levels - 1) * step),
                       static_cast<std::uint8_t>(rng.integer(0, levels - 1) * step)});
  return img;
}

// Bernoulli mask; at least one pixel stays known.
inline lumexcise::Mask random_mask(int w, int h, double p, lumexcise::synth::Rng& rng) {
  lumexcise::Mask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m.set({x, y}, rng.uniform() < p);
  if (m.unknown_count() == m.area()) m.set({0, 0}, false);
  return m;
}

inline lumexcise::Mask rect_mask(int w, int h, int x0, int y0, int rw, int rh) {
  lumexcise::Mask m(w, h);
  for (int y = y0; y < y0 + rh; ++y)
    for (int x = x0; x < x0 + rw; ++x)
      if (m.contains({x, y})) m.set({x, y}, true);
  return m;
}

}  // namespace testing_support
