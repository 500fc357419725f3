#pragma once

#include "lumexcise/image.hpp"

namespace lumexcise {

/// ITU-R 601 luma, normalized to [0,1].
double luma(Rgb c);
GrayImage to_grayscale(const RgbImage& img);

/// Central differences. A sample that falls outside the image or on an
/// unknown pixel is replaced by the value at `p`, which degrades the
/// estimate to one-sided (or zero) along that axis.
Vec2 gradient_at(const GrayImage& gray, const Mask& mask, Pixel p);

/// Gradient rotated by +90 degrees: (-gy, gx).
Vec2 isophote_at(const GrayImage& gray, const Mask& mask, Pixel p);

/// Unit normal of the fill front from central differences of the mask taken
/// as a 0/1 field. Out-of-bounds samples take the value at `p`. Returns
/// (0,0) when the differences cancel.
Vec2 boundary_normal_at(const Mask& mask, Pixel p);

/// Population variance of the known, in-bounds intensities in `w`.
/// Throws Errc::AllUnknownWindow when no such pixel exists.
double local_variance(const GrayImage& gray, const Mask& mask, const PatchWindow& w);

bool on_fill_front(const Mask& mask, Pixel p);
FillFront extract_fill_front(const Mask& mask);

}  // namespace lumexcise
