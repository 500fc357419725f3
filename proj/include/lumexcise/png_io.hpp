#pragma once

#include <filesystem>

#include "lumexcise/image.hpp"

namespace lumexcise {

// All functions throw Errc::Io on unreadable or unwritable files.

RgbImage read_rgb_png(const std::filesystem::path& path);
void write_rgb_png(const std::filesystem::path& path, const RgbImage& img);

/// Gray values >= 128 mark unknown pixels.
Mask read_mask_png(const std::filesystem::path& path);
/// Unknown pixels are written as 255, known as 0.
void write_mask_png(const std::filesystem::path& path, const Mask& mask);

}  // namespace lumexcise
