#include "lumexcise/png_io.hpp"

#include <png.h>

#include <cstring>
#include <string>
#include <vector>

namespace lumexcise {

namespace {

struct DecodedPng {
  int width;
  int height;
  std::vector<std::uint8_t> pixels;
};

DecodedPng decode(const std::filesystem::path& path, png_uint_32 format) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str()))
    throw Error(Errc::Io, "cannot read PNG '" + path.string() + "': " + image.message);

  image.format = format;
  DecodedPng out{static_cast<int>(image.width), static_cast<int>(image.height), {}};
  out.pixels.resize(PNG_IMAGE_SIZE(image));
  // Alpha is composited over black when the output format has no alpha channel.
  const png_color black{0, 0, 0};
  if (!png_image_finish_read(&image, &black, out.pixels.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(Errc::Io, "cannot decode PNG '" + path.string() + "': " + msg);
  }
  if (out.width < 1 || out.height < 1)
    throw Error(Errc::Io, "PNG '" + path.string() + "' has no pixels");
  return out;
}

void encode(const std::filesystem::path& path, int width, int height, png_uint_32 format,
            const std::uint8_t* pixels) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = format;
  if (!png_image_write_to_file(&image, path.c_str(), 0, pixels, 0, nullptr))
    throw Error(Errc::Io, "cannot write PNG '" + path.string() + "': " + image.message);
}

}  // namespace

RgbImage read_rgb_png(const std::filesystem::path& path) {
  auto png = decode(path, PNG_FORMAT_RGB);
  return RgbImage(png.width, png.height, std::move(png.pixels));
}

void write_rgb_png(const std::filesystem::path& path, const RgbImage& img) {
  encode(path, img.width(), img.height(), PNG_FORMAT_RGB, img.data().data());
}

Mask read_mask_png(const std::filesystem::path& path) {
  const auto png = decode(path, PNG_FORMAT_GRAY);
  Mask mask(png.width, png.height);
  for (int y = 0; y < png.height; ++y)
    for (int x = 0; x < png.width; ++x)
      mask.set({x, y}, png.pixels[static_cast<std::size_t>(y) * png.width + x] >= 128);
  return mask;
}

void write_mask_png(const std::filesystem::path& path, const Mask& mask) {
  std::vector<std::uint8_t> gray(mask.area());
  auto m = mask.data();
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = m[i] ? 255 : 0;
  encode(path, mask.width(), mask.height(), PNG_FORMAT_GRAY, gray.data());
}

}  // namespace lumexcise
