// Writes the synthetic highlight corpus: <name>.png, <name>_mask.png and
// <name>_pristine.png for each sample.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lumexcise/png_io.hpp"
#include "lumexcise/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic highlight corpus"};
  std::string out_dir;
  int count = 20;
  int size = 96;
  app.add_option("out", out_dir)->required();
  app.add_option("--count", count)->capture_default_str();
  app.add_option("--size", size)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  fs::create_directories(fs::path(out_dir) / "pristine");
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "wce_%02d", i);
    const auto sample = lumexcise::synth::highlight_sample(size, size, 1000 + i);
    lumexcise::write_rgb_png(fs::path(out_dir) / (std::string(name) + ".png"), sample.image);
    lumexcise::write_mask_png(fs::path(out_dir) / (std::string(name) + "_mask.png"), sample.mask);
    lumexcise::write_rgb_png(fs::path(out_dir) / "pristine" / (std::string(name) + ".png"), sample.pristine);
  }
  std::cout << "wrote " << count << " samples to " << out_dir << '\n';
  return 0;
}
