#include <chrono>
#include <string>

#include "lumexcise/engine.hpp"
#include "lumexcise/imaging.hpp"

namespace lumexcise {

std::size_t fill_patch(FillState& state, const PatchWindow& target, const MatchResult& match) {
  const double center_conf = confidence_classic(state.confidence, target, state.mask);
  std::size_t filled = 0;
  target.for_each_in_bounds(state.mask, [&](Pixel q) {
    if (state.mask.known(q)) return;
    const Pixel src{match.center.x + (q.x - target.center().x),
                    match.center.y + (q.y - target.center().y)};
    const Rgb c = state.image.at(src);
    state.image.set(q, c);
    state.gray.set(q, luma(c));
    state.mask.set(q, false);
    state.confidence.set(q, center_conf);
    ++filled;
  });
  return filled;
}

void smooth_seams(RgbImage& img, const Mask& original_mask, int side) {
  require_same_size(img, original_mask, "image and mask dimensions differ");
  const FillFront front = extract_fill_front(original_mask);
  if (front.empty()) return;
  const RgbImage snapshot = img;
  for (const Pixel p : front) {
    const PatchWindow w(p, side);
    unsigned sum_r = 0, sum_g = 0, sum_b = 0;
    w.for_each_in_bounds(snapshot, [&](Pixel q) {
      const Rgb c = snapshot.at(q);
      sum_r += c.r;
      sum_g += c.g;
      sum_b += c.b;
    });
    const auto n = static_cast<unsigned>(w.in_bounds_count(snapshot));
    // Round half up.
    img.set(p, {static_cast<std::uint8_t>((sum_r + n / 2) / n),
                static_cast<std::uint8_t>((sum_g + n / 2) / n),
                static_cast<std::uint8_t>((sum_b + n / 2) / n)});
  }
}

Inpainter::Inpainter(RgbImage image, Mask mask, EngineConfig cfg)
    : state_(std::move(image), mask), original_mask_(std::move(mask)), cfg_(cfg) {
  cfg_.validate();
  initial_unknown_ = original_mask_.unknown_count();
  if (initial_unknown_ == original_mask_.area())
    throw Error(Errc::AllUnknown, "mask marks every pixel unknown; nothing to copy from");
}

std::vector<PriorityRecord> Inpainter::priorities(const FillFront& front) const {
  std::vector<PriorityRecord> out;
  out.reserve(front.size());
  for (const Pixel p : front) out.push_back(priority(state_, p, cfg_));
  return out;
}

std::optional<MatchResult> Inpainter::try_match(const PatchWindow& target) const {
  try {
    return find_best_match(state_.image, state_.mask, target, cfg_);
  } catch (const Error& e) {
    if (e.code() != Errc::NoCandidate) throw;
    return std::nullopt;
  }
}

IterationLog Inpainter::step() {
  const FillFront front = extract_fill_front(state_.mask);
  if (front.empty()) throw Error(Errc::EmptyFront, "step() called on a completed fill");

  IterationLog log;
  log.target = select_target(priorities(front));
  const Pixel p = log.target.pixel;

  log.requested_side = cfg_.base_patch_side;
  if (uses_adaptive_match(cfg_.mode)) {
    const double mean_s = mean_front_variance(state_.gray, state_.mask, front, cfg_.base_patch_side);
    const double var_p = local_variance(state_.gray, state_.mask, PatchWindow(p, cfg_.base_patch_side));
    log.mean_front_variance = mean_s;
    log.target_variance = var_p;
    log.requested_side = patch_window_size(mean_s, var_p, cfg_);
  }

  log.side = log.requested_side;
  auto match = try_match(PatchWindow(p, log.side));
  if (!match && log.side > cfg_.small_patch_side) {
    log.side = cfg_.small_patch_side;
    match = try_match(PatchWindow(p, log.side));
  }
  if (!match)
    throw Error(Errc::NoCandidate,
                "no fully known window of side " + std::to_string(log.requested_side) + " or " +
                    std::to_string(cfg_.small_patch_side) + " for front pixel (" +
                    std::to_string(p.x) + "," + std::to_string(p.y) + "); " +
                    std::to_string(state_.mask.area() - state_.mask.unknown_count()) +
                    " known pixels in a " + std::to_string(state_.mask.width()) + "x" +
                    std::to_string(state_.mask.height()) + " image");
  log.match = *match;
  log.filled = fill_patch(state_, PatchWindow(p, log.side), log.match);
  trace_.push_back(log);
  return log;
}

InpaintResult Inpainter::finish() {
  while (!done()) step();
  InpaintResult result{state_.image, {}};
  smooth_seams(result.image, original_mask_, cfg_.base_patch_side);
  result.report.iterations = trace_.size();
  for (const auto& it : trace_) result.report.filled_pixels += it.filled;
  result.report.mode = cfg_.mode;
  result.report.beta = cfg_.beta;
  result.report.trace = trace_;
  return result;
}

InpaintResult inpaint(const RgbImage& image, const Mask& mask, const EngineConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  require_same_size(image, mask, "image and mask dimensions differ");
  Inpainter engine(image, mask, cfg);
  InpaintResult result = engine.finish();
  result.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace lumexcise
