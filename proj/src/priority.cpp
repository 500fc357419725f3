#include <algorithm>
#include <cmath>
#include <string>

#include "lumexcise/engine.hpp"
#include "lumexcise/imaging.hpp"

namespace lumexcise {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::criminisi: return "criminisi";
    case Mode::p1: return "p1";
    case Mode::p2: return "p2";
    case Mode::proposed: return "proposed";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::criminisi, Mode::p1, Mode::p2, Mode::proposed})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

void EngineConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidArgument, msg); };
  if (!(beta >= 0.0 && beta <= 1.0)) fail("beta must lie in [0,1], got " + std::to_string(beta));
  for (int side : {base_patch_side, small_patch_side})
    if (side < 3 || side % 2 == 0) fail("patch sides must be odd and >= 3, got " + std::to_string(side));
  if (small_patch_side >= base_patch_side)
    fail("small patch side must be smaller than the base side");
  if (search_radius && *search_radius < 0) fail("search radius must be non-negative");
  if (!(rb_epsilon > 0.0)) fail("rb epsilon must be positive");
}

ConfidenceMap initial_confidence(const Mask& mask) {
  ConfidenceMap conf(mask.width(), mask.height());
  auto m = mask.data();
  auto c = conf.data();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m[i] ? 0.0 : 1.0;
  return conf;
}

FillState::FillState(RgbImage img, Mask m)
    : image(std::move(img)), mask(std::move(m)) {
  require_same_size(image, mask, "image and mask dimensions differ");
  gray = to_grayscale(image);
  confidence = initial_confidence(mask);
}

double confidence_classic(const ConfidenceMap& conf, const PatchWindow& w, const Mask& mask) {
  double sum = 0.0;
  w.for_each_in_bounds(mask, [&](Pixel q) {
    if (mask.known(q)) sum += conf.at(q);
  });
  const std::size_t area = w.in_bounds_count(mask);
  return area == 0 ? 0.0 : sum / static_cast<double>(area);
}

double confidence_rb(const RgbImage& img, const PatchWindow& w, const Mask& mask, double eps) {
  const double floor_b = eps * 255.0;
  double sum = 0.0;
  w.for_each_in_bounds(mask, [&](Pixel q) {
    if (mask.known(q)) {
      const Rgb c = img.at(q);
      sum += static_cast<double>(c.r) / std::max(static_cast<double>(c.b), floor_b);
    }
  });
  const std::size_t area = w.in_bounds_count(mask);
  return area == 0 ? 0.0 : sum / static_cast<double>(area);
}

double data_term(const GrayImage& gray, const Mask& mask, Pixel p) {
  Vec2 iso = isophote_at(gray, mask, p);
  if (mask.unknown(p)) {
    double best = -1.0;
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        const Pixel q{p.x + dx, p.y + dy};
        if (!mask.contains(q) || mask.unknown(q)) continue;
        const Vec2 candidate = isophote_at(gray, mask, q);
        const double mag = candidate.norm();
        if (mag > best) {
          best = mag;
          iso = candidate;
        }
      }
  }
  constexpr double alpha = 1.0;
  const double d = std::abs(iso.dot(boundary_normal_at(mask, p))) / alpha;
  return std::clamp(d, 0.0, 1.0);
}

PriorityRecord priority(const FillState& state, Pixel p, const EngineConfig& cfg) {
  const PatchWindow w(p, cfg.base_patch_side);
  PriorityRecord rec;
  rec.pixel = p;
  rec.data_term = data_term(state.gray, state.mask, p);
  if (uses_rb_priority(cfg.mode)) {
    rec.confidence = confidence_rb(state.image, w, state.mask, cfg.rb_epsilon);
    rec.priority = cfg.beta * rec.data_term + (1.0 - cfg.beta) * rec.confidence;
  } else {
    rec.confidence = confidence_classic(state.confidence, w, state.mask);
    rec.priority = rec.confidence * rec.data_term;
  }
  return rec;
}

PriorityRecord select_target(const std::vector<PriorityRecord>& records) {
  if (records.empty()) throw Error(Errc::EmptyFront, "no fill-front pixel to select");
  const PriorityRecord* best = &records.front();
  for (const auto& r : records)
    if (r.priority > best->priority) best = &r;
  return *best;
}

double mean_front_variance(const GrayImage& gray, const Mask& mask, const FillFront& front,
                           int side) {
  if (front.empty()) throw Error(Errc::EmptyFront, "fill front is empty");
  double sum = 0.0;
  std::size_t n = 0;
  for (const Pixel p : front) {
    try {
      sum += local_variance(gray, mask, PatchWindow(p, side));
      ++n;
    } catch (const Error& e) {
      if (e.code() != Errc::AllUnknownWindow) throw;
    }
  }
  if (n == 0) throw Error(Errc::EmptyFront, "no front window contains a known pixel");
  return sum / static_cast<double>(n);
}

int patch_window_size(double mean_s, double local_var, const EngineConfig& cfg) {
  if (!uses_adaptive_match(cfg.mode)) return cfg.base_patch_side;
  return mean_s > local_var ? cfg.base_patch_side : cfg.small_patch_side;
}

}  // namespace lumexcise
