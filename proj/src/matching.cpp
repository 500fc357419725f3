#include <array>
#include <cmath>
#include <string>

#include "lumexcise/engine.hpp"

namespace lumexcise {

namespace {

// (d/255)^2 for every 8-bit channel difference d.
struct SquaredChannelTable {
  std::array<double, 511> sq{};
  SquaredChannelTable() {
    for (int d = -255; d <= 255; ++d) {
      const double t = d / 255.0;
      sq[d + 255] = t * t;
    }
  }
};

const SquaredChannelTable& squares() {
  static const SquaredChannelTable table;
  return table;
}

inline double color_distance(const std::uint8_t* a, const std::uint8_t* b) {
  const auto& t = squares().sq;
  return std::sqrt(t[a[0] - b[0] + 255] + t[a[1] - b[1] + 255] + t[a[2] - b[2] + 255]);
}

// Summed-area table of unknown pixels, for O(1) window validity tests.
class UnknownIntegral {
 public:
  explicit UnknownIntegral(const Mask& mask)
      : stride_(mask.width() + 1), sums_(static_cast<std::size_t>(stride_) * (mask.height() + 1), 0) {
    auto m = mask.data();
    for (int y = 0; y < mask.height(); ++y) {
      int row = 0;
      for (int x = 0; x < mask.width(); ++x) {
        row += m[static_cast<std::size_t>(y) * mask.width() + x];
        at(x + 1, y + 1) = at(x + 1, y) + row;
      }
    }
  }

  // Unknown count in the inclusive rectangle [x0,x1] x [y0,y1].
  int count(int x0, int y0, int x1, int y1) const {
    return at(x1 + 1, y1 + 1) - at(x0, y1 + 1) - at(x1 + 1, y0) + at(x0, y0);
  }

 private:
  int& at(int x, int y) { return sums_[static_cast<std::size_t>(y) * stride_ + x]; }
  int at(int x, int y) const { return sums_[static_cast<std::size_t>(y) * stride_ + x]; }

  int stride_;
  std::vector<int> sums_;
};

struct TargetCell {
  int dx;
  int dy;
  std::array<std::uint8_t, 3> rgb;
};

std::vector<TargetCell> known_target_cells(const RgbImage& img, const Mask& mask,
                                           const PatchWindow& target) {
  std::vector<TargetCell> cells;
  cells.reserve(static_cast<std::size_t>(target.side()) * target.side());
  target.for_each_in_bounds(img, [&](Pixel q) {
    if (mask.unknown(q)) return;
    const Rgb c = img.at(q);
    cells.push_back({q.x - target.center().x, q.y - target.center().y, {c.r, c.g, c.b}});
  });
  return cells;
}

bool better(const MatchResult& a, const MatchResult& b) {
  if (a.score != b.score) return a.score < b.score;
  if (a.ssd != b.ssd) return a.ssd < b.ssd;
  return a.distance < b.distance;
}

}  // namespace

double patch_distance(Pixel p, Pixel q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

double patch_ssd(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                 const PatchWindow& candidate) {
  require_same_size(img, mask, "image and mask dimensions differ");
  if (target.side() != candidate.side())
    throw Error(Errc::InvalidArgument, "target and candidate sides differ");
  if (!candidate.fully_inside(img))
    throw Error(Errc::CandidateInvalid, "candidate window crosses the image border");
  bool touches_unknown = false;
  candidate.for_each_in_bounds(img, [&](Pixel q) { touches_unknown |= mask.unknown(q); });
  if (touches_unknown) throw Error(Errc::CandidateInvalid, "candidate window overlaps the unknown region");

  const auto data = img.data();
  const int w = img.width();
  double sum = 0.0;
  for (const auto& cell : known_target_cells(img, mask, target)) {
    const Pixel q{candidate.center().x + cell.dx, candidate.center().y + cell.dy};
    sum += color_distance(cell.rgb.data(), &data[(static_cast<std::size_t>(q.y) * w + q.x) * 3]);
  }
  return sum;
}

MatchResult find_best_match(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                            Scoring scoring, std::optional<int> search_radius) {
  require_same_size(img, mask, "image and mask dimensions differ");
  const int half = target.half();
  const Pixel p = target.center();

  int x0 = half, x1 = img.width() - 1 - half;
  int y0 = half, y1 = img.height() - 1 - half;
  if (search_radius) {
    x0 = std::max(x0, p.x - *search_radius);
    x1 = std::min(x1, p.x + *search_radius);
    y0 = std::max(y0, p.y - *search_radius);
    y1 = std::min(y1, p.y + *search_radius);
  }

  const UnknownIntegral unknown(mask);
  const auto cells = known_target_cells(img, mask, target);
  const auto data = img.data();
  const int w = img.width();

  std::optional<MatchResult> best;
  for (int cy = y0; cy <= y1; ++cy) {
    for (int cx = x0; cx <= x1; ++cx) {
      if (unknown.count(cx - half, cy - half, cx + half, cy + half) != 0) continue;
      const double dist = patch_distance(p, {cx, cy});
      const double weight = scoring == Scoring::ssd ? 1.0 : dist;

      double ssd = 0.0;
      bool pruned = false;
      for (const auto& cell : cells) {
        const std::size_t idx = static_cast<std::size_t>(cy + cell.dy) * w + (cx + cell.dx);
        ssd += color_distance(cell.rgb.data(), &data[idx * 3]);
        // Terms are non-negative, so a partial sum already above the best
        // score can only end above it.
        if (best && ssd * weight > best->score) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;

      const MatchResult cand{{cx, cy}, ssd, dist, scoring == Scoring::ssd ? ssd : ssd * dist};
      if (!best || better(cand, *best)) best = cand;
    }
  }
  if (!best)
    throw Error(Errc::NoCandidate, "no fully known " + std::to_string(target.side()) + "x" +
                                       std::to_string(target.side()) + " window for target (" +
                                       std::to_string(p.x) + "," + std::to_string(p.y) + ")");
  return *best;
}

MatchResult find_best_match(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                            const EngineConfig& cfg) {
  return find_best_match(img, mask, target, scoring_for(cfg.mode), cfg.search_radius);
}

}  // namespace lumexcise
