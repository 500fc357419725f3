#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lumexcise/image.hpp"

namespace lumexcise {

/// criminisi: C*D priority, fixed window, plain SSD match.
/// p1: weighted-sum priority with R/B confidence, otherwise as criminisi.
/// p2: criminisi priority with variance-adaptive window and distance-weighted match.
/// proposed: p1 and p2 combined.
enum class Mode { criminisi, p1, p2, proposed };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

constexpr bool uses_rb_priority(Mode m) { return m == Mode::p1 || m == Mode::proposed; }
constexpr bool uses_adaptive_match(Mode m) { return m == Mode::p2 || m == Mode::proposed; }

enum class Scoring { ssd, distance_weighted };

constexpr Scoring scoring_for(Mode m) {
  return uses_adaptive_match(m) ? Scoring::distance_weighted : Scoring::ssd;
}

struct EngineConfig {
  Mode mode = Mode::proposed;
  double beta = 0.8;
  int base_patch_side = 9;
  int small_patch_side = 5;
  /// Square search box half-width around the target; unset searches the whole image.
  std::optional<int> search_radius;
  double rb_epsilon = 1.0 / 255.0;

  /// Throws Errc::InvalidArgument on out-of-range fields.
  void validate() const;
};

/// Per-pixel classic confidence, 1 on originally known pixels and 0 on
/// unknown ones; filled pixels inherit the confidence of the patch centre
/// that filled them.
using ConfidenceMap = GrayImage;

ConfidenceMap initial_confidence(const Mask& mask);

/// Everything the fill loop mutates. `gray` mirrors `image` at all times.
struct FillState {
  RgbImage image;
  GrayImage gray;
  Mask mask;
  ConfidenceMap confidence;

  FillState(RgbImage img, Mask m);
};

struct PriorityRecord {
  Pixel pixel;
  double confidence = 0.0;
  double data_term = 0.0;
  double priority = 0.0;
};

struct MatchResult {
  Pixel center;
  double ssd = 0.0;
  double distance = 0.0;
  double score = 0.0;
};

// Priority terms -------------------------------------------------------------

double confidence_classic(const ConfidenceMap& conf, const PatchWindow& w, const Mask& mask);

/// Mean R/B ratio of the known pixels of `w` over the in-bounds window area.
/// B is clamped below at eps*255 in 8-bit units.
double confidence_rb(const RgbImage& img, const PatchWindow& w, const Mask& mask, double eps);

/// |isophote . normal| clamped to [0,1]. The isophote is read at the
/// known pixel of the 3x3 neighbourhood of `p` with the strongest gradient,
/// so that no unknown intensity enters the estimate.
double data_term(const GrayImage& gray, const Mask& mask, Pixel p);

PriorityRecord priority(const FillState& state, Pixel p, const EngineConfig& cfg);

/// argmax of priority over `front`; ties go to the earliest entry.
PriorityRecord select_target(const std::vector<PriorityRecord>& records);

// Window sizing ---------------------------------------------------------------

/// Mean of local_variance over the front windows that contain a known pixel.
/// Throws Errc::EmptyFront if `front` is empty or no window qualifies.
double mean_front_variance(const GrayImage& gray, const Mask& mask, const FillFront& front,
                           int side = 9);

/// base side when mean_s > local_var, small side otherwise; always base side
/// in modes without adaptive matching.
int patch_window_size(double mean_s, double local_var, const EngineConfig& cfg);

// Matching --------------------------------------------------------------------

/// Sum over known in-bounds target cells of the Euclidean RGB distance
/// (channels scaled to [0,1]) to the corresponding candidate cell.
/// Throws Errc::CandidateInvalid if the candidate leaves the image or
/// touches an unknown pixel, Errc::InvalidArgument if the sides differ.
double patch_ssd(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                 const PatchWindow& candidate);

double patch_distance(Pixel p, Pixel q);

/// Exhaustive row-major scan of fully-known in-bounds windows. Minimises
/// the score, then ssd, then distance, then scan position.
/// Throws Errc::NoCandidate when no window qualifies.
MatchResult find_best_match(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                            Scoring scoring, std::optional<int> search_radius = std::nullopt);
MatchResult find_best_match(const RgbImage& img, const Mask& mask, const PatchWindow& target,
                            const EngineConfig& cfg);

// Filling ---------------------------------------------------------------------

/// Copies candidate cells onto the unknown in-bounds cells of `target`,
/// marks them known and hands them the classic confidence of the target
/// centre. Returns the number of filled pixels.
std::size_t fill_patch(FillState& state, const PatchWindow& target, const MatchResult& match);

/// Replaces every pixel of the original fill front by the per-channel mean
/// of its in-bounds side x side neighbourhood, read from a snapshot.
void smooth_seams(RgbImage& img, const Mask& original_mask, int side = 9);

// Driver ----------------------------------------------------------------------

struct IterationLog {
  PriorityRecord target;
  /// Side chosen by the window-size rule, before any NoCandidate retry.
  int requested_side = 0;
  int side = 0;
  /// Only computed in adaptive modes.
  std::optional<double> mean_front_variance;
  std::optional<double> target_variance;
  MatchResult match;
  std::size_t filled = 0;
};

struct InpaintReport {
  std::size_t iterations = 0;
  std::size_t filled_pixels = 0;
  Mode mode = Mode::proposed;
  double beta = 0.0;
  double elapsed_seconds = 0.0;
  std::vector<IterationLog> trace;
};

struct InpaintResult {
  RgbImage image;
  InpaintReport report;
};

/// The fill loop, one iteration per step() so callers can observe it.
class Inpainter {
 public:
  Inpainter(RgbImage image, Mask mask, EngineConfig cfg);

  bool done() const { return state_.mask.unknown_count() == 0; }
  const FillState& state() const { return state_; }
  const EngineConfig& config() const { return cfg_; }
  const Mask& original_mask() const { return original_mask_; }

  std::vector<PriorityRecord> priorities(const FillFront& front) const;

  /// One fill iteration. Throws Errc::NoCandidate if neither side admits a
  /// candidate window.
  IterationLog step();

  /// Runs the remaining iterations, smooths the seams and returns the result.
  InpaintResult finish();

 private:
  std::optional<MatchResult> try_match(const PatchWindow& target) const;

  FillState state_;
  Mask original_mask_;
  EngineConfig cfg_;
  std::size_t initial_unknown_ = 0;
  std::vector<IterationLog> trace_;
};

/// Throws Errc::DimensionMismatch, Errc::AllUnknown or Errc::NoCandidate.
InpaintResult inpaint(const RgbImage& image, const Mask& mask, const EngineConfig& cfg);

}  // namespace lumexcise
