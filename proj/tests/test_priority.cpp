#include <gtest/gtest.h>

#include "lumexcise/engine.hpp"
#include "lumexcise/error.hpp"
#include "lumexcise/imaging.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lumexcise;

namespace {

// 5x3 image, columns 3..4 unknown. Known rows: white, R/B = 4, black.
// At front pixel (3,1) the strongest known neighbour is (2,1) with
// isophote (0.5, 0), and the normal is (1, 0).
FillState aligned_fixture() {
  RgbImage img(5, 3, Rgb{90, 90, 90});
  for (int x = 0; x < 3; ++x) {
    img.set({x, 0}, {255, 255, 255});
    img.set({x, 1}, {200, 120, 50});
    img.set({x, 2}, {0, 0, 0});
  }
  return FillState(img, testing_support::rect_mask(5, 3, 3, 0, 2, 3));
}

}  // namespace

TEST(ConfidenceClassic, Examples) {
  const ConfidenceMap ones(9, 9, 1.0);
  EXPECT_DOUBLE_EQ(confidence_classic(ones, PatchWindow({4, 4}, 9), Mask(9, 9)), 1.0);
  EXPECT_DOUBLE_EQ(confidence_classic(ones, PatchWindow({4, 4}, 9), Mask(9, 9, true)), 0.0);
  // 4x4 image, left half unknown, 9x9 window covering all 16 cells.
  const auto half = testing_support::rect_mask(4, 4, 0, 0, 2, 4);
  EXPECT_DOUBLE_EQ(confidence_classic(ConfidenceMap(4, 4, 1.0), PatchWindow({2, 2}, 9), half), 0.5);
}

TEST(ConfidenceRb, Examples) {
  const RgbImage img(9, 9, Rgb{150, 10, 50});
  EXPECT_DOUBLE_EQ(confidence_rb(img, PatchWindow({4, 4}, 9), Mask(9, 9), 1.0 / 255), 3.0);
  EXPECT_DOUBLE_EQ(confidence_rb(img, PatchWindow({4, 4}, 9), Mask(9, 9, true), 1.0 / 255), 0.0);
  // One known pixel with B = 0 in a 3x3 window: contributes R / 1.
  RgbImage zero_b(3, 3, Rgb{10, 10, 10});
  zero_b.set({1, 1}, {120, 0, 0});
  Mask m(3, 3, true);
  m.set({1, 1}, false);
  EXPECT_DOUBLE_EQ(confidence_rb(zero_b, PatchWindow({1, 1}, 3), m, 1.0 / 255), 120.0 / 9);
}

TEST(DataTerm, AlignedIsophote) {
  const auto st = aligned_fixture();
  EXPECT_DOUBLE_EQ(data_term(st.gray, st.mask, {3, 1}), 0.5);
}

TEST(DataTerm, OrthogonalIsZero) {
  GrayImage g(6, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 6; ++x) g.set({x, y}, 0.1 * x);
  const auto m = testing_support::rect_mask(6, 4, 3, 0, 3, 4);
  EXPECT_EQ(data_term(g, m, {3, 2}), 0.0);
}

TEST(DataTerm, FlatIsZero) {
  const GrayImage g(6, 6, 0.3);
  const auto m = testing_support::rect_mask(6, 6, 2, 2, 2, 2);
  for (const Pixel p : extract_fill_front(m)) EXPECT_EQ(data_term(g, m, p), 0.0);
}

TEST(DataTerm, BoundedAndMatchesReference) {
  synth::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = rng.integer(4, 20), h = rng.integer(4, 20);
    const auto img = testing_support::random_image(w, h, rng);
    const auto mask = testing_support::random_mask(w, h, rng.uniform(0.1, 0.6), rng);
    const auto gray = to_grayscale(img);
    const oracle::Raster ras(img, mask);
    for (const Pixel p : extract_fill_front(mask)) {
      const double d = data_term(gray, mask, p);
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, 1.0);
      EXPECT_DOUBLE_EQ(d, oracle::data_term(ras, p.x, p.y));
      EXPECT_DOUBLE_EQ(confidence_rb(img, PatchWindow(p, 9), mask, 1.0 / 255),
                       oracle::confidence_rb(ras, p.x, p.y, 9, 1.0 / 255));
    }
  }
}

TEST(Priority, WeightedSumExample) {
  const auto st = aligned_fixture();
  EngineConfig cfg;
  cfg.mode = Mode::proposed;
  cfg.beta = 0.8;
  const auto rec = priority(st, {3, 1}, cfg);
  EXPECT_DOUBLE_EQ(rec.confidence, 1.0);
  EXPECT_DOUBLE_EQ(rec.data_term, 0.5);
  EXPECT_NEAR(rec.priority, 0.6, 1e-15);
}

TEST(Priority, WeightCollapse) {
  synth::Rng rng(43);
  const auto img = testing_support::random_image(16, 16, rng);
  const FillState st(img, testing_support::rect_mask(16, 16, 5, 5, 6, 4));
  EngineConfig cfg;
  for (const Pixel p : extract_fill_front(st.mask)) {
    cfg.beta = 0.0;
    auto rec = priority(st, p, cfg);
    EXPECT_EQ(rec.priority, rec.confidence);
    cfg.beta = 1.0;
    rec = priority(st, p, cfg);
    EXPECT_EQ(rec.priority, rec.data_term);
  }
}

TEST(Priority, ClassicIsProduct) {
  synth::Rng rng(47);
  const auto img = testing_support::random_image(16, 16, rng);
  const FillState st(img, testing_support::rect_mask(16, 16, 4, 6, 5, 5));
  EngineConfig cfg;
  for (Mode m : {Mode::criminisi, Mode::p2}) {
    cfg.mode = m;
    for (const Pixel p : extract_fill_front(st.mask)) {
      const auto rec = priority(st, p, cfg);
      EXPECT_EQ(rec.priority, rec.confidence * rec.data_term);
      EXPECT_EQ(rec.confidence, confidence_classic(st.confidence, PatchWindow(p, 9), st.mask));
    }
  }
}

TEST(SelectTarget, TiesGoToFirst) {
  std::vector<PriorityRecord> recs(3);
  recs[0].pixel = {0, 0};
  recs[1].pixel = {1, 0};
  recs[2].pixel = {2, 0};
  recs[0].priority = 0.2;
  recs[1].priority = 0.5;
  recs[2].priority = 0.5;
  EXPECT_EQ(select_target(recs).pixel, (Pixel{1, 0}));
  EXPECT_THROW(select_target({}), Error);
}

TEST(MeanFrontVariance, Examples) {
  const GrayImage flat(10, 10, 0.4);
  const auto m = testing_support::rect_mask(10, 10, 3, 3, 3, 3);
  EXPECT_EQ(mean_front_variance(flat, m, extract_fill_front(m)), 0.0);

  synth::Rng rng(53);
  const auto gray = to_grayscale(testing_support::random_image(30, 12, rng));
  Mask two(30, 12);
  two.set({4, 5}, true);
  two.set({24, 6}, true);
  const FillFront front = extract_fill_front(two);
  ASSERT_EQ(front.size(), 2u);
  const double a = local_variance(gray, two, PatchWindow(front[0], 9));
  const double b = local_variance(gray, two, PatchWindow(front[1], 9));
  EXPECT_DOUBLE_EQ(mean_front_variance(gray, two, front), (a + b) / 2);

  try {
    mean_front_variance(flat, m, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyFront);
  }
}

TEST(WindowSize, Predicate) {
  EngineConfig cfg;
  cfg.mode = Mode::proposed;
  EXPECT_EQ(patch_window_size(0.02, 0.01, cfg), 9);
  EXPECT_EQ(patch_window_size(0.02, 0.03, cfg), 5);
  EXPECT_EQ(patch_window_size(0.02, 0.02, cfg), 5);
  cfg.mode = Mode::criminisi;
  EXPECT_EQ(patch_window_size(0.02, 0.03, cfg), 9);
  cfg.mode = Mode::p1;
  EXPECT_EQ(patch_window_size(0.02, 0.03, cfg), 9);
}

TEST(EngineConfigTest, Validation) {
  EngineConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  for (double beta : {-0.1, 1.1}) {
    EngineConfig c;
    c.beta = beta;
    EXPECT_THROW(c.validate(), Error);
  }
  EngineConfig even;
  even.base_patch_side = 8;
  EXPECT_THROW(even.validate(), Error);
  EngineConfig inverted;
  inverted.small_patch_side = 11;
  EXPECT_THROW(inverted.validate(), Error);
  EngineConfig radius;
  radius.search_radius = -1;
  EXPECT_THROW(radius.validate(), Error);
  EngineConfig eps;
  eps.rb_epsilon = 0.0;
  EXPECT_THROW(eps.validate(), Error);
}

TEST(ModeNames, RoundTrip) {
  for (Mode m : {Mode::criminisi, Mode::p1, Mode::p2, Mode::proposed})
    EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_FALSE(parse_mode("deepgin"));
}
