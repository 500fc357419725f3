#include <gtest/gtest.h>

#include "lumexcise/engine.hpp"
#include "lumexcise/error.hpp"
#include "lumexcise/synth.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lumexcise;

TEST(PatchSsd, IdenticalPatchesAreZero) {
  synth::Rng rng(2);
  auto img = testing_support::random_image(12, 12, rng);
  const Mask mask(12, 12);
  EXPECT_EQ(patch_ssd(img, mask, PatchWindow({3, 3}, 5), PatchWindow({3, 3}, 5)), 0.0);
}

TEST(PatchSsd, SingleKnownPixelDifferingInRed) {
  RgbImage img(10, 3, Rgb{100, 100, 100});
  img.set({6, 1}, {151, 100, 100});
  auto mask = testing_support::rect_mask(10, 3, 0, 0, 3, 3);
  mask.set({1, 1}, false);
  EXPECT_NEAR(patch_ssd(img, mask, PatchWindow({1, 1}, 3), PatchWindow({6, 1}, 3)), 0.2, 1e-15);
}

TEST(PatchSsd, Preconditions) {
  const RgbImage img(10, 10);
  const auto mask = testing_support::rect_mask(10, 10, 4, 4, 2, 2);
  auto code_of = [&](const PatchWindow& t, const PatchWindow& c) {
    try {
      patch_ssd(img, mask, t, c);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Io;
  };
  EXPECT_EQ(code_of(PatchWindow({4, 4}, 3), PatchWindow({5, 3}, 3)), Errc::CandidateInvalid);
  EXPECT_EQ(code_of(PatchWindow({4, 4}, 3), PatchWindow({0, 5}, 3)), Errc::CandidateInvalid);
  EXPECT_EQ(code_of(PatchWindow({4, 4}, 3), PatchWindow({2, 2}, 5)), Errc::InvalidArgument);
}

TEST(PatchDistance, Examples) {
  EXPECT_DOUBLE_EQ(patch_distance({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(patch_distance({2, 7}, {2, 7}), 0.0);
  EXPECT_DOUBLE_EQ(patch_distance({1, 1}, {1, 5}), 4.0);
}

TEST(FindBestMatch, UniformImageBreaksTiesByDistanceThenScan) {
  const RgbImage img(20, 20, Rgb{40, 80, 120});
  const auto mask = testing_support::rect_mask(20, 20, 8, 8, 3, 3);
  const PatchWindow target({8, 9}, 5);
  const oracle::Raster ras(img, mask);
  for (Scoring s : {Scoring::ssd, Scoring::distance_weighted}) {
    const auto got = find_best_match(img, mask, target, s);
    const auto want = oracle::brute_force_match(ras, 8, 9, 5, s == Scoring::distance_weighted);
    EXPECT_EQ(got.score, 0.0);
    EXPECT_EQ(got.center, (Pixel{want.x, want.y}));
    // The only fully known centre at distance 3.
    EXPECT_EQ(got.center, (Pixel{5, 9}));
  }
}

TEST(FindBestMatch, UniqueExactCopy) {
  synth::Rng rng(7);
  auto img = testing_support::random_image(30, 30, rng);
  const auto mask = testing_support::rect_mask(30, 30, 7, 7, 3, 3);
  for (int dy = -2; dy <= 2; ++dy)
    for (int dx = -2; dx <= 2; ++dx) img.set({20 + dx, 21 + dy}, img.at({8 + dx, 8 + dy}));
  for (Scoring s : {Scoring::ssd, Scoring::distance_weighted}) {
    const auto got = find_best_match(img, mask, PatchWindow({8, 8}, 5), s);
    EXPECT_EQ(got.center, (Pixel{20, 21}));
    EXPECT_EQ(got.ssd, 0.0);
  }
}

TEST(FindBestMatch, TwoTextureImageMatchesBruteForce) {
  const auto left = synth::vertical_stripes(16, 16, 4, {200, 60, 60}, {90, 20, 30});
  const auto right = synth::checkerboard(16, 16, 4, {230, 200, 190}, {40, 40, 40});
  RgbImage img(16, 16);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) img.set({x, y}, x < 8 ? left.at({x, y}) : right.at({x, y}));
  const auto mask = testing_support::rect_mask(16, 16, 6, 7, 4, 2);
  ASSERT_EQ(mask.unknown_count(), 8u);
  const oracle::Raster ras(img, mask);
  for (const Pixel p : {Pixel{6, 7}, Pixel{9, 8}, Pixel{7, 6}})
    for (int side : {3, 5}) {
      const auto got = find_best_match(img, mask, PatchWindow(p, side), Scoring::distance_weighted);
      const auto want = oracle::brute_force_match(ras, p.x, p.y, side, true);
      EXPECT_EQ(got.center, (Pixel{want.x, want.y}));
      EXPECT_DOUBLE_EQ(got.score, want.score);
    }
}

TEST(FindBestMatch, RandomInstancesMatchBruteForce) {
  synth::Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = rng.integer(10, 24), h = rng.integer(10, 24);
    // Few colour levels make exact ties common.
    const auto img = testing_support::random_image(w, h, rng, rng.integer(0, 1) ? 2 : 256);
    const auto mask = testing_support::random_mask(w, h, rng.uniform(0.0, 0.1), rng);
    const Pixel p{rng.integer(0, w - 1), rng.integer(0, h - 1)};
    const int side = rng.integer(0, 1) ? 5 : 9;
    const oracle::Raster ras(img, mask);
    for (Scoring s : {Scoring::ssd, Scoring::distance_weighted}) {
      oracle::Match want;
      try {
        want = oracle::brute_force_match(ras, p.x, p.y, side, s == Scoring::distance_weighted);
      } catch (const std::runtime_error&) {
        EXPECT_THROW(find_best_match(img, mask, PatchWindow(p, side), s), Error);
        continue;
      }
      const auto got = find_best_match(img, mask, PatchWindow(p, side), s);
      EXPECT_EQ(got.center, (Pixel{want.x, want.y})) << "trial " << trial;
      EXPECT_GE(got.ssd, 0.0);
      EXPECT_GE(got.distance, 0.0);
      EXPECT_GE(got.score, 0.0);
      EXPECT_EQ(got.score, s == Scoring::ssd ? got.ssd : got.ssd * got.distance);
    }
  }
}

TEST(FindBestMatch, SearchRadiusLimitsCandidates) {
  synth::Rng rng(13);
  const auto img = testing_support::random_image(40, 40, rng);
  const auto mask = testing_support::rect_mask(40, 40, 18, 18, 3, 3);
  const auto got = find_best_match(img, mask, PatchWindow({19, 19}, 5), Scoring::ssd, 6);
  EXPECT_LE(std::abs(got.center.x - 19), 6);
  EXPECT_LE(std::abs(got.center.y - 19), 6);
}

TEST(FindBestMatch, NoCandidate) {
  const RgbImage img(8, 8);
  const auto mask = testing_support::rect_mask(8, 8, 3, 0, 1, 8);
  try {
    find_best_match(img, mask, PatchWindow({3, 3}, 9), Scoring::ssd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoCandidate);
  }
}

TEST(FindBestMatch, ConfigOverloadFollowsMode) {
  synth::Rng rng(19);
  const auto img = testing_support::random_image(20, 20, rng, 2);
  const auto mask = testing_support::rect_mask(20, 20, 9, 9, 2, 2);
  const PatchWindow t({9, 9}, 5);
  EngineConfig cfg;
  for (Mode m : {Mode::criminisi, Mode::p1, Mode::p2, Mode::proposed}) {
    cfg.mode = m;
    EXPECT_EQ(find_best_match(img, mask, t, cfg).center,
              find_best_match(img, mask, t, scoring_for(m)).center);
  }
}
