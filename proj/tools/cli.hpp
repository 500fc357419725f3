#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "lumexcise/engine.hpp"
#include "lumexcise/error.hpp"
#include "lumexcise/metrics.hpp"

namespace lumexcise::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kFillFailed = 3,
  kEmptyRegion = 4,
  kBatchFailures = 5,
};

int exit_code_for(Errc code);

/// One (image, mode, beta) run. Metric fields are empty when the region is
/// empty or, for cov, when its mean is zero.
struct RunRecord {
  std::string input_path;
  std::string mask_path;
  std::string mode;
  std::optional<double> beta;
  std::optional<double> std;
  std::optional<double> mean;
  std::optional<double> cov;
  std::optional<std::size_t> iterations;
  std::optional<double> elapsed_seconds;
};

inline constexpr const char* kCsvHeader = "input,mode,beta,std,mean,cov,iterations,elapsed_seconds";

std::string csv_row(const RunRecord& r);
std::string to_json(const RunRecord& r);

/// Shortest round-trip decimal form.
std::string format_double(double v);

void fill_metrics(RunRecord& r, const RegionStats& s);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lumexcise::cli
