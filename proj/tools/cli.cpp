#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lumexcise/imaging.hpp"
#include "lumexcise/maskgen.hpp"
#include "lumexcise/png_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lumexcise::cli {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return kUsage;
    case Errc::DimensionMismatch:
    case Errc::Io: return kIoError;
    case Errc::NoCandidate:
    case Errc::AllUnknown:
    case Errc::AllUnknownWindow:
    case Errc::EmptyFront:
    case Errc::CandidateInvalid: return kFillFailed;
    case Errc::EmptyRegion: return kEmptyRegion;
  }
  return kUsage;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string opt_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

template <typename T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string csv_row(const RunRecord& r) {
  std::ostringstream os;
  os << csv_field(r.input_path) << ',' << r.mode << ',' << opt_field(r.beta) << ','
     << opt_field(r.std) << ',' << opt_field(r.mean) << ',' << opt_field(r.cov) << ','
     << (r.iterations ? std::to_string(*r.iterations) : "") << ',' << opt_field(r.elapsed_seconds);
  return os.str();
}

namespace {

json record_json(const RunRecord& r) {
  return json{{"input_path", r.input_path},
              {"mask_path", r.mask_path},
              {"mode", r.mode},
              {"beta", opt_json(r.beta)},
              {"std", opt_json(r.std)},
              {"mean", opt_json(r.mean)},
              {"cov", opt_json(r.cov)},
              {"iterations", opt_json(r.iterations)},
              {"elapsed_seconds", opt_json(r.elapsed_seconds)}};
}

}  // namespace

std::string to_json(const RunRecord& r) { return record_json(r).dump(); }

void fill_metrics(RunRecord& r, const RegionStats& s) {
  r.std = s.std;
  r.mean = s.mean;
  r.cov = s.cov;
}

namespace {

// Options shared by every command that runs the engine.
struct EngineOptions {
  std::string mode = "proposed";
  double beta = 0.8;
  int patch_side = 9;
  int small_patch_side = 5;
  int search_radius = -1;
  bool no_timing = false;

  void add_to(CLI::App& app, bool with_mode = true) {
    if (with_mode)
      app.add_option("--mode", mode, "criminisi | p1 | p2 | proposed")
          ->check(CLI::IsMember({"criminisi", "p1", "p2", "proposed"}))
          ->capture_default_str();
    app.add_option("--beta", beta, "Data-term weight of the weighted-sum priority")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--patch-side", patch_side, "Base patch side")->capture_default_str();
    app.add_option("--small-patch-side", small_patch_side, "Patch side for detailed regions")
        ->capture_default_str();
    app.add_option("--search-radius", search_radius,
                   "Restrict candidates to a square of this half-width (default: whole image)");
    app.add_flag("--no-timing", no_timing, "Report elapsed_seconds as 0 for reproducible reports");
  }

  EngineConfig config(Mode m, double b) const {
    EngineConfig cfg;
    cfg.mode = m;
    cfg.beta = b;
    cfg.base_patch_side = patch_side;
    cfg.small_patch_side = small_patch_side;
    if (search_radius >= 0) cfg.search_radius = search_radius;
    cfg.validate();
    return cfg;
  }
};

struct Job {
  fs::path image;
  fs::path mask;
  std::string name;
};

// Runs one inpainting job and fills a RunRecord; writes the output PNG when
// `output` is non-empty.
RunRecord run_one(const RgbImage& img, const Mask& mask, const EngineConfig& cfg,
                  const std::string& input, const std::string& mask_path, const fs::path& output,
                  bool no_timing) {
  RunRecord rec;
  rec.input_path = input;
  rec.mask_path = mask_path;
  rec.mode = std::string(to_string(cfg.mode));
  rec.beta = cfg.beta;
  const InpaintResult result = inpaint(img, mask, cfg);
  rec.iterations = result.report.iterations;
  rec.elapsed_seconds = no_timing ? 0.0 : result.report.elapsed_seconds;
  if (mask.unknown_count() > 0) fill_metrics(rec, region_stats(to_grayscale(result.image), mask));
  if (!output.empty()) write_rgb_png(output, result.image);
  return rec;
}

unsigned thread_budget(int requested) {
  unsigned n = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LUMEXCISE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<double> parse_betas(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size() || v < 0.0 || v > 1.0)
      throw Error(Errc::InvalidArgument, "invalid beta '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty beta list");
  return out;
}

std::vector<Mode> parse_modes(const std::string& list) {
  std::vector<Mode> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto m = parse_mode(item);
    if (!m) throw Error(Errc::InvalidArgument, "unknown mode '" + item + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty mode list");
  return out;
}

// Subcommands ----------------------------------------------------------------

struct InpaintArgs {
  std::string image, mask, output;
  bool auto_mask = false;
  DetectorConfig detector;
  std::string save_mask;
  EngineOptions engine;
};

int cmd_inpaint(const InpaintArgs& a, std::ostream& out) {
  const RgbImage img = read_rgb_png(a.image);
  Mask mask;
  std::string mask_label = a.mask;
  if (a.auto_mask) {
    mask = detect_highlights(img, a.detector);
    mask_label = "auto";
    if (!a.save_mask.empty()) write_mask_png(a.save_mask, mask);
  } else {
    mask = read_mask_png(a.mask);
  }
  require_same_size(img, mask, ("image " + a.image + " and mask " + a.mask + " differ in size").c_str());
  const EngineConfig cfg = a.engine.config(*parse_mode(a.engine.mode), a.engine.beta);
  const RunRecord rec = run_one(img, mask, cfg, a.image, mask_label, a.output, a.engine.no_timing);
  out << to_json(rec) << '\n';
  return kOk;
}

struct MetricsArgs {
  std::string image, mask, csv;
};

void append_csv(const fs::path& path, const std::vector<RunRecord>& rows) {
  const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream f(path, std::ios::app);
  if (!f) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
  if (fresh) f << kCsvHeader << '\n';
  for (const auto& r : rows) f << csv_row(r) << '\n';
  if (!f) throw Error(Errc::Io, "failed writing '" + path.string() + "'");
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out) {
  const RgbImage img = read_rgb_png(a.image);
  const Mask mask = read_mask_png(a.mask);
  require_same_size(img, mask, ("image " + a.image + " and mask " + a.mask + " differ in size").c_str());
  const RegionStats s = region_stats(to_grayscale(img), mask);
  json j{{"std", s.std}, {"mean", s.mean}, {"cov", opt_json(s.cov)}, {"pixel_count", s.pixel_count}};
  if (s.zero_mean()) j["zero_mean"] = true;
  out << j.dump() << '\n';
  if (!a.csv.empty()) {
    RunRecord rec;
    rec.input_path = a.image;
    rec.mask_path = a.mask;
    fill_metrics(rec, s);
    append_csv(a.csv, {rec});
  }
  return kOk;
}

struct SweepArgs {
  std::string image, mask, csv, output_dir;
  std::string betas = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  EngineOptions engine;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<double> betas = parse_betas(a.betas);
  const RgbImage img = read_rgb_png(a.image);
  const Mask mask = read_mask_png(a.mask);
  require_same_size(img, mask, ("image " + a.image + " and mask " + a.mask + " differ in size").c_str());
  const Mode mode = *parse_mode(a.engine.mode);
  if (!a.output_dir.empty()) fs::create_directories(a.output_dir);

  std::vector<RunRecord> rows;
  int status = kOk;
  for (double beta : betas) {
    const EngineConfig cfg = a.engine.config(mode, beta);
    fs::path output;
    if (!a.output_dir.empty())
      output = fs::path(a.output_dir) / (fs::path(a.image).stem().string() + "_beta" + format_double(beta) + ".png");
    try {
      rows.push_back(run_one(img, mask, cfg, a.image, a.mask, output, a.engine.no_timing));
    } catch (const Error& e) {
      err << "beta " << format_double(beta) << ": " << e.what() << '\n';
      RunRecord failed;
      failed.input_path = a.image;
      failed.mask_path = a.mask;
      failed.mode = std::string(to_string(mode));
      failed.beta = beta;
      rows.push_back(failed);
      if (status == kOk) status = exit_code_for(e.code());
    }
  }

  if (a.csv.empty()) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
  } else {
    std::ofstream f(a.csv, std::ios::trunc);
    if (!f) throw Error(Errc::Io, "cannot open '" + a.csv + "' for writing");
    f << kCsvHeader << '\n';
    for (const auto& r : rows) f << csv_row(r) << '\n';
  }
  return status;
}

struct BatchArgs {
  std::string dir, out_dir, mask_dir;
  std::string modes = "criminisi,proposed";
  int threads = 0;
  EngineOptions engine;
};

std::vector<Job> discover(const BatchArgs& a, std::ostream& err, bool& missing) {
  std::error_code ec;
  std::vector<Job> jobs;
  missing = false;
  fs::directory_iterator it(a.dir, ec);
  if (ec) throw Error(Errc::Io, "cannot read directory '" + a.dir + "': " + ec.message());
  for (const auto& entry : it) {
    if (!entry.is_regular_file() || entry.path().extension() != ".png") continue;
    const std::string stem = entry.path().stem().string();
    if (a.mask_dir.empty() && stem.size() >= 5 && stem.ends_with("_mask")) continue;
    Job job{entry.path(), {}, stem};
    if (a.mask_dir.empty()) {
      job.mask = entry.path().parent_path() / (stem + "_mask.png");
    } else {
      job.mask = fs::path(a.mask_dir) / (stem + ".png");
      if (!fs::exists(job.mask)) job.mask = fs::path(a.mask_dir) / (stem + "_mask.png");
    }
    if (!fs::exists(job.mask)) {
      err << "skipping " << entry.path().string() << ": no mask at " << job.mask.string() << '\n';
      missing = true;
      continue;
    }
    jobs.push_back(std::move(job));
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& l, const Job& r) { return l.name < r.name; });
  return jobs;
}

int cmd_batch(const BatchArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<Mode> modes = parse_modes(a.modes);
  bool missing_masks = false;
  const std::vector<Job> jobs = discover(a, err, missing_masks);
  if (jobs.empty()) throw Error(Errc::Io, "no <name>.png / mask pairs found in '" + a.dir + "'");
  fs::create_directories(a.out_dir);

  struct Outcome {
    std::optional<RunRecord> record;
    std::string error;
  };
  const std::size_t total = jobs.size() * modes.size();
  std::vector<Outcome> outcomes(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const Job& job = jobs[k / modes.size()];
      const Mode mode = modes[k % modes.size()];
      try {
        const RgbImage img = read_rgb_png(job.image);
        const Mask mask = read_mask_png(job.mask);
        require_same_size(img, mask, ("image " + job.image.string() + " and its mask differ in size").c_str());
        const fs::path output = fs::path(a.out_dir) / (job.name + "_" + std::string(to_string(mode)) + ".png");
        outcomes[k].record = run_one(img, mask, a.engine.config(mode, a.engine.beta), job.image.string(),
                                     job.mask.string(), output, a.engine.no_timing);
      } catch (const std::exception& e) {
        outcomes[k].error = e.what();
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(thread_budget(a.threads), total);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<RunRecord> records;
  json failures = json::array();
  for (std::size_t k = 0; k < total; ++k) {
    if (outcomes[k].record) {
      records.push_back(*outcomes[k].record);
    } else {
      const Job& job = jobs[k / modes.size()];
      err << job.image.string() << " [" << to_string(modes[k % modes.size()]) << "]: " << outcomes[k].error << '\n';
      failures.push_back({{"input_path", job.image.string()},
                          {"mode", to_string(modes[k % modes.size()])},
                          {"error", outcomes[k].error}});
    }
  }

  // Per-mode averages over successful runs with a defined metric.
  json averages = json::array();
  std::ostringstream avg_csv;
  avg_csv << "mode,beta,std,mean,cov,images\n";
  for (const Mode mode : modes) {
    double s = 0, m = 0, c = 0;
    std::size_t n = 0;
    for (const auto& r : records)
      if (r.mode == to_string(mode) && r.std && r.mean && r.cov) {
        s += *r.std;
        m += *r.mean;
        c += *r.cov;
        ++n;
      }
    json row{{"mode", to_string(mode)}, {"beta", a.engine.beta}, {"images", n}};
    row["std"] = n ? json(s / n) : json(nullptr);
    row["mean"] = n ? json(m / n) : json(nullptr);
    row["cov"] = n ? json(c / n) : json(nullptr);
    averages.push_back(row);
    avg_csv << to_string(mode) << ',' << format_double(a.engine.beta) << ','
            << (n ? format_double(s / n) : "") << ',' << (n ? format_double(m / n) : "") << ','
            << (n ? format_double(c / n) : "") << ',' << n << '\n';
  }

  {
    std::ofstream f(fs::path(a.out_dir) / "records.csv", std::ios::trunc);
    f << kCsvHeader << '\n';
    for (const auto& r : records) f << csv_row(r) << '\n';
    if (!f) throw Error(Errc::Io, "failed writing records.csv");
  }
  {
    std::ofstream f(fs::path(a.out_dir) / "averages.csv", std::ios::trunc);
    f << avg_csv.str();
    if (!f) throw Error(Errc::Io, "failed writing averages.csv");
  }
  json report{{"records", json::array()}, {"averages", averages}, {"failures", failures}};
  for (const auto& r : records) report["records"].push_back(record_json(r));
  {
    std::ofstream f(fs::path(a.out_dir) / "report.json", std::ios::trunc);
    f << report.dump(2) << '\n';
    if (!f) throw Error(Errc::Io, "failed writing report.json");
  }

  out << averages.dump() << '\n';
  return failures.empty() && !missing_masks ? kOk : kBatchFailures;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specular highlight removal by exemplar-based inpainting", "lumexcise"};
  app.require_subcommand(1);

  InpaintArgs inpaint_args;
  auto* inpaint_cmd = app.add_subcommand("inpaint", "Fill the masked region of one image");
  inpaint_cmd->add_option("image", inpaint_args.image, "Input RGB PNG")->required();
  auto* mask_opt = inpaint_cmd->add_option("--mask,-m", inpaint_args.mask, "Mask PNG (>=128 marks highlight)");
  auto* auto_opt = inpaint_cmd->add_flag("--auto-mask", inpaint_args.auto_mask, "Detect highlights heuristically");
  mask_opt->excludes(auto_opt);
  inpaint_cmd->add_option("--output,-o", inpaint_args.output, "Output PNG")->required();
  inpaint_cmd->add_option("--brightness-min", inpaint_args.detector.brightness_min)->capture_default_str();
  inpaint_cmd->add_option("--rb-closeness-max", inpaint_args.detector.rb_closeness_max)->capture_default_str();
  inpaint_cmd->add_option("--dilation-radius", inpaint_args.detector.dilation_radius)->capture_default_str();
  inpaint_cmd->add_option("--save-mask", inpaint_args.save_mask, "Write the detected mask here");
  inpaint_args.engine.add_to(*inpaint_cmd);

  MetricsArgs metrics_args;
  auto* metrics_cmd = app.add_subcommand("metrics", "Std, mean and COV of an image inside a mask");
  metrics_cmd->add_option("image", metrics_args.image, "Result RGB PNG")->required();
  metrics_cmd->add_option("--mask,-m", metrics_args.mask, "Original highlight mask")->required();
  metrics_cmd->add_option("--csv", metrics_args.csv, "Append a row to this CSV file");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run one image over a list of beta values");
  sweep_cmd->add_option("image", sweep_args.image, "Input RGB PNG")->required();
  sweep_cmd->add_option("--mask,-m", sweep_args.mask, "Mask PNG")->required();
  sweep_cmd->add_option("--betas", sweep_args.betas, "Comma-separated beta list")->capture_default_str();
  sweep_cmd->add_option("--csv", sweep_args.csv, "Write the CSV here instead of stdout");
  sweep_cmd->add_option("--output-dir", sweep_args.output_dir, "Write one result PNG per beta");
  sweep_args.engine.add_to(*sweep_cmd);

  BatchArgs batch_args;
  auto* batch_cmd = app.add_subcommand("batch", "Process every <name>.png/<name>_mask.png pair of a directory");
  batch_cmd->add_option("dir", batch_args.dir, "Input directory")->required();
  batch_cmd->add_option("--out", batch_args.out_dir, "Output directory")->required();
  batch_cmd->add_option("--mask-dir", batch_args.mask_dir, "Masks live here as <name>.png");
  batch_cmd->add_option("--modes", batch_args.modes, "Comma-separated modes")->capture_default_str();
  batch_cmd->add_option("--threads", batch_args.threads, "Worker threads (capped by LUMEXCISE_THREADS)");
  batch_args.engine.add_to(*batch_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*inpaint_cmd) {
      if (!inpaint_args.auto_mask && inpaint_args.mask.empty())
        throw Error(Errc::InvalidArgument, "inpaint needs --mask or --auto-mask");
      return cmd_inpaint(inpaint_args, out);
    }
    if (*metrics_cmd) return cmd_metrics(metrics_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out, err);
    if (*batch_cmd) return cmd_batch(batch_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace lumexcise::cli
