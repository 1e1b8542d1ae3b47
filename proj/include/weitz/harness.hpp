#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weitz/geometry.hpp"

namespace weitz {

struct ExperimentConfig {
  double a = 1.0;
  double b = 1.0;
  double eps = 0.1;
  double theta = kPi / 6.0;
  std::vector<int> n_list{2, 4, 8};
  double p_exp = 2.0;
  double mesh_h = 0.0;  // 0 selects h(n) = min(1e-2, b / (40 n))
  int quad_m = 16;
  int block_samples = 8;
  int pair_samples = 500;  // random net pairs once exhaustive pairs exceed this
  std::uint64_t seed = 1;
  std::string out = "report";

  void validate() const;
  double h_for(int n) const;
};

/// Parses key=value lines ('#' starts a comment) over the defaults.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Applies one key=value assignment; throws ParameterError on unknown keys.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
std::string to_config_text(const ExperimentConfig& cfg);

struct RateFit {
  double slope = 0.0;
  double r_squared = 0.0;
  int used = 0;
  std::vector<std::string> warnings;
};

/// Least-squares slope of log(value) against log(n). Non-positive values
/// are dropped with a warning; fewer than 3 usable points throw FitError.
RateFit fit_rate(std::span<const std::pair<double, double>> points);

struct SweepRecord {
  int n = 0;
  double h = 0.0;
  double dis_tn = 0.0;
  double lp_frame = 0.0;
  double lp_rigidity = 0.0;
  double lp_metric = 0.0;
  double sup_metric = 0.0;
  double vol_ratio_sup = 0.0;
  double max_block_dist = 0.0;
  double frame_at_probe = 0.0;
  int max_cells = 0;
  int max_cells_sector = 0;
  int cell_bound_violations = 0;
  int monotone_violations = 0;
  int pairs = 0;
  double uncovered_volume = 0.0;
  double seconds = 0.0;
  std::string error;
};

struct ConvergenceReport {
  ExperimentConfig cfg;
  std::vector<SweepRecord> records;
  RateFit fit_dis;
  RateFit fit_block;
  RateFit fit_frame;
  RateFit fit_rigidity;
  RateFit fit_metric;
  bool item1 = false;  // uncovered volume vanishes
  bool item2 = false;  // distortion decays at rate about 1/n
  bool item3 = false;  // L^p rigidity decreasing
  bool item4 = false;  // L^p frame error decreasing
  std::vector<std::string> notes;

  bool ok() const;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Every measurement for one n; failures land in `error`.
SweepRecord measure(const ExperimentConfig& cfg, int n);
ConvergenceReport run_sweep(const ExperimentConfig& cfg);
/// Writes <prefix>.csv and <prefix>.json.
void write_report(const ConvergenceReport& rep, const std::string& prefix);

/// Distortion of the net correspondence at resolution n with mesh size h,
/// also collecting cell-crossing statistics of the underlying paths.
struct NetStats {
  double dis_tn = 0.0;
  int pairs = 0;
  int max_cells = 0;
  int max_cells_sector = 0;
  int cell_bound_violations = 0;
  int monotone_violations = 0;
};
NetStats net_statistics(double a, double b, double eps, double theta, int n, double h,
                        int pair_samples, std::uint64_t seed);

}  // namespace weitz
