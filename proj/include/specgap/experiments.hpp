#pragma once

#include <string>
#include <vector>

#include "specgap/config.hpp"
#include "specgap/spectral_analysis.hpp"

namespace specgap {

// Everything a subcommand needs, whether it came from flags or a config
// file. Flags win over file values; file values win over the defaults here.
struct ExperimentConfig {
  std::vector<int> p_list;
  std::vector<int> n_list;
  std::vector<std::string> phi_specs;

  std::string out_dir = "out";
  std::string name;  // output subdirectory; defaults to the subcommand name

  bool write_svg = false;
  bool dump_matrices = false;
  bool logx = false;
  bool logy = false;

  double quad_tol = 1e-13;
  double outlier_tol = 1e-6;
  double bisect_tol = 1e-12;
  int grid_size = 512;      // y-grid for the Weyl statistic
  int sample_points = 512;  // quantile samples for symbol curves

  double y0 = 0.0, y1 = 0.0;  // pack window; y1 <= y0 means whole range
  int bins = 8;

  std::string phi_a, phi_b;  // compare
  double win_lo = 0.0, win_hi = 0.0;
};

// Merge section values (later call sites override earlier ones).
void apply_config_section(ExperimentConfig& cfg, const ConfigMap& file,
                          const std::string& section);

// One (degree, size, map) case of a sweep, in config order.
struct SweepCase {
  int p = 0;
  int n = 0;
  std::string spec;
};

std::vector<SweepCase> expand_cases(const ExperimentConfig& cfg);

// Core sweep shared by the gap subcommand and the canned experiments;
// returns reports in case order and writes gap_sweep.csv (plus trend SVGs
// when asked) under dir.
std::vector<GapReport> run_gap_sweep(const std::vector<SweepCase>& cases,
                                     const ExperimentConfig& cfg, const std::string& dir,
                                     bool with_svg);

int cmd_symbol(const ExperimentConfig& cfg);
int cmd_eig(const ExperimentConfig& cfg);
int cmd_gap_sweep(const ExperimentConfig& cfg);
int cmd_weyl(const ExperimentConfig& cfg);
int cmd_pack(const ExperimentConfig& cfg);
int cmd_compare(const ExperimentConfig& cfg);
int cmd_validate_phi(const ExperimentConfig& cfg);

// Canned experiment registry: each target writes its artifacts under
// out_dir/<target>/.
std::vector<std::string> reproduce_targets();
int cmd_reproduce(const std::string& target, ExperimentConfig cfg);

}  // namespace specgap
