#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdeid/cv.hpp"
#include "sdeid/library.hpp"

namespace sdeid {

enum class RunMode { simulate, identify, full };

enum class Psi21Source {
  model,     // sigma-implied value -(sigma sigma'^2 + sigma^2 sigma'')/2
  window,    // raw per-window regression estimates
  smoothed,  // moving median of the window estimates
};

/// Run configuration. File format: flat `key = value` lines, '#' comments;
/// CLI flags override file values, SDEID_OUT_DIR overrides out_dir.
struct PipelineConfig {
  RunMode mode = RunMode::full;
  std::string input;             // trajectory CSV (identify mode)
  std::string out_dir = "out";

  double x0 = 1.0;
  double mu0 = 0.0;              // mu(X_0), required for identify/full
  double t0 = 0.0;
  double T = 1.0;
  std::size_t n_steps = 100000;  // N
  std::size_t windows = 1000;    // M
  std::uint64_t seed = 1;

  std::vector<double> mu_true;     // simulation law, monomial coefficients
  std::vector<double> sigma_true;

  int lib_mu_degree = 5;
  int lib_sigma_degree = 5;

  double stlsq_threshold = 0.0;
  std::size_t stlsq_max_iters = 20;

  std::size_t cv_folds = 7;
  double alpha_min = 1e-5;
  double alpha_max = 10.0;
  std::size_t alpha_count = 35;
  std::vector<double> rho_set = {0.3, 0.4, 0.5, 0.7, 0.85, 0.95, 1.0};

  double window_ridge_rel = 1e-10;
  Psi21Source psi21_source = Psi21Source::model;
  std::size_t psi21_smooth_width = 5;
  bool drop_i222 = false;

  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  static PipelineConfig from_file(const std::string& path);
  void apply_env();
  void validate() const;

  CvSettings cv_settings() const;
  static const std::vector<std::string>& keys();
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct RunReport {
  SparseModel mu_model;
  SparseModel sigma_model;
  double in_sample_mse = 0;
  double alpha_dagger = 0, rho_dagger = 0;
  std::size_t n_mu = 0, n_sigma = 0;
  std::size_t n_tilde_mu = 0, n_tilde_sigma = 0;
  double cv_best_error = 0, cv_best_se = 0;
  std::vector<std::string> manifest;          // files written or reused
  std::vector<StageTiming> timings;           // console only, never serialized
  std::string out_dir;
  bool has_models = false;                    // false for simulate-only runs

  std::string to_json() const;  // deterministic: timings excluded
};

/// Execute the configured stages, reusing cached artifacts whose files are
/// already present in out_dir. On stage failure a `<stage>.partial` marker is
/// left next to whatever outputs were produced.
RunReport run_pipeline(const PipelineConfig& config);

/// Write the four plot-ready CSV panels from a completed run's artifacts.
/// Returns the files written. Truth columns appear when the run simulated.
std::vector<std::string> emit_plot_data(const PipelineConfig& config);

}  // namespace sdeid
