#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sdeid/elastic_net.hpp"
#include "sdeid/library.hpp"

namespace sdeid {

struct CvSettings {
  std::size_t folds = 7;
  std::vector<double> alphas;  // default: 35 log-spaced in [1e-5, 10]
  std::vector<double> rhos;    // default: {0.3,0.4,0.5,0.7,0.85,0.95,1.0}

  static CvSettings defaults();
};

/// One (alpha, rho) cell of the cross-validation grid.
struct CvCell {
  double alpha = 0, rho = 0;
  std::vector<double> fold_errors;  // delta_j, one per fold
  double mean_error = 0;            // delta_bar
  double se = 0;
  std::size_t n_mu = 0, n_sigma = 0;  // post-debias supports, full-data fit
  Eigen::VectorXd full_fit;           // de-biased full-data coefficients
};

struct DeltaRow {
  std::size_t n = 0;
  double delta = 0;  // min delta_bar among cells at this support size
  double se = 0;     // SE of the minimizing cell
};

struct CvReport {
  std::vector<CvCell> cells;  // alpha-major, rho-minor order
  std::size_t best_index = 0;      // (alpha*, rho*): minimizer of delta_bar
  double one_se_threshold = 0;     // eps = delta_bar(best) + SE(best)
  std::size_t selected_index = 0;  // (alpha^, rho^) from the 1-SE rule
  std::vector<DeltaRow> delta_vs_n_mu, delta_vs_n_sigma;
  std::size_t n_tilde_mu = 0, n_tilde_sigma = 0;

  std::string to_json() const;
};

/// delta_bar and SE from per-fold errors:
///   delta_bar = mean(delta_j),  SE = sqrt(sum (delta_j-delta_bar)^2/(k(k-1)))
std::pair<double, double> cv_mean_se(const std::vector<double>& fold_errors);

/// Penalized fit + de-bias on the given training rows, scored rows elsewhere.
/// Exposed for the leakage property test.
Eigen::VectorXd fit_debias_on_rows(const SsisdeDesign& design,
                                   std::span<const std::size_t> rows,
                                   double alpha, double rho,
                                   std::size_t mu_cols,
                                   std::vector<std::size_t>* support = nullptr);

CvReport cv_time_series(const SsisdeDesign& design, const CvSettings& settings);

/// 1-SE rule: among cells with delta_bar <= eps pick the smallest total
/// support; ties toward larger alpha, then larger rho.
std::pair<double, double> select_one_se(const CvReport& report);
std::size_t select_one_se_index(const CvReport& report);

struct DeltaSupportTable {
  std::vector<DeltaRow> mu, sigma;
  std::size_t n_tilde_mu = 0, n_tilde_sigma = 0;
};

DeltaSupportTable delta_vs_support(const CvReport& report);

struct IdentifyResult {
  SparseModel mu;
  SparseModel sigma;
  double in_sample_mse = 0;
  CvReport report;
};

/// Full model selection: CV grid, 1-SE choice, full-data refit + de-bias,
/// in-sample mean squared one-step error.
IdentifyResult ssisde_identify(const SsisdeDesign& design,
                               const CvSettings& settings);

}  // namespace sdeid
