#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sdeid/library.hpp"

namespace sdeid {

/// Regression design for the one-step identification problem: row i is
/// [Theta_mu(X_i) dt_i , Theta_sigma(X_i) dBp_i], target is dX_i.
struct SsisdeDesign {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd target;
  std::size_t mu_cols = 0;  // block boundary: columns [0, mu_cols) are mu
  FunctionLibrary lib_mu;
  FunctionLibrary lib_sigma;

  std::size_t rows() const { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(matrix.cols()); }
};

SsisdeDesign build_ssisde_design(std::span<const double> coarse_states,
                                 std::span<const double> dt,
                                 std::span<const double> dbp,
                                 const FunctionLibrary& lib_mu,
                                 const FunctionLibrary& lib_sigma);

/// Per-column root-mean-square scales over the given rows (training rows
/// only in cross-validation). Zero-RMS columns get scale 1.
Eigen::VectorXd rms_column_scales(const Eigen::MatrixXd& design,
                                  std::span<const std::size_t> rows);

struct ElasticNetOptions {
  double coef_tol = 1e-10;      // max coefficient change per sweep
  std::size_t max_sweeps = 100000;
  double zero_tol = 1e-8;       // numerical-zero snap, normalized units
};

/// Thrown on non-convergence; carries the last iterate (normalized units)
/// and its KKT residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::string message, Eigen::VectorXd iterate,
                   double kkt_residual)
      : Error(ErrorCode::convergence_failure, std::move(message)),
        last_iterate(std::move(iterate)),
        kkt_residual(kkt_residual) {}

  Eigen::VectorXd last_iterate;
  double kkt_residual;
};

/// Precomputed normal-equation form of a (scaled) elastic-net problem:
/// gram = G~^T G~ / n, moment = G~^T y / n, target_ss = y^T y / n.
/// Reused across an (alpha, rho) grid for fixed training rows.
struct EnetProblem {
  Eigen::MatrixXd gram;
  Eigen::VectorXd moment;
  double target_ss = 0.0;

  static EnetProblem build(const Eigen::MatrixXd& design,
                           const Eigen::VectorXd& target,
                           const Eigen::VectorXd& scales);
};

struct EnetSolution {
  Eigen::VectorXd beta;  // normalized units, numerical zeros snapped
  double kkt_residual = 0.0;
  std::size_t sweeps = 0;
};

EnetSolution elastic_net_cd(const EnetProblem& problem, double alpha,
                            double rho, const ElasticNetOptions& options = {});

/// Coordinate-descent solve of
///   (1/n) ||y - G beta||^2 + alpha (rho ||beta||_1 + (1-rho)/2 ||beta||^2)
/// on columns pre-scaled by `scales`; returned coefficients are un-scaled.
struct ElasticNetFit {
  Eigen::VectorXd coefficients;         // original units
  Eigen::VectorXd scaled_coefficients;  // normalized units
  double kkt_residual = 0.0;
  std::size_t sweeps = 0;
};

ElasticNetFit elastic_net_path_fit(const Eigen::MatrixXd& design,
                                   const Eigen::VectorXd& target, double alpha,
                                   double rho, const Eigen::VectorXd& scales,
                                   const ElasticNetOptions& options = {});

/// Spec-level wrapper returning the (mu, sigma) model pair.
std::pair<SparseModel, SparseModel> elastic_net_fit(
    const SsisdeDesign& design, double alpha, double rho,
    const Eigen::VectorXd& scales, ElasticNetFit* diagnostics = nullptr);

/// Ordinary least squares restricted to `support`; off-support coefficients
/// are exactly zero. Empty support or a rank-deficient restricted design is
/// an error.
Eigen::VectorXd restricted_ls(const Eigen::MatrixXd& design,
                              const Eigen::VectorXd& target,
                              std::span<const std::size_t> support);

std::pair<SparseModel, SparseModel> restricted_ls_debias(
    const SsisdeDesign& design, std::span<const std::size_t> support);

}  // namespace sdeid
