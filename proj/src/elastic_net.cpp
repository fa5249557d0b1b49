#include "sdeid/elastic_net.hpp"

#include <cmath>
#include <sstream>

namespace sdeid {

SsisdeDesign build_ssisde_design(std::span<const double> coarse_states,
                                 std::span<const double> dt,
                                 std::span<const double> dbp,
                                 const FunctionLibrary& lib_mu,
                                 const FunctionLibrary& lib_sigma) {
  const std::size_t m = dt.size();
  if (coarse_states.size() != m + 1 || dbp.size() != m)
    throw Error(ErrorCode::invalid_argument,
                "design inputs need M+1 states, M dt and M dBp values");

  SsisdeDesign design;
  design.lib_mu = lib_mu;
  design.lib_sigma = lib_sigma;
  design.mu_cols = lib_mu.size();
  design.matrix.resize(m, lib_mu.size() + lib_sigma.size());
  design.target.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = coarse_states[i];
    for (std::size_t c = 0; c < lib_mu.size(); ++c)
      design.matrix(i, c) = lib_mu.term(c).eval(x) * dt[i];
    for (std::size_t c = 0; c < lib_sigma.size(); ++c)
      design.matrix(i, lib_mu.size() + c) = lib_sigma.term(c).eval(x) * dbp[i];
    design.target(i) = coarse_states[i + 1] - coarse_states[i];
  }
  return design;
}

Eigen::VectorXd rms_column_scales(const Eigen::MatrixXd& design,
                                  std::span<const std::size_t> rows) {
  Eigen::VectorXd scales(design.cols());
  for (Eigen::Index c = 0; c < design.cols(); ++c) {
    double ss = 0.0;
    for (std::size_t r : rows) {
      const double v = design(static_cast<Eigen::Index>(r), c);
      ss += v * v;
    }
    const double rms = std::sqrt(ss / static_cast<double>(rows.size()));
    scales[c] = rms > 0.0 ? rms : 1.0;
  }
  return scales;
}

EnetProblem EnetProblem::build(const Eigen::MatrixXd& design,
                               const Eigen::VectorXd& target,
                               const Eigen::VectorXd& scales) {
  if (scales.size() != design.cols())
    throw Error(ErrorCode::invalid_argument,
                "scale vector does not match design columns");
  const double n = static_cast<double>(design.rows());
  Eigen::MatrixXd scaled = design * scales.cwiseInverse().asDiagonal();
  EnetProblem p;
  p.gram = scaled.transpose() * scaled / n;
  p.moment = scaled.transpose() * target / n;
  p.target_ss = target.squaredNorm() / n;
  return p;
}

namespace {

double soft_threshold(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

double enet_objective(const EnetProblem& p, const Eigen::VectorXd& beta,
                      double alpha, double rho) {
  const double rss = p.target_ss - 2.0 * p.moment.dot(beta) +
                     beta.dot(p.gram * beta);
  return rss + alpha * (rho * beta.lpNorm<1>() +
                        0.5 * (1.0 - rho) * beta.squaredNorm());
}

double kkt_residual(const EnetProblem& p, const Eigen::VectorXd& beta,
                    double alpha, double rho) {
  const Eigen::VectorXd grad = 2.0 * (p.moment - p.gram * beta);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    double r;
    if (beta[j] != 0.0) {
      r = std::abs(grad[j] - alpha * (1.0 - rho) * beta[j] -
                   alpha * rho * (beta[j] > 0 ? 1.0 : -1.0));
    } else {
      r = std::max(0.0, std::abs(grad[j]) - alpha * rho);
    }
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

EnetSolution elastic_net_cd(const EnetProblem& problem, double alpha,
                            double rho, const ElasticNetOptions& options) {
  if (alpha < 0.0)
    throw Error(ErrorCode::invalid_argument, "alpha must be >= 0");
  if (rho < 0.0 || rho > 1.0)
    throw Error(ErrorCode::invalid_argument, "rho must lie in [0, 1]");

  const Eigen::Index p = problem.gram.rows();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd gram_beta = Eigen::VectorXd::Zero(p);

  double prev_objective = enet_objective(problem, beta, alpha, rho);
  bool converged = false;
  std::size_t sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const double cjj = problem.gram(j, j);
      if (cjj == 0.0) continue;  // zero column
      const double z = problem.moment[j] - gram_beta[j] + cjj * beta[j];
      const double updated =
          soft_threshold(2.0 * z, alpha * rho) / (2.0 * cjj + alpha * (1.0 - rho));
      const double change = updated - beta[j];
      if (change != 0.0) {
        gram_beta += change * problem.gram.col(j);
        beta[j] = updated;
        max_change = std::max(max_change, std::abs(change));
      }
    }
    const double objective = enet_objective(problem, beta, alpha, rho);
    if (objective > prev_objective + 1e-12 * std::max(1.0, std::abs(prev_objective)))
      throw Error(ErrorCode::internal,
                  "coordinate descent objective increased within a sweep");
    prev_objective = objective;
    if (max_change < options.coef_tol) {
      converged = true;
      ++sweep;
      break;
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "coordinate descent did not converge in " << options.max_sweeps
        << " sweeps; kkt residual "
        << kkt_residual(problem, beta, alpha, rho);
    throw ConvergenceError(msg.str(), beta,
                           kkt_residual(problem, beta, alpha, rho));
  }

  for (Eigen::Index j = 0; j < p; ++j)
    if (std::abs(beta[j]) < options.zero_tol) beta[j] = 0.0;

  EnetSolution solution;
  solution.beta = beta;
  solution.kkt_residual = kkt_residual(problem, beta, alpha, rho);
  solution.sweeps = sweep;
  return solution;
}

ElasticNetFit elastic_net_path_fit(const Eigen::MatrixXd& design,
                                   const Eigen::VectorXd& target, double alpha,
                                   double rho, const Eigen::VectorXd& scales,
                                   const ElasticNetOptions& options) {
  const EnetProblem problem = EnetProblem::build(design, target, scales);
  const EnetSolution solution = elastic_net_cd(problem, alpha, rho, options);
  ElasticNetFit fit;
  fit.scaled_coefficients = solution.beta;
  fit.coefficients = solution.beta.cwiseQuotient(scales);
  fit.kkt_residual = solution.kkt_residual;
  fit.sweeps = solution.sweeps;
  return fit;
}

std::pair<SparseModel, SparseModel> elastic_net_fit(
    const SsisdeDesign& design, double alpha, double rho,
    const Eigen::VectorXd& scales, ElasticNetFit* diagnostics) {
  ElasticNetFit fit =
      elastic_net_path_fit(design.matrix, design.target, alpha, rho, scales);
  if (diagnostics) *diagnostics = fit;
  std::vector<double> mu_coeffs(design.mu_cols);
  std::vector<double> sigma_coeffs(design.cols() - design.mu_cols);
  for (std::size_t c = 0; c < design.mu_cols; ++c)
    mu_coeffs[c] = fit.coefficients[static_cast<Eigen::Index>(c)];
  for (std::size_t c = design.mu_cols; c < design.cols(); ++c)
    sigma_coeffs[c - design.mu_cols] =
        fit.coefficients[static_cast<Eigen::Index>(c)];
  return {SparseModel(design.lib_mu, std::move(mu_coeffs)),
          SparseModel(design.lib_sigma, std::move(sigma_coeffs))};
}

Eigen::VectorXd restricted_ls(const Eigen::MatrixXd& design,
                              const Eigen::VectorXd& target,
                              std::span<const std::size_t> support) {
  if (support.empty())
    throw Error(ErrorCode::empty_model, "cannot de-bias an empty support");
  Eigen::MatrixXd sub(design.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t c = 0; c < support.size(); ++c) {
    if (support[c] >= static_cast<std::size_t>(design.cols()))
      throw Error(ErrorCode::invalid_argument, "support index out of range");
    sub.col(static_cast<Eigen::Index>(c)) =
        design.col(static_cast<Eigen::Index>(support[c]));
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
  if (qr.rank() < static_cast<Eigen::Index>(support.size())) {
    std::ostringstream msg;
    msg << "restricted design is rank deficient; dependent columns:";
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < perm.size(); ++i)
      msg << ' ' << support[static_cast<std::size_t>(perm(i))];
    throw Error(ErrorCode::rank_deficiency, msg.str());
  }
  const Eigen::VectorXd fit = qr.solve(target);
  Eigen::VectorXd full = Eigen::VectorXd::Zero(design.cols());
  for (std::size_t c = 0; c < support.size(); ++c)
    full[static_cast<Eigen::Index>(support[c])] =
        fit[static_cast<Eigen::Index>(c)];
  return full;
}

std::pair<SparseModel, SparseModel> restricted_ls_debias(
    const SsisdeDesign& design, std::span<const std::size_t> support) {
  const Eigen::VectorXd full = restricted_ls(design.matrix, design.target, support);
  std::vector<double> mu_coeffs(design.mu_cols);
  std::vector<double> sigma_coeffs(design.cols() - design.mu_cols);
  for (std::size_t c = 0; c < design.mu_cols; ++c)
    mu_coeffs[c] = full[static_cast<Eigen::Index>(c)];
  for (std::size_t c = design.mu_cols; c < design.cols(); ++c)
    sigma_coeffs[c - design.mu_cols] = full[static_cast<Eigen::Index>(c)];
  return {SparseModel(design.lib_mu, std::move(mu_coeffs)),
          SparseModel(design.lib_sigma, std::move(sigma_coeffs))};
}

}  // namespace sdeid
