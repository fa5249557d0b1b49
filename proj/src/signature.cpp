#include "sdeid/signature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "sdeid/error.hpp"

namespace sdeid {

SignatureFeatures compute_signature_features(const BrownianPath& q_path,
                                             std::size_t begin,
                                             std::size_t end) {
  if (end <= begin || end > q_path.increments.size())
    throw Error(ErrorCode::invalid_argument, "bad window range");
  const std::size_t steps = end - begin;
  if (steps + 1 < 7)
    throw Error(ErrorCode::insufficient_resolution,
                "window has fewer than 7 instants");

  SignatureFeatures f;
  const std::size_t n = steps + 1;
  f.i1.assign(n, 0.0);
  f.ib.assign(n, 0.0);
  f.i12.assign(n, 0.0);
  f.i21.assign(n, 0.0);
  f.i22.assign(n, 0.0);
  f.i222.assign(n, 0.0);

  const double s = q_path.grid.time(begin);
  double b = 0.0;
  for (std::size_t m = 0; m < steps; ++m) {
    const double u0 = q_path.grid.time(begin + m) - s;
    const double u1 = q_path.grid.time(begin + m + 1) - s;
    const double db = q_path.increments[begin + m];
    const double b1 = b + db;

    f.i1[m + 1] = u1;
    f.ib[m + 1] = b1;
    f.i12[m + 1] = f.i12[m] + 0.5 * (u0 + u1) * db;
    f.i21[m + 1] = f.i21[m] + 0.5 * (b + b1) * (u1 - u0);
    f.i22[m + 1] = 0.5 * b1 * b1;
    f.i222[m + 1] = b1 * b1 * b1 / 6.0;
    b = b1;
  }
  return f;
}

PsiEstimate fit_window_psi(const Trajectory& traj,
                           const SignatureFeatures& feats, std::size_t begin,
                           std::size_t end, double ridge,
                           const PsiFitOptions& options) {
  if (ridge < 0.0)
    throw Error(ErrorCode::invalid_argument, "ridge must be >= 0");
  const std::size_t steps = end - begin;
  if (feats.size() != steps + 1)
    throw Error(ErrorCode::invalid_argument,
                "features do not match the window range");

  const int cols = options.drop_i222 ? 5 : 6;
  Eigen::MatrixXd design(steps, cols);
  Eigen::VectorXd target(steps);
  const double xs = traj.values[begin];
  for (std::size_t m = 1; m <= steps; ++m) {
    design(m - 1, 0) = feats.i1[m];
    design(m - 1, 1) = feats.ib[m];
    design(m - 1, 2) = feats.i12[m];
    design(m - 1, 3) = feats.i21[m];
    design(m - 1, 4) = feats.i22[m];
    if (cols == 6) design(m - 1, 5) = feats.i222[m];
    target(m - 1) = traj.values[begin + m] - xs;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
  const double s_max = svd.singularValues()(0);
  const double s_min = svd.singularValues()(svd.singularValues().size() - 1);
  const double cond =
      s_min > 0.0 ? s_max / s_min : std::numeric_limits<double>::infinity();

  double lambda = options.ridge_relative ? ridge * s_max * s_max : ridge;

  Eigen::VectorXd psi(cols);
  if (lambda > 0.0) {
    Eigen::MatrixXd normal = design.transpose() * design;
    normal.diagonal().array() += lambda;
    psi = normal.ldlt().solve(design.transpose() * target);
  } else {
    // pseudo-inverse convention: minimum-norm least squares
    psi = design.completeOrthogonalDecomposition().solve(target);
  }

  PsiEstimate est;
  est.psi1 = psi(0);
  est.psi2 = psi(1);
  est.psi12 = psi(2);
  est.psi21 = psi(3);
  est.psi22 = psi(4);
  est.psi222 = cols == 6 ? psi(5) : 0.0;
  est.residual_rms =
      std::sqrt((target - design * psi).squaredNorm() / static_cast<double>(steps));
  est.condition_number = cond;
  est.ill_conditioned = (lambda == 0.0 && cond > 1e12);
  return est;
}

}  // namespace sdeid
