#include "sdeid/diffusion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdeid {

SubPartition::SubPartition(TimeGrid fine_grid,
                           std::vector<std::size_t> window_indices)
    : fine_(std::move(fine_grid)), indices_(std::move(window_indices)) {
  if (indices_.size() < 2)
    throw Error(ErrorCode::invalid_argument, "sub-partition needs >= 1 window");
  if (indices_.front() != 0 || indices_.back() != fine_.steps())
    throw Error(ErrorCode::invalid_argument,
                "sub-partition must span the fine grid (j_0=0, j_M=N)");
  for (std::size_t k = 0; k + 1 < indices_.size(); ++k)
    if (indices_[k + 1] <= indices_[k])
      throw Error(ErrorCode::invalid_argument,
                  "sub-partition indices must be strictly increasing", k);
  const std::size_t m = indices_.size() - 1;
  if (m > fine_.steps() / 2)
    throw Error(ErrorCode::invalid_argument,
                "window count must satisfy M <= N/2");
}

SubPartition SubPartition::uniform(const TimeGrid& fine_grid,
                                   std::size_t windows) {
  if (windows == 0)
    throw Error(ErrorCode::invalid_argument, "window count must be positive");
  const std::size_t n = fine_grid.steps();
  if (n % windows != 0)
    throw Error(ErrorCode::invalid_argument,
                "fine step count " + std::to_string(n) +
                    " is not divisible by window count " +
                    std::to_string(windows));
  const std::size_t stride = n / windows;
  std::vector<std::size_t> idx(windows + 1);
  for (std::size_t k = 0; k <= windows; ++k) idx[k] = k * stride;
  return SubPartition(fine_grid, std::move(idx));
}

TimeGrid SubPartition::coarse_grid() const {
  std::vector<double> times(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k)
    times[k] = fine_.time(indices_[k]);
  return TimeGrid(std::move(times));
}

std::vector<double> estimate_window_qv(const Trajectory& traj,
                                       const SubPartition& sub) {
  traj.validate();
  const std::size_t m = sub.windows();
  std::vector<double> qv(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    if (sub.window_steps(k) < 2)
      throw Error(ErrorCode::insufficient_resolution,
                  "window " + std::to_string(k) + " has fewer than 2 fine steps",
                  k);
    double sum = 0.0;
    for (std::size_t i = sub.begin(k); i < sub.end(k); ++i) {
      const double d = traj.values[i + 1] - traj.values[i];
      sum += d * d;
    }
    qv[k] = sum;
  }
  return qv;
}

DiffusionEstimate estimate_sigma_vector(const Trajectory& traj,
                                        const SubPartition& sub) {
  DiffusionEstimate est;
  est.sub = sub;
  est.qv_windows = estimate_window_qv(traj, sub);
  est.sigma_values.resize(sub.windows());
  for (std::size_t k = 0; k < sub.windows(); ++k) {
    est.sigma_values[k] = std::sqrt(est.qv_windows[k] / sub.window_span(k));
    if (est.qv_windows[k] == 0.0) est.zero_windows.push_back(k);
  }
  return est;
}

BrownianPath reconstruct_q_increments(const Trajectory& traj,
                                      const DiffusionEstimate& est) {
  traj.validate();
  const SubPartition& sub = est.sub;
  BrownianPath path;
  path.grid = sub.coarse_grid();
  path.measure = Measure::martingale;
  path.origin = 0.0;
  path.increments.resize(sub.windows());
  for (std::size_t k = 0; k < sub.windows(); ++k) {
    if (est.qv_windows[k] == 0.0)
      throw Error(ErrorCode::degenerate_diffusion,
                  "window " + std::to_string(k) +
                      " has zero quadratic variation",
                  k);
    const double dx =
        traj.values[sub.end(k)] - traj.values[sub.begin(k)];
    path.increments[k] =
        std::sqrt(sub.window_span(k)) * dx / std::sqrt(est.qv_windows[k]);
  }
  return path;
}

namespace {

Eigen::MatrixXd library_design(const std::vector<std::pair<double, double>>& pairs,
                               const FunctionLibrary& library) {
  Eigen::MatrixXd design(pairs.size(), library.size());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t c = 0; c < library.size(); ++c)
      design(r, c) = library.term(c).eval(pairs[r].first);
  return design;
}

Eigen::VectorXd solve_active_ls(const Eigen::MatrixXd& design,
                                const Eigen::VectorXd& target,
                                const std::vector<std::size_t>& active,
                                const FunctionLibrary& library) {
  Eigen::MatrixXd sub(design.rows(), active.size());
  for (std::size_t c = 0; c < active.size(); ++c)
    sub.col(c) = design.col(active[c]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
  if (qr.rank() < static_cast<Eigen::Index>(active.size())) {
    std::ostringstream msg;
    msg << "active design is rank deficient; dependent columns:";
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < perm.size(); ++i)
      msg << ' ' << library.term(active[perm(i)]).name;
    throw Error(ErrorCode::rank_deficiency, msg.str());
  }
  return qr.solve(target);
}

}  // namespace

SparseModel fit_sigma_stlsq(const std::vector<std::pair<double, double>>& pairs,
                            const FunctionLibrary& library, double threshold,
                            std::size_t max_iters) {
  if (threshold < 0.0)
    throw Error(ErrorCode::invalid_argument, "threshold must be >= 0");
  if (max_iters == 0)
    throw Error(ErrorCode::invalid_argument, "max_iters must be positive");
  if (pairs.size() < library.size())
    throw Error(ErrorCode::invalid_argument,
                "need at least as many pairs as library terms");

  const Eigen::MatrixXd design = library_design(pairs, library);
  if (!design.allFinite())
    throw Error(ErrorCode::invalid_argument, "library columns must be finite");
  Eigen::VectorXd target(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) target[r] = pairs[r].second;

  std::vector<std::size_t> active(library.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  std::vector<double> coeffs(library.size(), 0.0);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    const Eigen::VectorXd fit = solve_active_ls(design, target, active, library);
    std::fill(coeffs.begin(), coeffs.end(), 0.0);
    for (std::size_t c = 0; c < active.size(); ++c)
      coeffs[active[c]] = fit[static_cast<Eigen::Index>(c)];

    std::vector<std::size_t> next;
    for (std::size_t i : active)
      if (std::abs(coeffs[i]) >= threshold) next.push_back(i);
    if (next.empty()) {
      // over-thresholding: empty model, flagged by its empty support
      return SparseModel(library, std::vector<double>(library.size(), 0.0));
    }
    if (next == active) break;
    for (std::size_t i : active)
      if (std::abs(coeffs[i]) < threshold) coeffs[i] = 0.0;
    active = std::move(next);
  }
  return SparseModel(library, std::move(coeffs));
}

double eval_model_derivatives(const SparseModel& model, double x, int order) {
  return model.derivative(x, order);
}

}  // namespace sdeid
