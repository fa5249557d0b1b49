#pragma once

#include <cstddef>
#include <vector>

#include "sdeid/grid.hpp"
#include "sdeid/library.hpp"

namespace sdeid {

/// Coarse windows {j_k} over a fine grid: j_0 = 0 < j_1 < ... < j_M = N.
class SubPartition {
 public:
  SubPartition() = default;
  SubPartition(TimeGrid fine_grid, std::vector<std::size_t> window_indices);

  /// M equal windows of N/M fine steps each (N must divide evenly).
  static SubPartition uniform(const TimeGrid& fine_grid, std::size_t windows);

  const TimeGrid& fine() const { return fine_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t windows() const { return indices_.size() - 1; }
  std::size_t begin(std::size_t k) const { return indices_[k]; }
  std::size_t end(std::size_t k) const { return indices_[k + 1]; }
  std::size_t window_steps(std::size_t k) const { return end(k) - begin(k); }
  /// delta_k = t_{j_{k+1}} - t_{j_k}
  double window_span(std::size_t k) const {
    return fine_.time(end(k)) - fine_.time(begin(k));
  }
  /// Grid of the M+1 window anchor instants.
  TimeGrid coarse_grid() const;

 private:
  TimeGrid fine_;
  std::vector<std::size_t> indices_;
};

/// Windowed quadratic variations and the pointwise diffusion estimates
/// anchored at the window left endpoints X_{t_{j_k}}.
struct DiffusionEstimate {
  SubPartition sub;
  std::vector<double> sigma_values;  // M values, sqrt(qv/delta)
  std::vector<double> qv_windows;    // M window quadratic variations
  std::vector<std::size_t> zero_windows;  // windows with qv == 0 (flag)

  bool has_zero_windows() const { return !zero_windows.empty(); }
};

std::vector<double> estimate_window_qv(const Trajectory& traj,
                                       const SubPartition& sub);

DiffusionEstimate estimate_sigma_vector(const Trajectory& traj,
                                        const SubPartition& sub);

/// Coarse martingale-measure increments sqrt(delta_k) * dX_k / sqrt(qv_k).
BrownianPath reconstruct_q_increments(const Trajectory& traj,
                                      const DiffusionEstimate& est);

/// Sequentially thresholded least squares on (x, sigma_hat) pairs.
/// threshold 0 reduces to ordinary least squares on the full library.
SparseModel fit_sigma_stlsq(const std::vector<std::pair<double, double>>& pairs,
                            const FunctionLibrary& library, double threshold,
                            std::size_t max_iters);

/// Exact derivative evaluation of a fitted model (order 0, 1 or 2).
double eval_model_derivatives(const SparseModel& model, double x, int order);

}  // namespace sdeid
