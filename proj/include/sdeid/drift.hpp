#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdeid/grid.hpp"
#include "sdeid/library.hpp"

namespace sdeid {

/// Coefficients of the drift ODE mu'(x) = a(x) mu(x) + b(x) assembled from a
/// fitted sigma model and the per-window psi21 values.
class DriftOdeCoeffs {
 public:
  DriftOdeCoeffs() = default;
  DriftOdeCoeffs(SparseModel sigma_model, std::vector<double> psi21);

  /// a(x) = sigma'(x) / sigma(x)
  double a(double x) const;
  /// b(x) = (2 psi21[k] + sigma sigma'^2 + sigma^2 sigma'') / (2 sigma)
  double b(std::size_t window, double x) const;

  const SparseModel& sigma_model() const { return sigma_; }
  const std::vector<double>& psi21() const { return psi21_; }
  std::size_t windows() const { return psi21_.size(); }

 private:
  double sigma_checked(double x) const;

  SparseModel sigma_;
  std::vector<double> psi21_;
};

DriftOdeCoeffs build_drift_ode(const SparseModel& sigma_model,
                               std::vector<double> psi21);

struct DriftVector {
  std::vector<double> values;  // M+1 values, values[0] == mu0
  double mu0 = 0.0;
};

/// Euler recursion in state space:
///   mu_k = mu_{k-1} + [a(X_{k-1}) mu_{k-1} + b_{k-1}(X_{k-1})] (X_k - X_{k-1})
DriftVector solve_mu_euler(const DriftOdeCoeffs& coeffs,
                           std::span<const double> coarse_states, double mu0);

/// Discrete Girsanov map dBp_k = dBq_k - (mu_k / sigma_k) dt_k on the coarse
/// grid.
BrownianPath recover_p_increments(const BrownianPath& q_coarse,
                                  const DriftVector& drift,
                                  std::span<const double> sigma_values,
                                  const TimeGrid& coarse_grid);

/// Moving median over 2*half_width+1 entries (shrinking near the edges).
std::vector<double> median_smooth(std::span<const double> values,
                                  std::size_t half_width);

}  // namespace sdeid
