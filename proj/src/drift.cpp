#include "sdeid/drift.hpp"

#include <algorithm>
#include <cmath>

namespace sdeid {

DriftOdeCoeffs::DriftOdeCoeffs(SparseModel sigma_model,
                               std::vector<double> psi21)
    : sigma_(std::move(sigma_model)), psi21_(std::move(psi21)) {
  if (psi21_.empty())
    throw Error(ErrorCode::invalid_argument, "need psi21 for >= 1 window");
  (void)sigma_.derivative(1.0, 2);  // requires derivatives to order 2
}

double DriftOdeCoeffs::sigma_checked(double x) const {
  const double s = sigma_.eval(x);
  if (s == 0.0 || !std::isfinite(s))
    throw Error(ErrorCode::singular_diffusion,
                "sigma vanishes at x = " + std::to_string(x));
  return s;
}

double DriftOdeCoeffs::a(double x) const {
  return sigma_.derivative(x, 1) / sigma_checked(x);
}

double DriftOdeCoeffs::b(std::size_t window, double x) const {
  if (window >= psi21_.size())
    throw Error(ErrorCode::invalid_argument, "window index out of range",
                window);
  const double s = sigma_checked(x);
  const double s1 = sigma_.derivative(x, 1);
  const double s2 = sigma_.derivative(x, 2);
  return (2.0 * psi21_[window] + s * s1 * s1 + s * s * s2) / (2.0 * s);
}

DriftOdeCoeffs build_drift_ode(const SparseModel& sigma_model,
                               std::vector<double> psi21) {
  return DriftOdeCoeffs(sigma_model, std::move(psi21));
}

DriftVector solve_mu_euler(const DriftOdeCoeffs& coeffs,
                           std::span<const double> coarse_states, double mu0) {
  if (coarse_states.size() != coeffs.windows() + 1)
    throw Error(ErrorCode::invalid_argument,
                "need M+1 states for M psi21 windows");
  DriftVector drift;
  drift.mu0 = mu0;
  drift.values.resize(coarse_states.size());
  drift.values[0] = mu0;
  for (std::size_t k = 1; k < coarse_states.size(); ++k) {
    const double xp = coarse_states[k - 1];
    const double slope =
        coeffs.a(xp) * drift.values[k - 1] + coeffs.b(k - 1, xp);
    drift.values[k] =
        drift.values[k - 1] + slope * (coarse_states[k] - xp);
    if (!std::isfinite(drift.values[k]))
      throw Error(ErrorCode::simulation_blowup,
                  "drift recursion became non-finite at window " +
                      std::to_string(k),
                  k);
  }
  return drift;
}

BrownianPath recover_p_increments(const BrownianPath& q_coarse,
                                  const DriftVector& drift,
                                  std::span<const double> sigma_values,
                                  const TimeGrid& coarse_grid) {
  if (q_coarse.measure != Measure::martingale)
    throw Error(ErrorCode::invalid_argument,
                "expected martingale-measure increments");
  q_coarse.validate();
  const std::size_t m = q_coarse.increments.size();
  if (sigma_values.size() != m || coarse_grid.steps() != m ||
      drift.values.size() != m + 1)
    throw Error(ErrorCode::invalid_argument,
                "inconsistent lengths in change-of-measure inputs");

  BrownianPath p;
  p.grid = coarse_grid;
  p.measure = Measure::physical;
  p.origin = 0.0;
  p.increments.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!(sigma_values[k] > 0.0))
      throw Error(ErrorCode::degenerate_diffusion,
                  "sigma estimate not positive at window " + std::to_string(k),
                  k);
    p.increments[k] = q_coarse.increments[k] -
                      (drift.values[k] / sigma_values[k]) * coarse_grid.dt(k);
  }
  return p;
}

std::vector<double> median_smooth(std::span<const double> values,
                                  std::size_t half_width) {
  std::vector<double> out(values.size());
  if (half_width == 0) {
    std::copy(values.begin(), values.end(), out.begin());
    return out;
  }
  std::vector<double> window;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::size_t lo = k >= half_width ? k - half_width : 0;
    const std::size_t hi = std::min(values.size(), k + half_width + 1);
    window.assign(values.begin() + lo, values.begin() + hi);
    auto mid = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
    std::nth_element(window.begin(), mid, window.end());
    if (window.size() % 2 == 1) {
      out[k] = *mid;
    } else {
      const double hi_med = *mid;
      const double lo_med =
          *std::max_element(window.begin(), mid);
      out[k] = 0.5 * (lo_med + hi_med);
    }
  }
  return out;
}

}  // namespace sdeid
