#pragma once

#include <cstddef>
#include <vector>

#include "sdeid/grid.hpp"

namespace sdeid {

/// Iterated Stratonovich integrals of (t, B) over one window, anchored at the
/// window start s: value index m corresponds to instant u_m = t_{begin+m}.
/// All six arrays are zero at m = 0.
///
///   i1    = u - s
///   ib    = B_u - B_s
///   i12   = int_s^u (r - s) o dB_r         (midpoint-in-time cumulative sum)
///   i21   = int_s^u (B_r - B_s) dr         (midpoint-in-B cumulative sum)
///   i22   = (B_u - B_s)^2 / 2              (closed Stratonovich form)
///   i222  = (B_u - B_s)^3 / 6              (closed Stratonovich form)
struct SignatureFeatures {
  std::vector<double> i1, ib, i12, i21, i22, i222;

  std::size_t size() const { return i1.size(); }
};

SignatureFeatures compute_signature_features(const BrownianPath& q_path,
                                             std::size_t begin,
                                             std::size_t end);

/// Second-order expansion coefficients fitted on one window.
struct PsiEstimate {
  std::size_t window = 0;
  double psi1 = 0, psi2 = 0, psi12 = 0, psi21 = 0, psi22 = 0, psi222 = 0;
  double residual_rms = 0;
  double condition_number = 0;
  bool ill_conditioned = false;  // cond > 1e12 with ridge == 0
};

struct PsiFitOptions {
  bool ridge_relative = false;  // interpret ridge as a multiple of s_max^2
  bool drop_i222 = false;
};

/// Least squares of X_u - X_s against the six features over the in-window
/// instants u (anchor excluded). Ridge = 0 uses the pseudo-inverse solution.
PsiEstimate fit_window_psi(const Trajectory& traj,
                           const SignatureFeatures& feats, std::size_t begin,
                           std::size_t end, double ridge,
                           const PsiFitOptions& options = {});

}  // namespace sdeid
