#include "sdeid/sde.hpp"

#include <cmath>
#include <numbers>

namespace sdeid {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double NormalStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] so log stays finite, u2 in [0,1)
  const double u1 =
      (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t NormalStream::substream_seed(std::uint64_t base,
                                           std::uint64_t index) {
  return splitmix64(base + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

BrownianPath sample_brownian(const TimeGrid& grid, std::uint64_t seed) {
  NormalStream stream(seed);
  BrownianPath path;
  path.grid = grid;
  path.measure = Measure::physical;
  path.origin = 0.0;
  path.increments.resize(grid.steps());
  for (std::size_t i = 0; i < grid.steps(); ++i)
    path.increments[i] = std::sqrt(grid.dt(i)) * stream.next();
  return path;
}

Trajectory simulate_euler_maruyama(const CoefficientPair& coeffs, double x0,
                                   const BrownianPath& noise) {
  if (noise.measure != Measure::physical)
    throw Error(ErrorCode::invalid_argument,
                "simulation noise must be under the physical measure");
  noise.validate();

  const std::size_t n = noise.increments.size();
  Trajectory traj;
  traj.grid = noise.grid;
  traj.values.resize(n + 1);
  traj.values[0] = x0;

  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = coeffs.sigma.eval(x);
    if (!std::isfinite(s) || s < 0.0)
      throw Error(ErrorCode::simulation_blowup,
                  "diffusion coefficient left (0, inf) at step " +
                      std::to_string(i),
                  i);
    x += coeffs.mu.eval(x) * noise.grid.dt(i) + s * noise.increments[i];
    if (!std::isfinite(x))
      throw Error(ErrorCode::simulation_blowup,
                  "state became non-finite at step " + std::to_string(i + 1),
                  i + 1);
    traj.values[i + 1] = x;
  }
  return traj;
}

std::function<double(double)> ito_to_stratonovich_drift(
    const CoefficientPair& coeffs) {
  SparseModel mu = coeffs.mu;
  SparseModel sigma = coeffs.sigma;
  // probe once so a non-differentiable sigma representation fails eagerly
  (void)sigma.derivative(0.0, 1);
  return [mu, sigma](double x) {
    return mu.eval(x) - 0.5 * sigma.eval(x) * sigma.derivative(x, 1);
  };
}

}  // namespace sdeid
