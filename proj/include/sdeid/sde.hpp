#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "sdeid/grid.hpp"
#include "sdeid/library.hpp"

namespace sdeid {

/// Deterministic standard-normal stream: mt19937_64 driving Box-Muller on
/// 53-bit uniforms (std::normal_distribution is implementation-defined, this
/// is not). Fixed seed => identical draws on every run.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();

  /// Substream rule for independent trajectories from one base seed:
  /// substream k is seeded with splitmix64(base + (k+1) * 0x9e3779b97f4a7c15).
  static std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Drift and diffusion laws in library-coefficient form.
struct CoefficientPair {
  SparseModel mu;
  SparseModel sigma;
};

BrownianPath sample_brownian(const TimeGrid& grid, std::uint64_t seed);

Trajectory simulate_euler_maruyama(const CoefficientPair& coeffs, double x0,
                                   const BrownianPath& noise);

/// Stratonovich-form drift mu_tilde(x) = mu(x) - sigma(x) sigma'(x) / 2.
std::function<double(double)> ito_to_stratonovich_drift(
    const CoefficientPair& coeffs);

}  // namespace sdeid
