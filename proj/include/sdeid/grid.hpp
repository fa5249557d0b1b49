#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdeid/error.hpp"

namespace sdeid {

/// Ordered observation instants t_0 < t_1 < ... < t_N.
class TimeGrid {
 public:
  TimeGrid() = default;
  explicit TimeGrid(std::vector<double> times);

  /// N+1 equispaced instants on [t0, T].
  static TimeGrid uniform(double t0, double T, std::size_t n_steps);

  std::size_t steps() const { return times_.empty() ? 0 : times_.size() - 1; }
  std::size_t size() const { return times_.size(); }
  double t0() const { return times_.front(); }
  double terminal() const { return times_.back(); }
  double time(std::size_t i) const { return times_[i]; }
  double dt(std::size_t i) const { return times_[i + 1] - times_[i]; }
  const std::vector<double>& times() const { return times_; }
  bool is_uniform() const { return uniform_; }

 private:
  std::vector<double> times_;
  bool uniform_ = false;
};

TimeGrid make_uniform_grid(double t0, double T, std::size_t n_steps);

struct Trajectory {
  TimeGrid grid;
  std::vector<double> values;  // N+1 states, finite

  void validate() const;
};

enum class Measure { physical, martingale };

/// Increment representation of a driving noise path; cumulative values are
/// anchored at `origin` (0 under the starting-at-zero assumption).
struct BrownianPath {
  TimeGrid grid;
  std::vector<double> increments;  // N values
  Measure measure = Measure::physical;
  double origin = 0.0;

  std::vector<double> cumulative() const;
  void validate() const;
};

}  // namespace sdeid
