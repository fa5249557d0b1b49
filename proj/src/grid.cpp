#include "sdeid/grid.hpp"

#include <cmath>

namespace sdeid {

namespace {

bool increments_uniform(const std::vector<double>& times) {
  if (times.size() < 2) return true;
  const double span = times.back() - times.front();
  const double target = span / static_cast<double>(times.size() - 1);
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    if (std::abs((times[i + 1] - times[i]) - target) > 1e-12 * std::abs(target))
      return false;
  }
  return true;
}

}  // namespace

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
  if (times_.size() < 2)
    throw Error(ErrorCode::invalid_argument, "grid needs at least 2 instants");
  for (std::size_t i = 0; i + 1 < times_.size(); ++i) {
    if (!(times_[i + 1] > times_[i]))
      throw Error(ErrorCode::invalid_argument,
                  "grid times must be strictly increasing", i);
    if (!std::isfinite(times_[i]))
      throw Error(ErrorCode::invalid_argument, "grid time not finite", i);
  }
  if (!std::isfinite(times_.back()))
    throw Error(ErrorCode::invalid_argument, "grid time not finite",
                times_.size() - 1);
  uniform_ = increments_uniform(times_);
}

TimeGrid TimeGrid::uniform(double t0, double T, std::size_t n_steps) {
  if (!(T > t0))
    throw Error(ErrorCode::invalid_argument,
                "terminal time must exceed start time");
  if (n_steps == 0)
    throw Error(ErrorCode::invalid_argument, "step count must be positive");
  std::vector<double> times(n_steps + 1);
  const double span = T - t0;
  for (std::size_t i = 0; i <= n_steps; ++i)
    times[i] = t0 + span * (static_cast<double>(i) / static_cast<double>(n_steps));
  times.front() = t0;
  times.back() = T;
  return TimeGrid(std::move(times));
}

TimeGrid make_uniform_grid(double t0, double T, std::size_t n_steps) {
  return TimeGrid::uniform(t0, T, n_steps);
}

void Trajectory::validate() const {
  if (values.size() != grid.size())
    throw Error(ErrorCode::invalid_argument,
                "trajectory length does not match its grid");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::invalid_argument, "trajectory value not finite",
                  i);
}

std::vector<double> BrownianPath::cumulative() const {
  std::vector<double> values(increments.size() + 1);
  values[0] = origin;
  for (std::size_t i = 0; i < increments.size(); ++i)
    values[i + 1] = values[i] + increments[i];
  return values;
}

void BrownianPath::validate() const {
  if (increments.size() + 1 != grid.size())
    throw Error(ErrorCode::invalid_argument,
                "increment count does not match the grid");
  for (std::size_t i = 0; i < increments.size(); ++i)
    if (!std::isfinite(increments[i]))
      throw Error(ErrorCode::invalid_argument, "increment not finite", i);
}

}  // namespace sdeid
