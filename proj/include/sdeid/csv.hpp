#pragma once

#include <string>
#include <vector>

#include "sdeid/grid.hpp"

namespace sdeid {

/// All CSV output: '.' decimal separator, '\n' newlines, UTF-8, values with
/// round-trip precision (%.17g).
std::string format_double(double v);

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

void write_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::string& path);

/// Increments with their left-endpoint instants (N rows for N+1 grid points).
void write_increments_csv(const std::string& path, const BrownianPath& path_data);
/// Grid comes from the caller (the trajectory's); increments are validated
/// against it row-count-wise.
BrownianPath read_increments_csv(const std::string& path, const TimeGrid& grid,
                                 Measure measure);

}  // namespace sdeid
