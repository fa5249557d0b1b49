#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdeid {

enum class ErrorCode {
  invalid_argument,
  simulation_blowup,
  insufficient_resolution,
  degenerate_diffusion,
  singular_diffusion,
  rank_deficiency,
  unsupported_model,
  convergence_failure,
  empty_model,
  io_error,
  config_error,
  internal,
};

const char* to_string(ErrorCode code);

/// Error thrown by all library operations. `index` carries the failing
/// step/window when the operation has one (npos otherwise).
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, std::string message, std::size_t index = npos)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

}  // namespace sdeid
