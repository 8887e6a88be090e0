// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_ERRORS_HPP
#define MARLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace marle {

// Numeric error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_argument,
  non_finite_input,
  negative_internal_energy,
  invalid_grid_config,
  grid_mismatch,
  non_timelike_flux,
  negative_time_component,
  non_positive_gamma,
  ratio_out_of_range,
  bracket_failure,
  tolerance_not_reached,
  cfl_violation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define MARLE_DEFINE_ERROR(Name, code_value)                      \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : Error(ErrorCode::code_value, what) {}                   \
  }

MARLE_DEFINE_ERROR(InvalidArgument, invalid_argument);
MARLE_DEFINE_ERROR(NonFiniteInput, non_finite_input);
MARLE_DEFINE_ERROR(NegativeInternalEnergy, negative_internal_energy);
MARLE_DEFINE_ERROR(InvalidGridConfig, invalid_grid_config);
MARLE_DEFINE_ERROR(GridMismatch, grid_mismatch);
MARLE_DEFINE_ERROR(NonTimelikeFlux, non_timelike_flux);
MARLE_DEFINE_ERROR(NegativeTimeComponent, negative_time_component);
MARLE_DEFINE_ERROR(NonPositiveGamma, non_positive_gamma);
MARLE_DEFINE_ERROR(RatioOutOfRange, ratio_out_of_range);
MARLE_DEFINE_ERROR(BracketFailure, bracket_failure);
MARLE_DEFINE_ERROR(ToleranceNotReached, tolerance_not_reached);
MARLE_DEFINE_ERROR(CFLViolation, cfl_violation);

#undef MARLE_DEFINE_ERROR

}  // namespace marle

#endif  // MARLE_ERRORS_HPP
