#ifndef HZETA_ERROR_HPP
#define HZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hz {

/// Failure categories shared by every module. The C API maps these onto
/// its status codes one to one.
enum class ErrorCode {
  invalid_argument = 1,
  gamma_pole,
  precision_unreachable,
  divergent_parameters,
  tail_bound_failure,
  division_by_zero,
  nonconstant_term,
  bracket_failure,
  certification_failure,
  insufficient_spectrum,
  zeta_pole,
  radius_exceeded,
  insufficient_terms,
  unknown_identifier,
  not_a_multiple,
  internal_inconsistency,
  io_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hz

#endif  // HZETA_ERROR_HPP
