#include "hzeta/error.hpp"

namespace hz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::gamma_pole: return "gamma-pole";
    case ErrorCode::precision_unreachable: return "precision-unreachable";
    case ErrorCode::divergent_parameters: return "divergent-parameters";
    case ErrorCode::tail_bound_failure: return "tail-bound-failure";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::nonconstant_term: return "nonconstant-term";
    case ErrorCode::bracket_failure: return "bracket-failure";
    case ErrorCode::certification_failure: return "certification-failure";
    case ErrorCode::insufficient_spectrum: return "insufficient-spectrum";
    case ErrorCode::zeta_pole: return "zeta-pole";
    case ErrorCode::radius_exceeded: return "radius-exceeded";
    case ErrorCode::insufficient_terms: return "insufficient-terms";
    case ErrorCode::unknown_identifier: return "unknown-identifier";
    case ErrorCode::not_a_multiple: return "not-a-multiple";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace hz
