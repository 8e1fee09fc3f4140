#include "error.hpp"

namespace maglab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TypeInvalid: return "TypeInvalid";
    case ErrorCode::MetricViolation: return "MetricViolation";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::IncompatibleBackends: return "IncompatibleBackends";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::PossiblySingular: return "PossiblySingular";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ConductorCap: return "ConductorCap";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace maglab
