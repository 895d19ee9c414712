#include "polyprod/errors.hpp"

namespace polyprod {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotAShelling: return "NotAShelling";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::GhostVertex: return "GhostVertex";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace polyprod
