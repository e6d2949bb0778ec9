#include "aztec/errors.hpp"

namespace aztec {

const char* to_string(PreconditionViolation::Reason reason) {
  using Reason = PreconditionViolation::Reason;
  switch (reason) {
    case Reason::IndexOutOfRange:
      return "IndexOutOfRange";
    case Reason::VerticalStepsBeforeColumn:
      return "VerticalStepsBeforeColumn";
    case Reason::ResidualVerticalSteps:
      return "ResidualVerticalSteps";
    case Reason::InsufficientVerticalSteps:
      return "InsufficientVerticalSteps";
    case Reason::HeightMismatch:
      return "HeightMismatch";
    case Reason::NotDisjoint:
      return "NotDisjoint";
    case Reason::NotInDomain:
      return "NotInDomain";
  }
  return "Unknown";
}

}  // namespace aztec
