#include "raagcc/error.hpp"

namespace raagcc {

char const *error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidVertex: return "invalid-vertex";
  case ErrorKind::InvalidInput: return "invalid-input";
  case ErrorKind::MalformedGenerator: return "malformed-generator";
  case ErrorKind::MixedClass: return "mixed-class";
  case ErrorKind::NotSaturated: return "not-saturated";
  case ErrorKind::NotStabilized: return "delta-not-stabilized";
  case ErrorKind::PreconditionViolated: return "preconditions-violated";
  case ErrorKind::DuplicatePick: return "duplicate-pick";
  case ErrorKind::TooManyPicks: return "too-many-picks";
  case ErrorKind::ClassNotSymmetric: return "class-not-symmetric";
  case ErrorKind::SizeLimit: return "size-limit";
  case ErrorKind::FaceNotFound: return "face-not-found";
  case ErrorKind::CollapseOfLoop: return "collapse-of-loop";
  case ErrorKind::UnknownEdge: return "unknown-edge";
  case ErrorKind::DisconnectedInput: return "disconnected-input";
  case ErrorKind::ImproperSubgroup: return "improper-subgroup";
  case ErrorKind::NotNormal: return "not-normal";
  case ErrorKind::NotStronglyDivided: return "not-strongly-divided";
  case ErrorKind::HypothesisViolated: return "hypothesis-violated";
  case ErrorKind::TheoremViolation: return "theorem-violation";
  case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

} // namespace raagcc
