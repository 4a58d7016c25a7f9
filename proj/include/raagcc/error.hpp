#ifndef RAAGCC_ERROR_HPP
#define RAAGCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace raagcc {

enum class ErrorKind {
  InvalidVertex,
  InvalidInput,
  MalformedGenerator,
  MixedClass,
  NotSaturated,
  NotStabilized,
  PreconditionViolated,
  DuplicatePick,
  TooManyPicks,
  ClassNotSymmetric,
  SizeLimit,
  FaceNotFound,
  CollapseOfLoop,
  UnknownEdge,
  DisconnectedInput,
  ImproperSubgroup,
  NotNormal,
  NotStronglyDivided,
  HypothesisViolated,
  TheoremViolation,
  Usage
};

char const *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string const &what)
    : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace raagcc

#endif // RAAGCC_ERROR_HPP
