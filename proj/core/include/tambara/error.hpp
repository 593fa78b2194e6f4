#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tambara {

enum class ErrorKind {
  NonAssociative,
  NoIdentity,
  NoInverse,
  MalformedSpec,
  GroupTooLarge,
  NotASubgroup,
  NotAnAction,
  NotEquivariant,
  GroupMismatch,
  AnchorMismatch,
  NotComposable,
  NotACoproduct,
  BaseNotOrbit,
  EndpointMismatch,
  SizeCapExceeded,
  LevelMismatch,
  NotInOm,
  NotOverSigma,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace tambara
