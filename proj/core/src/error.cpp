#include "tambara/error.hpp"

namespace tambara {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::AnchorMismatch: return "AnchorMismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotACoproduct: return "NotACoproduct";
    case ErrorKind::BaseNotOrbit: return "BaseNotOrbit";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotInOm: return "NotInOm";
    case ErrorKind::NotOverSigma: return "NotOverSigma";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tambara
