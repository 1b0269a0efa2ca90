#pragma once

#include <stdexcept>
#include <string>

namespace hyperell {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERELL_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

HYPERELL_DEFINE_ERROR(InvalidGraph);
HYPERELL_DEFINE_ERROR(DisconnectedGraph);
HYPERELL_DEFINE_ERROR(Unstabilizable);
HYPERELL_DEFINE_ERROR(UnknownEdge);
HYPERELL_DEFINE_ERROR(TypeMismatch);
HYPERELL_DEFINE_ERROR(OutOfRange);
HYPERELL_DEFINE_ERROR(OddLeafTotal);
HYPERELL_DEFINE_ERROR(NotATree);
HYPERELL_DEFINE_ERROR(NotLyndon);
HYPERELL_DEFINE_ERROR(MixedMultidegree);
HYPERELL_DEFINE_ERROR(TooLarge);
HYPERELL_DEFINE_ERROR(LevelZero);
HYPERELL_DEFINE_ERROR(ParseError);
HYPERELL_DEFINE_ERROR(FailedCertificate);

#undef HYPERELL_DEFINE_ERROR

}  // namespace hyperell
