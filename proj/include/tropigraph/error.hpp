#pragma once

#include <stdexcept>
#include <string>

namespace tropigraph {

// Base of every error raised by the library. The CLI maps any Error to exit
// code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TROPIGRAPH_DEFINE_ERROR(Name)        \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

TROPIGRAPH_DEFINE_ERROR(MixedInfinity);
TROPIGRAPH_DEFINE_ERROR(DimensionMismatch);
TROPIGRAPH_DEFINE_ERROR(VertexCountMismatch);
TROPIGRAPH_DEFINE_ERROR(VertexMismatch);
TROPIGRAPH_DEFINE_ERROR(BadParameter);
TROPIGRAPH_DEFINE_ERROR(BadSpec);
TROPIGRAPH_DEFINE_ERROR(TooLarge);
TROPIGRAPH_DEFINE_ERROR(ParseError);
TROPIGRAPH_DEFINE_ERROR(NotThreshold);
TROPIGRAPH_DEFINE_ERROR(InvalidCover);
TROPIGRAPH_DEFINE_ERROR(InvalidInputRepresentation);
TROPIGRAPH_DEFINE_ERROR(InvalidRepresentation);

#undef TROPIGRAPH_DEFINE_ERROR

}  // namespace tropigraph
