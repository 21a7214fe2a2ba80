#pragma once

#include <stdexcept>
#include <string>

namespace dbw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph construction
struct SelfLoopError : Error {
  using Error::Error;
};
struct ParallelEdgeError : Error {
  using Error::Error;
};
struct InvalidEdgeError : Error {
  using Error::Error;
};

// transforms
struct NotIdentifiableError : Error {
  using Error::Error;
};

// layout engines
struct GroundMismatchError : Error {
  using Error::Error;
};
struct GroundTooLargeError : Error {
  using Error::Error;
};

// solvers
struct TooLargeError : Error {
  using Error::Error;
};

// verify harness
struct UnknownCheckError : Error {
  using Error::Error;
};

// text / structured input
struct ParseError : Error {
  int line = 0;
  ParseError(int ln, const std::string& msg)
      : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace dbw
