#pragma once

#include <stdexcept>
#include <string>

namespace summ {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct EmptyBody : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct DuplicateId : Error {
  using Error::Error;
};
struct EmptyDocument : Error {
  using Error::Error;
};
struct EmptyVocabulary : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct EmptyReference : Error {
  using Error::Error;
};
struct MissingReference : Error {
  using Error::Error;
};
struct DegenerateVariance : Error {
  using Error::Error;
};
struct SolverError : Error {
  using Error::Error;
};

}  // namespace summ
