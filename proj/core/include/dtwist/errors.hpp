#pragma once
#include <stdexcept>
#include <string>

namespace dtwist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed (words, automorphism files, graph files,
// presentation files).
struct ParseError : Error {
  using Error::Error;
};

// A tuple of words that was claimed to be a basis is not one.
struct NotAnAutomorphism : Error {
  using Error::Error;
};

// A structural invariant of a value (graph of groups, gog automorphism,
// presentation, ...) fails to hold.
struct ValidationError : Error {
  using Error::Error;
};

} // namespace dtwist
