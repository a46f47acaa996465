#ifndef RLOOP_ERROR_HPP
#define RLOOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rloop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural axiom failed (table not a right loop, transversal not an NRT, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input text.
struct ParseError : Error {
  using Error::Error;
};

// A configured size cap was exceeded before the computation finished.
struct CapError : Error {
  using Error::Error;
};

}  // namespace rloop

#endif
