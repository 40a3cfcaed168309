#pragma once

#include <stdexcept>
#include <string>

namespace collab {

/// Input violates a documented contract (bad record, bad parameter).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace collab
