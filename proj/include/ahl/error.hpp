#pragma once

#include <stdexcept>
#include <string>

namespace ahl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a result would depend on data outside the computed truncation.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahl
