#pragma once

#include <stdexcept>
#include <string>

namespace taucat {

// Thrown for malformed or inconsistent input data (bad tables, non-primes,
// ragged tensors, cochains that are not cocycles, ...). Negative
// mathematical answers are never reported through exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace taucat
