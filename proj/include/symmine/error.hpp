#pragma once

#include <stdexcept>
#include <string>

namespace symmine {

// Bad user input: malformed pattern/graph text, unknown pattern name,
// size guards, invalid schedule. CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures. CLI maps this to exit code 1.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A count does not fit in 64 bits. CLI maps this to exit code 3.
struct CountOverflowError : std::runtime_error {
  explicit CountOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace symmine
