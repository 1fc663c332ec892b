#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

/// Malformed or out-of-contract input (bad file, mismatched rings, I not contained in J, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request that would exceed a configured resource cap (variable count, oracle size guard).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stanley
