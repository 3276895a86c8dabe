#pragma once

#include <stdexcept>
#include <string>

namespace addlab {

// Thrown when a guarded size limit is exceeded (enumeration bounds,
// composite-state dimension caps). Argument and domain violations use
// std::invalid_argument and std::domain_error respectively.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace addlab
